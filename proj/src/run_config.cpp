#include "hbim/run_config.hpp"

#include "hbim/errors.hpp"

#include <cmath>
#include <fstream>

namespace hbim::cli {

std::string to_string(ProblemClass cls) {
    switch (cls) {
        case ProblemClass::pt: return "pt";
        case ProblemClass::pf: return "pf";
        case ProblemClass::overspecified: return "overspec";
        case ProblemClass::sphere: return "sphere";
    }
    return "unknown";
}

ProblemClass parse_problem(const std::string& s) {
    if (s == "pt") return ProblemClass::pt;
    if (s == "pf") return ProblemClass::pf;
    if (s == "overspec") return ProblemClass::overspecified;
    if (s == "sphere") return ProblemClass::sphere;
    throw DomainError("unknown problem '" + s + "' (expected pt, pf, overspec or sphere)");
}

ErrorMode parse_mode(const std::string& s) {
    if (s == "literal") return ErrorMode::literal;
    if (s == "corrected") return ErrorMode::corrected;
    throw DomainError("unknown mode '" + s + "' (expected literal or corrected)");
}

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw DomainError("unknown format '" + s + "' (expected csv or json)");
}

Medium RunConfig::medium() const {
    const double lambda = conductivity.value_or(1.0);
    const double rho = density.value_or(1.0);
    if (diffusivity && !heat_capacity) {
        const double cp = lambda / (rho * *diffusivity);
        return Medium(lambda, rho, cp, *diffusivity);
    }
    const double cp = heat_capacity.value_or(1.0);
    if (diffusivity) return Medium(lambda, rho, cp, *diffusivity);
    return Medium::from_properties(lambda, rho, cp);
}

BoundaryProblem RunConfig::boundary_problem() const {
    switch (problem) {
        case ProblemClass::pt: return PtProblem{surface_temp, far_temp};
        case ProblemClass::pf: return PfProblem{flux, far_temp};
        case ProblemClass::overspecified: return OverSpecifiedProblem{surface_temp, far_temp, flux, thickness};
        case ProblemClass::sphere: return SpherePtProblem{radius, surface_temp, far_temp};
    }
    throw DomainError("unknown problem class");
}

void RunConfig::validate() const {
    (void)medium();
    hbim::validate(boundary_problem());
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0) || !std::isfinite(times[i])) throw DomainError("time points must be finite and > 0");
        if (i > 0 && !(times[i] > times[i - 1])) throw DomainError("time points must be strictly ascending");
    }
    for (double x : xs) {
        if (!std::isfinite(x)) throw DomainError("x points must be finite");
    }
    for (double n : exponents) {
        if (!(n > 1.0) || !std::isfinite(n)) throw DomainError("exponents must be finite and > 1");
    }
    if (!(tolerance > 0.0)) throw DomainError("--tol must be > 0");
    if (threads < 1) throw DomainError("--threads must be >= 1");
}

void to_json(nlohmann::json& j, const RunConfig& c) {
    auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    j = nlohmann::json{
        {"problem", to_string(c.problem)},
        {"lambda", opt(c.conductivity)},
        {"rho", opt(c.density)},
        {"cp", opt(c.heat_capacity)},
        {"alpha", opt(c.diffusivity)},
        {"ts", c.surface_temp},
        {"tinf", c.far_temp},
        {"flux", c.flux},
        {"h0", c.thickness},
        {"r0", c.radius},
        {"time", c.times},
        {"x", c.xs},
        {"n", c.exponents},
        {"mode", to_string(c.mode)},
        {"rows", c.published_rows ? nlohmann::json("paper") : nlohmann::json(nullptr)},
        {"ratio", c.ratio ? nlohmann::json{c.ratio->first, c.ratio->second} : nlohmann::json(nullptr)},
        {"extra", c.extra_columns},
        {"tol", c.tolerance},
        {"format", c.format == OutputFormat::csv ? "csv" : "json"},
        {"out", c.out_path},
        {"no_metadata", c.no_metadata},
        {"threads", c.threads},
    };
}

void from_json(const nlohmann::json& j, RunConfig& c) {
    if (!j.is_object()) throw DomainError("config: top level must be a JSON object");
    auto opt = [&](const char* key, std::optional<double>& dst) {
        if (j.contains(key) && !j.at(key).is_null()) dst = j.at(key).get<double>();
    };
    auto num = [&](const char* key, double& dst) {
        if (j.contains(key)) dst = j.at(key).get<double>();
    };
    try {
        if (j.contains("problem")) c.problem = parse_problem(j.at("problem").get<std::string>());
        opt("lambda", c.conductivity);
        opt("rho", c.density);
        opt("cp", c.heat_capacity);
        opt("alpha", c.diffusivity);
        num("ts", c.surface_temp);
        num("tinf", c.far_temp);
        num("flux", c.flux);
        num("h0", c.thickness);
        num("r0", c.radius);
        if (j.contains("time")) c.times = j.at("time").get<std::vector<double>>();
        if (j.contains("x")) c.xs = j.at("x").get<std::vector<double>>();
        if (j.contains("n")) c.exponents = j.at("n").get<std::vector<double>>();
        if (j.contains("mode")) c.mode = parse_mode(j.at("mode").get<std::string>());
        if (j.contains("rows") && !j.at("rows").is_null()) {
            if (j.at("rows").get<std::string>() != "paper") throw DomainError("config: rows must be \"paper\"");
            c.published_rows = true;
        }
        if (j.contains("ratio") && !j.at("ratio").is_null()) {
            const auto r = j.at("ratio").get<std::vector<double>>();
            if (r.size() != 2) throw DomainError("config: ratio must hold two values");
            c.ratio = std::make_pair(r[0], r[1]);
        }
        if (j.contains("extra")) c.extra_columns = j.at("extra").get<bool>();
        num("tol", c.tolerance);
        if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
        if (j.contains("out")) c.out_path = j.at("out").get<std::string>();
        if (j.contains("no_metadata")) c.no_metadata = j.at("no_metadata").get<bool>();
        if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config: ") + e.what());
    }
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("config " + path + ": " + e.what());
    }
    return j.get<RunConfig>();
}

}  // namespace hbim::cli
