#include "hbim/report.hpp"

#include "hbim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace hbim::cli {

namespace {

using nlohmann::json;

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

std::string opt_text(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    return {};
}

json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return round_sig(*d);
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    return nullptr;
}

}  // namespace

double round_sig(double v) {
    if (!std::isfinite(v) || v == 0.0) return v;
    return std::stod(format_number(v));
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, v);
    return buf;
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw DomainError("table: row width does not match the header");
    rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_escape(columns[i]);
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
        os << '\n';
    }
}

nlohmann::json Table::to_json() const {
    json arr = json::array();
    for (const auto& row : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[columns[i]] = cell_json(row[i]);
        arr.push_back(std::move(obj));
    }
    return arr;
}

void Table::write_json(std::ostream& os) const { os << to_json().dump(2) << '\n'; }

bool BenchmarkReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

void to_json(json& j, const BenchmarkReport& r) {
    j = json::object();
    j["tool_version"] = r.tool_version;
    j["config"] = r.config;
    json& sol = j["solutions"] = json::array();
    for (const auto& s : r.solutions) {
        sol.push_back({{"problem", s.problem},
                       {"n", s.n},
                       {"depth_ratio", s.depth_ratio},
                       {"residual", s.residual},
                       {"constraint_1", s.constraint_1},
                       {"constraint_2", s.constraint_2},
                       {"literature_ratio", opt_json(s.literature_ratio)},
                       {"literature_ratio_exponent", opt_json(s.literature_ratio_exponent)}});
    }
    json& con = j["consistency"] = json::array();
    for (const auto& c : r.consistency) {
        con.push_back({{"problem", c.problem},
                       {"constraint_1", c.constraint_1},
                       {"constraint_2", c.constraint_2},
                       {"n", opt_json(c.n)},
                       {"depth_ratio", opt_json(c.depth_ratio)},
                       {"residual", c.residual},
                       {"agrees", c.agrees},
                       {"note", c.note}});
    }
    json& mis = j["mismatch"] = json::array();
    for (const auto& m : r.mismatch) {
        mis.push_back({{"n_label", m.n_label},
                       {"exponent_used", m.exponent_used},
                       {"coefficient", m.coefficient},
                       {"upper_limit", m.upper_limit},
                       {"mode", m.mode},
                       {"E", m.E},
                       {"quad_err", m.quad_err},
                       {"expected", opt_json(m.expected)},
                       {"degraded", m.degraded}});
    }
    json& rat = j["ratios"] = json::array();
    for (const auto& x : r.ratios) {
        rat.push_back({{"mode", x.mode}, {"n_a", x.n_a}, {"n_b", x.n_b}, {"E_a", x.E_a}, {"E_b", x.E_b}, {"ratio", x.ratio}});
    }
    json& dq = j["delta_q"] = json::array();
    for (const auto& d : r.delta_q) dq.push_back({{"n", d.n}, {"delta_Q", d.delta_Q}});
    json& lf = j["langford"] = json::array();
    for (const auto& l : r.langford) {
        lf.push_back({{"problem", l.problem},
                      {"n", l.n},
                      {"alpha_t", l.alpha_t},
                      {"E", l.E},
                      {"e_n", l.e_n},
                      {"converged", l.converged}});
    }
    json& chk = j["checks"] = json::array();
    for (const auto& c : r.checks) {
        chk.push_back({{"name", c.name},
                       {"value", c.value},
                       {"expected", c.expected},
                       {"tolerance", c.tolerance},
                       {"relative", c.relative},
                       {"passed", c.passed}});
    }
    if (r.metadata) j["metadata"] = {{"timestamp", r.metadata->timestamp}, {"threads", r.metadata->threads}};
}

void from_json(const json& j, BenchmarkReport& r) {
    r = BenchmarkReport{};
    r.tool_version = j.at("tool_version").get<std::string>();
    r.config = j.at("config");
    for (const auto& s : j.at("solutions")) {
        r.solutions.push_back({s.at("problem"), s.at("n"), s.at("depth_ratio"), s.at("residual"), s.at("constraint_1"),
                               s.at("constraint_2"), opt_from(s, "literature_ratio"),
                               opt_from(s, "literature_ratio_exponent")});
    }
    for (const auto& c : j.at("consistency")) {
        r.consistency.push_back({c.at("problem"), c.at("constraint_1"), c.at("constraint_2"), opt_from(c, "n"),
                                 opt_from(c, "depth_ratio"), c.at("residual"), c.at("agrees"), c.at("note")});
    }
    for (const auto& m : j.at("mismatch")) {
        r.mismatch.push_back({m.at("n_label"), m.at("exponent_used"), m.at("coefficient"), m.at("upper_limit"),
                              m.at("mode"), m.at("E"), m.at("quad_err"), opt_from(m, "expected"), m.at("degraded")});
    }
    for (const auto& x : j.at("ratios")) {
        r.ratios.push_back({x.at("mode"), x.at("n_a"), x.at("n_b"), x.at("E_a"), x.at("E_b"), x.at("ratio")});
    }
    for (const auto& d : j.at("delta_q")) r.delta_q.push_back({d.at("n"), d.at("delta_Q")});
    for (const auto& l : j.at("langford")) {
        r.langford.push_back({l.at("problem"), l.at("n"), l.at("alpha_t"), l.at("E"), l.at("e_n"), l.at("converged")});
    }
    for (const auto& c : j.at("checks")) {
        r.checks.push_back(
            {c.at("name"), c.at("value"), c.at("expected"), c.at("tolerance"), c.at("relative"), c.at("passed")});
    }
    if (j.contains("metadata")) {
        const auto& m = j.at("metadata");
        r.metadata = Metadata{m.at("timestamp"), m.at("threads")};
    }
}

std::vector<FlatRow> flatten(const BenchmarkReport& r) {
    std::vector<FlatRow> rows;
    auto add = [&](const std::string& section, const std::string& key, const std::string& field, std::string value) {
        rows.push_back({section, key, field, std::move(value)});
    };
    const auto num = format_number;

    add("meta", "tool", "version", r.tool_version);
    if (r.config.is_object()) {
        for (const auto& [k, v] : r.config.items()) add("config", k, "value", v.dump());
    }
    for (const auto& s : r.solutions) {
        add("solution", s.problem, "n", num(s.n));
        add("solution", s.problem, "depth_ratio", num(s.depth_ratio));
        add("solution", s.problem, "residual", num(s.residual));
        add("solution", s.problem, "constraint_1", s.constraint_1);
        add("solution", s.problem, "constraint_2", s.constraint_2);
        add("solution", s.problem, "literature_ratio", opt_text(s.literature_ratio));
        add("solution", s.problem, "literature_ratio_exponent", opt_text(s.literature_ratio_exponent));
    }
    for (const auto& c : r.consistency) {
        const std::string key = c.problem + ":" + c.constraint_1 + "/" + c.constraint_2;
        add("consistency", key, "n", opt_text(c.n));
        add("consistency", key, "depth_ratio", opt_text(c.depth_ratio));
        add("consistency", key, "residual", num(c.residual));
        add("consistency", key, "agrees", bool_text(c.agrees));
        add("consistency", key, "note", c.note);
    }
    for (const auto& m : r.mismatch) {
        const std::string key = m.mode + ":" + num(m.n_label) + ":" + num(m.coefficient);
        add("mismatch", key, "n_label", num(m.n_label));
        add("mismatch", key, "exponent_used", num(m.exponent_used));
        add("mismatch", key, "coefficient", num(m.coefficient));
        add("mismatch", key, "upper_limit", num(m.upper_limit));
        add("mismatch", key, "mode", m.mode);
        add("mismatch", key, "E", num(m.E));
        add("mismatch", key, "quad_err", num(m.quad_err));
        add("mismatch", key, "expected", opt_text(m.expected));
        add("mismatch", key, "degraded", bool_text(m.degraded));
    }
    for (const auto& x : r.ratios) {
        const std::string key = x.mode + ":" + num(x.n_a) + "/" + num(x.n_b);
        add("ratio", key, "E_a", num(x.E_a));
        add("ratio", key, "E_b", num(x.E_b));
        add("ratio", key, "ratio", num(x.ratio));
    }
    for (const auto& d : r.delta_q) add("delta_q", num(d.n), "delta_Q", num(d.delta_Q));
    for (const auto& l : r.langford) {
        const std::string key = l.problem + ":" + num(l.n) + ":" + num(l.alpha_t);
        add("langford", key, "E", num(l.E));
        add("langford", key, "e_n", num(l.e_n));
        add("langford", key, "converged", bool_text(l.converged));
    }
    for (const auto& c : r.checks) {
        add("check", c.name, "value", num(c.value));
        add("check", c.name, "expected", num(c.expected));
        add("check", c.name, "tolerance", num(c.tolerance));
        add("check", c.name, "relative", bool_text(c.relative));
        add("check", c.name, "passed", bool_text(c.passed));
    }
    if (r.metadata) {
        add("meta", "run", "timestamp", r.metadata->timestamp);
        add("meta", "run", "threads", std::to_string(r.metadata->threads));
    }
    return rows;
}

void write_report_csv(std::ostream& os, const BenchmarkReport& r) {
    os << "section,key,field,value\n";
    for (const auto& row : flatten(r)) {
        os << csv_escape(row.section) << ',' << csv_escape(row.key) << ',' << csv_escape(row.field) << ','
           << csv_escape(row.value) << '\n';
    }
}

void write_report_json(std::ostream& os, const BenchmarkReport& r) { os << json(r).dump(2) << '\n'; }

}  // namespace hbim::cli
