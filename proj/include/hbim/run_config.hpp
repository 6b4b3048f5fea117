#pragma once

#include "hbim/error_metrics.hpp"
#include "hbim/hbim_core.hpp"
#include "hbim/medium.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hbim::cli {

enum class OutputFormat { csv, json };

/// Everything a subcommand needs. Mirrors the JSON config file one-to-one.
struct RunConfig {
    ProblemClass problem = ProblemClass::pt;

    std::optional<double> conductivity;
    std::optional<double> density;
    std::optional<double> heat_capacity;
    std::optional<double> diffusivity;

    double surface_temp = 1.0;
    double far_temp = 0.0;
    double flux = 1.0;
    double thickness = 1.0;
    double radius = 1.0;

    std::vector<double> times{1.0};
    std::vector<double> xs;
    std::vector<double> exponents;

    ErrorMode mode = ErrorMode::literal;
    bool published_rows = false;
    std::optional<std::pair<double, double>> ratio;
    bool extra_columns = false;

    double tolerance = 1e-12;
    OutputFormat format = OutputFormat::csv;
    std::string out_path;
    bool no_metadata = false;
    int threads = 1;

    /// Missing properties default to 1. A lone diffusivity keeps conductivity and
    /// density and derives the heat capacity so the medium stays consistent.
    Medium medium() const;

    BoundaryProblem boundary_problem() const;

    /// Throws DomainError on an unusable configuration.
    void validate() const;
};

std::string to_string(ProblemClass cls);
ProblemClass parse_problem(const std::string& s);
ErrorMode parse_mode(const std::string& s);
OutputFormat parse_format(const std::string& s);

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

RunConfig load_config_file(const std::string& path);

}  // namespace hbim::cli
