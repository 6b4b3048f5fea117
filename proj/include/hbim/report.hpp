#pragma once

#include "json.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace hbim::cli {

inline constexpr const char* kToolVersion = "hbim 1.0.0";
inline constexpr int kSignificantDigits = 12;

/// Rounds to 12 significant digits so text and JSON emissions carry the same number.
double round_sig(double v);

/// "%.12g" formatting used for every number written by the tool.
std::string format_number(double v);

/// A cell is empty, a number or a string.
using Cell = std::variant<std::monostate, double, std::string>;

/// Flat table written as CSV (header row, LF endings) or as a JSON array of objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
    nlohmann::json to_json() const;
};

struct SolutionRecord {
    std::string problem;
    double n;
    double depth_ratio;
    double residual;
    std::string constraint_1;
    std::string constraint_2;
    std::optional<double> literature_ratio;
    std::optional<double> literature_ratio_exponent;
};

struct ConsistencyRecord {
    std::string problem;
    std::string constraint_1;
    std::string constraint_2;
    std::optional<double> n;
    std::optional<double> depth_ratio;
    double residual;
    bool agrees;
    std::string note;
};

struct MismatchRecord {
    double n_label;
    double exponent_used;
    double coefficient;
    double upper_limit;
    std::string mode;
    double E;
    double quad_err;
    std::optional<double> expected;
    bool degraded;
};

struct RatioRecord {
    std::string mode;
    double n_a;
    double n_b;
    double E_a;
    double E_b;
    double ratio;
};

struct DeltaQRecord {
    double n;
    double delta_Q;
};

struct LangfordRecord {
    std::string problem;
    double n;
    double alpha_t;
    double E;
    double e_n;
    bool converged;
};

struct CheckRecord {
    std::string name;
    double value;
    double expected;
    double tolerance;
    bool relative;
    bool passed;
};

struct Metadata {
    std::string timestamp;
    int threads;
};

struct BenchmarkReport {
    std::string tool_version = kToolVersion;
    nlohmann::json config;
    std::vector<SolutionRecord> solutions;
    std::vector<ConsistencyRecord> consistency;
    std::vector<MismatchRecord> mismatch;
    std::vector<RatioRecord> ratios;
    std::vector<DeltaQRecord> delta_q;
    std::vector<LangfordRecord> langford;
    std::vector<CheckRecord> checks;
    std::optional<Metadata> metadata;

    bool all_passed() const;
};

void to_json(nlohmann::json& j, const BenchmarkReport& r);
void from_json(const nlohmann::json& j, BenchmarkReport& r);

/// Long-form rows (section, key, field, value) shared by the CSV emission and tests.
struct FlatRow {
    std::string section;
    std::string key;
    std::string field;
    std::string value;

    bool operator==(const FlatRow&) const = default;
};

std::vector<FlatRow> flatten(const BenchmarkReport& r);

void write_report_csv(std::ostream& os, const BenchmarkReport& r);
void write_report_json(std::ostream& os, const BenchmarkReport& r);

}  // namespace hbim::cli
