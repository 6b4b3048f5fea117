#pragma once

#include "hbim/report.hpp"
#include "hbim/run_config.hpp"

#include <ostream>

namespace hbim::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kNumericalError = 2, kBenchmarkRegression = 3 };

Table solve_table(const RunConfig& config);
Table profile_table(const RunConfig& config);
Table error_table(const RunConfig& config);

/// Full reproduction run. Rows are computed on `config.threads` workers and
/// collected in a fixed order, so the report does not depend on scheduling.
BenchmarkReport run_benchmark(const RunConfig& config);

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_profile(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_error(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv, dispatches a subcommand and maps failures to exit codes.
/// Data goes to `out` (or --out), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hbim::cli
