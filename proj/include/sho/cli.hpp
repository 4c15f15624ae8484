#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "sho/analysis.hpp"
#include "sho/basis.hpp"
#include "sho/oracle.hpp"
#include "sho/solver.hpp"
#include "sho/tables.hpp"

namespace sho {

enum class Subcommand { solve, table, matrix, oracle, converge };
enum class OutputFormat { text, csv, json };

// Exit codes: 0 success, 1 usage, 2 domain error, 3 non-convergence (failed
// bracketing/stiffness included).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitNoConverge = 3;

struct JobConfig {
    Subcommand subcommand = Subcommand::solve;
    ModelSpec model;
    int D = 10;
    bool optimize_A = true;
    std::optional<double> fixed_A;  // set when --A <value> was given
    int levels = 1;                 // eigenvalues shown; target level = levels-1
    int digits = 6;
    OutputFormat output_format = OutputFormat::text;
    std::optional<TableId> table_id;
    // parse metadata: --digits switches `solve` into convergence-study mode,
    // and an explicit --dim then caps the basis-size schedule.
    bool digits_given = false;
    bool dim_given = false;
};

// JSON converters for the result types; parse(render(x)) == x field by field.
nlohmann::json spectrum_to_json(const SpectrumResult& r);
SpectrumResult spectrum_from_json(const nlohmann::json& j);
nlohmann::json oracle_to_json(const OracleResult& r);
OracleResult oracle_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const ConvergenceReport& r);
ConvergenceReport report_from_json(const nlohmann::json& j);

// Executes a parsed job, writing results to `out` and diagnostics to `err`.
int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err);

// Full front end: parse argv, run, map exceptions to exit codes.
int run_cli(int argc, char** argv);

}  // namespace sho
