#pragma once

#include "resdiv/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace resdiv {

enum class Command { Tau, Count, CharSum, Moments, Delta, Gamma, Variance, Bounds, Conjecture };

std::string command_name(Command c);
std::optional<Command> command_from_name(const std::string& name);

/// One grid dimension: an explicit list, an inclusive range with step, or a
/// power rule floor(q^c) resolved after q is fixed.
struct ValueSpec {
    enum class Kind { List, Range, Power };
    Kind kind = Kind::List;
    std::vector<std::string> list_items;
    std::string range_start, range_end, range_step;
    Rational power_exponent = 0;  // for q^{c}
};

/// Declarative parameter grid for one command.
struct ExperimentConfig {
    Command command = Command::Tau;
    std::map<std::string, ValueSpec> grid;
    unsigned parallelism = 1;
    std::string format = "csv";  // csv | json
    std::string output_path;     // empty or "-" = standard output
    std::uint64_t seed = 0;      // reserved; the pipeline is deterministic
    bool timing = false;         // per-row wall time is opt-in to keep
                                 // emitted bytes run-independent
};

struct ParseResult {
    std::optional<ExperimentConfig> config;  // set iff errors is empty
    std::vector<std::string> errors;         // every validation error, not just the first
};

/// Parses a flat key=value document ('#' starts a comment).  Lists are
/// comma-separated, ranges are start..end..step, power rules are q^{c}.
ParseResult parse_config(const std::string& text);

/// Same validation applied to an already tokenized document; the CLI merges
/// shorthand flags over a config file and funnels them through here.
ParseResult build_config(const std::map<std::string, std::string>& kv);

/// The tokenizer behind parse_config; syntax problems append to errors.
std::map<std::string, std::string> parse_key_values(const std::string& text,
                                                    std::vector<std::string>& errors);

/// One resolved grid point.
struct GridPoint {
    std::map<std::string, std::uint64_t> ints;
    std::map<std::string, double> reals;
};

/// Cartesian product of the resolved parameter lists, dimensions ordered by
/// parameter name, last dimension fastest; power rules resolve per q before
/// product formation.
std::vector<GridPoint> resolve_grid(const ExperimentConfig& config);

/// floor(q^(num/den)) computed exactly in big-integer arithmetic.
std::uint64_t floor_power(std::uint64_t q, const Rational& exponent);

struct ReportRow {
    std::map<std::string, std::string> params;  // resolved parameters, rendered
    std::optional<Rational> statistic;          // exact statistics
    std::optional<double> statistic_value;      // floating statistics (charsum, moments)
    std::map<std::string, double> bounds;
    std::optional<double> minimal_slack;
    double ms = 0.0;
    std::string error;  // empty for a clean row
};

/// One row per grid point in grid order, independent of worker count; a
/// failing point becomes an error row and the scan continues.
std::vector<ReportRow> run_scan(const ExperimentConfig& config);

/// CSV (RFC-4180-style quoting) or JSON array with a fixed, documented
/// column order; byte-stable for fixed rows.
std::string emit_report(const std::vector<ReportRow>& rows, const std::string& format);

/// The fixed parameter column order used by emit_report.
const std::vector<std::string>& report_param_columns();

}  // namespace resdiv
