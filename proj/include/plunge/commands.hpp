// commands.hpp
// Library implementations of the CLI subcommands. Each command returns a
// process exit code and prints a one-line diagnostic on failure; argv
// parsing lives in the tool front end.

#pragma once

#include <iosfwd>
#include <set>
#include <string>

#include "plunge/indicator.hpp"
#include "plunge/pipeline.hpp"
#include "plunge/synth.hpp"

namespace plunge {

// Exit codes shared with the CLI front end.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_numeric = 3;

enum class OutputFormat { json, csv, dot };

struct RunConfig {
    std::string price_path;
    std::string pe_path;  // empty: run without PE, labels limited to Normal/Crisis
    AnalysisOptions analysis;
    IndicatorConfig indicator;
    std::string output_dir = "plunge_out";
    std::set<OutputFormat> formats{OutputFormat::json, OutputFormat::csv};

    void validate() const;  // throws InputError
};

// Writes the per-month metrics table, report, connectedness and eigenvalue
// series, parameter-space points and (with the dot format) one graph per
// month. All artifacts are staged to temporaries and renamed together, so a
// failed run leaves no partial outputs.
int cmd_analyze(const RunConfig& config, std::ostream& diag);

// Writes prices.csv, pe.csv and labels.json for a synthetic market.
int cmd_synth(const SynthConfig& config, const std::string& output_dir, std::ostream& diag);

// Prints the DOT graph of one month's adjacency at the given threshold.
int cmd_graph(const RunConfig& config, const MonthKey& month, double threshold,
              std::ostream& out, std::ostream& diag);

}  // namespace plunge
