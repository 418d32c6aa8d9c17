#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plunge/commands.hpp"
#include "plunge/dates.hpp"
#include "plunge/errors.hpp"
#include "plunge/synth.hpp"

namespace {

const std::map<std::string, plunge::MissingCellAction> missing_actions{
    {"drop-date", plunge::MissingCellAction::drop_date},
    {"fail", plunge::MissingCellAction::fail},
};

const std::map<std::string, plunge::OutputFormat> format_names{
    {"json", plunge::OutputFormat::json},
    {"csv", plunge::OutputFormat::csv},
    {"dot", plunge::OutputFormat::dot},
};

CLI::Validator month_validator() {
    return CLI::Validator(
        [](std::string& value) -> std::string {
            if (plunge::parse_month(value)) return {};
            return "expected YYYY-MM, got '" + value + "'";
        },
        "MONTH");
}

CLI::Validator regimes_validator() {
    return CLI::Validator(
        [](std::string& value) -> std::string {
            if (value.empty()) return "regime string is empty";
            for (const char c : value) {
                if (c != 'N' && c != 'C') {
                    return std::string("regime string may contain only N and C, got '") + c +
                           "'";
                }
            }
            return {};
        },
        "REGIMES");
}

// Shared between analyze and graph, which ingest the same panel shape.
void add_ingest_options(CLI::App& cmd, plunge::RunConfig& config, std::string& benchmark) {
    cmd.add_option("--prices", config.price_path, "Price panel CSV (date,<entity>,...)")
        ->required();
    cmd.add_option("--min-days", config.analysis.ingest.min_days_per_month,
                   "Minimum trading days for a month to be analyzed")
        ->capture_default_str();
    cmd.add_option("--missing", config.analysis.ingest.missing_cell_action,
                   "Missing/invalid cell policy")
        ->transform(CLI::CheckedTransformer(missing_actions, CLI::ignore_case))
        ->default_str("drop-date");
    cmd.add_option("--benchmark", benchmark,
                   "Entity column holding the benchmark index, if any");
    cmd.add_flag(
        "--no-benchmark-corr",
        [&config](std::int64_t) { config.analysis.include_benchmark_in_corr = false; },
        "Exclude the benchmark column from correlation matrices");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cross-correlation network and eigenvalue analytics for daily price panels"};
    app.require_subcommand(1);
    // Config files are processed by the root parser only; subcommand options
    // live under [analyze] / [synth] / [graph] sections, and fallthrough lets
    // `plunge analyze --config f` reach the root-level option.
    app.set_config("--config", "",
                   "Read options from a TOML file ([analyze]/[synth]/[graph] sections)");

    plunge::RunConfig run;
    std::string run_benchmark;
    std::vector<plunge::OutputFormat> formats{plunge::OutputFormat::json,
                                              plunge::OutputFormat::csv};

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Compute monthly correlation, connectedness, spectra and labels");
    analyze->fallthrough();
    add_ingest_options(*analyze, run, run_benchmark);
    analyze->add_option("--pe", run.pe_path, "Benchmark PE series CSV (month,pe)");
    analyze
        ->add_option("-t,--threshold", run.analysis.thresholds,
                     "Correlation threshold(s); first one drives graphs and the report")
        ->check(CLI::Range(0.0, 1.0))
        ->default_str("0.9");
    analyze->add_option("--pe-min", run.indicator.pe_min, "PE gate for the Crash label")
        ->capture_default_str();
    analyze
        ->add_option("--lecm-min", run.indicator.lecm_min,
                     "Largest-eigenvalue gate for Crisis/Crash labels")
        ->capture_default_str();
    analyze
        ->add_option("--mean-corr-min", run.indicator.mean_corr_min,
                     "Mean-correlation level reported as a high-correlation flag")
        ->capture_default_str();
    analyze
        ->add_option("--min-corr-min", run.indicator.min_corr_min,
                     "Minimum-correlation level reported as an all-pairs-up flag")
        ->capture_default_str();
    analyze
        ->add_option("--stdev-max", run.indicator.stdev_max,
                     "Correlation-spread level reported as a low-dispersion flag")
        ->capture_default_str();
    analyze
        ->add_option("--persistence", run.indicator.persistence_months,
                     "Months a non-Normal run must last to be reported as an interval")
        ->capture_default_str();
    analyze->add_option("--out", run.output_dir, "Directory for written artifacts")
        ->envname("PLUNGE_OUT")
        ->capture_default_str();
    analyze->add_option("--format", formats, "Artifact formats to emit")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
        ->default_str("json,csv");

    plunge::SynthConfig synth;
    std::string regimes;
    std::string start = "2006-01";
    std::string synth_out = "plunge_out";

    CLI::App* synth_cmd =
        app.add_subcommand("synth", "Generate a one-factor regime-switching panel");
    synth_cmd->fallthrough();
    synth_cmd->add_option("--regimes", regimes, "Regime per month, e.g. NNNCCN")
        ->required()
        ->check(regimes_validator());
    synth_cmd->add_option("--entities", synth.n_entities, "Number of entities")
        ->capture_default_str();
    synth_cmd->add_option("--days-per-month", synth.days_per_month, "Trading days per month")
        ->capture_default_str();
    synth_cmd->add_option("--beta-normal", synth.beta_normal, "Factor loading, normal months")
        ->capture_default_str();
    synth_cmd->add_option("--beta-crisis", synth.beta_crisis, "Factor loading, crisis months")
        ->capture_default_str();
    synth_cmd->add_option("--sigma-factor", synth.sigma_factor, "Daily factor volatility")
        ->capture_default_str();
    synth_cmd->add_option("--sigma-idio", synth.sigma_idio, "Daily idiosyncratic volatility")
        ->capture_default_str();
    synth_cmd->add_option("--pe-normal", synth.pe_normal, "PE emitted in normal months")
        ->capture_default_str();
    synth_cmd->add_option("--pe-crisis", synth.pe_crisis, "PE emitted in crisis months")
        ->capture_default_str();
    synth_cmd->add_option("--seed", synth.seed, "RNG seed")->capture_default_str();
    synth_cmd->add_option("--start", start, "First generated month (YYYY-MM)")
        ->check(month_validator())
        ->capture_default_str();
    synth_cmd->add_option("--initial-price", synth.initial_price, "Price level at the lead-in day")
        ->capture_default_str();
    synth_cmd->add_option("--out", synth_out, "Directory for written CSVs")
        ->envname("PLUNGE_OUT")
        ->capture_default_str();

    plunge::RunConfig graph_run;
    std::string graph_benchmark;
    std::string graph_month;
    double graph_threshold = 0.9;

    CLI::App* graph = app.add_subcommand(
        "graph", "Print one month's thresholded correlation network as DOT");
    graph->fallthrough();
    add_ingest_options(*graph, graph_run, graph_benchmark);
    graph->add_option("--month", graph_month, "Month to export (YYYY-MM)")
        ->required()
        ->check(month_validator());
    graph->add_option("-t,--threshold", graph_threshold, "Correlation threshold")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? plunge::exit_ok : plunge::exit_usage;
    }

    if (analyze->parsed()) {
        if (!run_benchmark.empty()) run.analysis.ingest.benchmark_name = run_benchmark;
        run.formats = {formats.begin(), formats.end()};
        return plunge::cmd_analyze(run, std::cerr);
    }
    if (synth_cmd->parsed()) {
        synth.months.clear();
        for (const char c : regimes) {
            synth.months.push_back(c == 'C' ? plunge::Regime::crisis : plunge::Regime::normal);
        }
        synth.start_month = *plunge::parse_month(start);
        return plunge::cmd_synth(synth, synth_out, std::cerr);
    }
    if (!graph_benchmark.empty()) graph_run.analysis.ingest.benchmark_name = graph_benchmark;
    return plunge::cmd_graph(graph_run, *plunge::parse_month(graph_month), graph_threshold,
                             std::cout, std::cerr);
}
