#include "plunge/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "plunge/errors.hpp"
#include "plunge/numfmt.hpp"

namespace fs = std::filesystem;

namespace plunge {

namespace {

// Stages artifact files as <name>.tmp and renames them all at commit, so
// either every declared output appears or none does.
class ArtifactWriter {
public:
    explicit ArtifactWriter(fs::path dir) : dir_(std::move(dir)) {}

    ArtifactWriter(const ArtifactWriter&) = delete;
    ArtifactWriter& operator=(const ArtifactWriter&) = delete;

    ~ArtifactWriter() {
        std::error_code ec;
        for (const auto& [tmp, final_path] : staged_) fs::remove(tmp, ec);
    }

    void add(const std::string& relative, const std::string& content) {
        const fs::path final_path = dir_ / relative;
        fs::create_directories(final_path.parent_path());
        fs::path tmp = final_path;
        tmp += ".tmp";
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        out.flush();
        if (!out) throw InputError("cannot write " + tmp.string());
        staged_.emplace_back(tmp, final_path);
    }

    void commit() {
        for (const auto& [tmp, final_path] : staged_) fs::rename(tmp, final_path);
        staged_.clear();
    }

private:
    fs::path dir_;
    std::vector<std::pair<fs::path, fs::path>> staged_;
};

template <typename Fn>
int run_guarded(std::ostream& diag, Fn&& fn) {
    try {
        fn();
        return exit_ok;
    } catch (const InputError& e) {
        diag << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const NumericalError& e) {
        diag << "error: " << e.what() << '\n';
        return exit_numeric;
    } catch (const fs::filesystem_error& e) {
        diag << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return exit_numeric;
    }
}

std::string metrics_csv(const std::vector<WindowMetrics>& metrics) {
    std::ostringstream out;
    out << "month,n_days,degenerate,corr_mean,corr_stdev,corr_ratio,corr_min,corr_max,"
           "lecm,second,third\n";
    for (const WindowMetrics& m : metrics) {
        out << to_string(m.month) << ',' << m.n_days << ',' << (m.degenerate ? 1 : 0) << ','
            << format_number(m.corr_summary.mean) << ',' << format_number(m.corr_summary.stdev)
            << ',';
        if (m.corr_summary.ratio) out << format_number(*m.corr_summary.ratio);
        out << ',' << format_number(m.corr_summary.min) << ','
            << format_number(m.corr_summary.max) << ',' << format_number(m.spectrum.lecm) << ','
            << format_number(m.spectrum.second) << ',' << format_number(m.spectrum.third)
            << '\n';
    }
    return out.str();
}

std::string volatility_csv(const std::vector<WindowMetrics>& metrics,
                           const std::vector<std::string>& entities) {
    std::ostringstream out;
    out << "month";
    for (const auto& e : entities) out << ',' << e;
    out << '\n';
    for (const WindowMetrics& m : metrics) {
        out << to_string(m.month);
        for (const double v : m.stats.volatility) out << ',' << format_number(v);
        out << '\n';
    }
    return out.str();
}

std::string connectedness_csv(const std::vector<WindowMetrics>& metrics) {
    std::ostringstream out;
    out << "month,threshold,edge_count,normalized_connectedness\n";
    for (const WindowMetrics& m : metrics) {
        for (const ThresholdConnectedness& c : m.connectedness) {
            out << to_string(m.month) << ',' << format_number(c.threshold) << ',' << c.edge_count
                << ',' << format_number(c.normalized) << '\n';
        }
    }
    return out.str();
}

std::string eigenvalues_csv(const std::vector<WindowMetrics>& metrics) {
    std::ostringstream out;
    out << "month,lecm,second,third,flagged\n";
    for (const SpectrumRow& row : spectrum_series(metrics)) {
        out << to_string(row.month) << ',' << format_number(row.lecm) << ','
            << format_number(row.second) << ',' << format_number(row.third) << ','
            << (row.flagged ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string parameter_space_csv(const Report& report) {
    std::ostringstream out;
    out << "month,lecm,pe,label\n";
    for (const ParameterPoint& p : parameter_space(report)) {
        out << to_string(p.month) << ',' << format_number(p.lecm) << ',' << format_number(p.pe)
            << ',' << to_string(p.label) << '\n';
    }
    return out.str();
}

}  // namespace

void RunConfig::validate() const {
    if (price_path.empty()) throw InputError("run config: no price file configured");
    if (output_dir.empty()) throw InputError("run config: no output directory configured");
    if (formats.empty()) throw InputError("run config: no output formats configured");
    analysis.validate();
    indicator.validate();
}

int cmd_analyze(const RunConfig& config, std::ostream& diag) {
    return run_guarded(diag, [&] {
        config.validate();

        const PricePanel panel = load_price_panel(config.price_path, config.analysis.ingest);

        std::optional<PESeries> pe;
        if (config.pe_path.empty()) {
            diag << "warning: no PE series configured; labels limited to Normal/Crisis\n";
        } else {
            std::ifstream in(config.pe_path);
            if (!in) {
                diag << "warning: PE file not readable (" << config.pe_path
                     << "); labels limited to Normal/Crisis\n";
            } else {
                pe = parse_pe_series(in, config.pe_path);
            }
        }

        const std::vector<WindowMetrics> metrics = compute_window_metrics(panel, config.analysis);
        const Report report = label_series(metrics, pe, config.indicator);

        ArtifactWriter writer{fs::path(config.output_dir)};
        writer.add("metrics.csv", metrics_csv(metrics));
        writer.add("volatility.csv", volatility_csv(metrics, panel.entities));
        writer.add("connectedness.csv", connectedness_csv(metrics));
        writer.add("eigenvalues.csv", eigenvalues_csv(metrics));
        writer.add("parameter_space.csv", parameter_space_csv(report));
        if (config.formats.count(OutputFormat::json) > 0) {
            writer.add("report.json", emit_report(report, ReportFormat::json));
        }
        if (config.formats.count(OutputFormat::csv) > 0) {
            writer.add("report.csv", emit_report(report, ReportFormat::csv));
        }
        if (config.formats.count(OutputFormat::dot) > 0) {
            for (const WindowMetrics& m : metrics) {
                const AdjacencyGraph graph =
                    adjacency(m.corr, config.analysis.thresholds.front());
                writer.add("graphs/" + to_string(m.month) + ".dot",
                           export_graph(graph, GraphFormat::dot));
            }
        }
        writer.commit();
    });
}

int cmd_synth(const SynthConfig& config, const std::string& output_dir, std::ostream& diag) {
    return run_guarded(diag, [&] {
        if (output_dir.empty()) throw InputError("synth: no output directory configured");
        const SynthOutput data = generate(config);

        std::ostringstream prices;
        write_price_panel(data.prices, prices);
        std::ostringstream pe;
        write_pe_series(data.pe, pe);

        nlohmann::ordered_json labels;
        labels["seed"] = config.seed;
        auto months = nlohmann::ordered_json::array();
        for (const auto& [month, regime] : data.regimes) {
            months.push_back({{"month", to_string(month)}, {"regime", to_string(regime)}});
        }
        labels["months"] = std::move(months);

        ArtifactWriter writer{fs::path(output_dir)};
        writer.add("prices.csv", prices.str());
        writer.add("pe.csv", pe.str());
        writer.add("labels.json", labels.dump(2) + "\n");
        writer.commit();
    });
}

int cmd_graph(const RunConfig& config, const MonthKey& month, double threshold,
              std::ostream& out, std::ostream& diag) {
    return run_guarded(diag, [&] {
        if (!(threshold >= 0.0 && threshold <= 1.0)) {
            throw InputError("graph threshold outside [0,1]: " + std::to_string(threshold));
        }
        config.analysis.validate();

        const PricePanel panel = load_price_panel(config.price_path, config.analysis.ingest);
        ReturnPanel returns = log_returns(panel);
        if (!config.analysis.include_benchmark_in_corr && config.analysis.ingest.benchmark_name) {
            returns = drop_entity(returns, *config.analysis.ingest.benchmark_name);
        }

        for (const MonthWindow& window : month_windows(returns.dates, config.analysis.ingest)) {
            if (window.month != month) continue;
            if (!window.valid) break;  // excluded months are not analyzable
            const CorrelationMatrix corr = correlation_matrix(returns, window);
            out << export_graph(adjacency(corr, threshold), GraphFormat::dot);
            return;
        }
        throw InputError("month " + to_string(month) + " not in the analyzed panel");
    });
}

}  // namespace plunge
