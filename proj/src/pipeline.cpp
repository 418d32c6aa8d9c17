#include "plunge/pipeline.hpp"

#include "plunge/errors.hpp"

namespace plunge {

void AnalysisOptions::validate() const {
    ingest.validate();
    if (thresholds.empty()) throw InputError("analysis options: no thresholds configured");
    for (const double t : thresholds) {
        if (!(t >= 0.0 && t <= 1.0)) {
            throw InputError("analysis options: threshold outside [0,1]: " + std::to_string(t));
        }
    }
}

std::vector<WindowMetrics> compute_window_metrics(const PricePanel& panel,
                                                  const AnalysisOptions& options) {
    options.validate();

    const ReturnPanel returns = log_returns(panel);
    ReturnPanel corr_returns = returns;
    if (!options.include_benchmark_in_corr && options.ingest.benchmark_name) {
        corr_returns = drop_entity(returns, *options.ingest.benchmark_name);
    }
    if (corr_returns.entity_count() < 2) {
        throw InputError("analysis needs at least 2 entities in the correlation set");
    }

    // Windows are grouped on return dates (each return carries the later
    // trading day), so the day minimum applies to returns per month.
    std::vector<WindowMetrics> series;
    for (const MonthWindow& window : month_windows(returns.dates, options.ingest)) {
        if (!window.valid) continue;

        WindowMetrics m;
        m.month = window.month;
        m.n_days = window.size();
        m.stats = window_stats(returns, window);
        m.corr = correlation_matrix(corr_returns, window);
        m.corr_summary = corr_stats(m.corr);
        m.spectrum = eigen_spectrum(m.corr);
        for (const double t : options.thresholds) {
            const AdjacencyGraph graph = adjacency(m.corr, t);
            m.connectedness.push_back(
                {t, graph.edge_count, graph.normalized_connectedness});
        }
        m.degenerate = !m.corr.degenerate_entities.empty();
        series.push_back(std::move(m));
    }
    return series;
}

std::vector<SpectrumRow> spectrum_series(const std::vector<WindowMetrics>& metrics) {
    std::vector<SpectrumRow> rows;
    rows.reserve(metrics.size());
    for (const WindowMetrics& m : metrics) {
        rows.push_back({m.month, m.spectrum.lecm, m.spectrum.second, m.spectrum.third,
                        m.degenerate});
    }
    return rows;
}

}  // namespace plunge
