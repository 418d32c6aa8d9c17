// pipeline.hpp
// Orchestrates returns -> monthly windows -> correlation, spectrum and
// connectedness, producing the chronological WindowMetrics series.

#pragma once

#include <vector>

#include "plunge/ingest.hpp"
#include "plunge/window_metrics.hpp"

namespace plunge {

struct AnalysisOptions {
    IngestPolicy ingest;
    std::vector<double> thresholds{0.9};     // adjacency thresholds, first one is primary
    bool include_benchmark_in_corr = true;   // drop ingest.benchmark_name column when false

    void validate() const;  // throws InputError
};

// Months shorter than the policy minimum are excluded from the output.
std::vector<WindowMetrics> compute_window_metrics(const PricePanel& panel,
                                                  const AnalysisOptions& options);

}  // namespace plunge
