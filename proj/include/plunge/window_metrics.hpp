// window_metrics.hpp
// Per-calendar-month bundle of everything computed from one window:
// volatilities, correlation matrix and its statistics, eigenvalue
// spectrum, and connectedness at each configured threshold.

#pragma once

#include <vector>

#include "plunge/corrnet.hpp"
#include "plunge/metrics.hpp"
#include "plunge/spectrum.hpp"

namespace plunge {

struct ThresholdConnectedness {
    double threshold = 0.0;
    std::size_t edge_count = 0;
    double normalized = 0.0;
};

struct WindowMetrics {
    MonthKey month;
    std::size_t n_days = 0;
    WindowStats stats;         // over every panel entity
    CorrelationMatrix corr;    // over the correlation entity set
    CorrStats corr_summary;
    SpectrumResult spectrum;
    std::vector<ThresholdConnectedness> connectedness;  // one per threshold, config order
    bool degenerate = false;   // any zero-variance entity this month
};

struct SpectrumRow {
    MonthKey month;
    double lecm = 0.0;
    double second = 0.0;
    double third = 0.0;
    bool flagged = false;  // carries the month's degeneracy flag
};

// One row per month, chronological (input order).
std::vector<SpectrumRow> spectrum_series(const std::vector<WindowMetrics>& metrics);

}  // namespace plunge
