// corrnet.hpp
// Per-window Pearson correlation matrices of sector returns, their summary
// statistics, and threshold adjacency graphs with connectedness counts.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plunge/matrix.hpp"
#include "plunge/metrics.hpp"

namespace plunge {

// Symmetric N x N correlation matrix with unit diagonal, entries clamped
// to [-1, 1]. Entities with zero in-window variance are flagged and their
// off-diagonal entries set to 0 instead of failing the window.
struct CorrelationMatrix {
    std::vector<std::string> entities;
    Matrix values;
    std::vector<std::size_t> degenerate_entities;  // ascending indices

    std::size_t size() const { return entities.size(); }
};

// Statistics over the N(N-1)/2 upper-triangle off-diagonal entries.
struct CorrStats {
    double mean = 0.0;
    double stdev = 0.0;            // population
    std::optional<double> ratio;   // stdev/mean, empty when mean == 0
    double min = 0.0;
    double max = 0.0;
};

// Unordered pairs (i < j) with correlation >= threshold.
struct AdjacencyGraph {
    double threshold = 0.0;
    std::vector<std::string> entities;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t edge_count = 0;
    double normalized_connectedness = 0.0;  // edge_count / (N(N-1)/2)
};

enum class GraphFormat { dot, edge_list_json };

// Pearson correlations of in-window returns. Raw overshoot beyond 1e-9
// outside [-1, 1] is a numerical error; smaller overshoot is clamped.
CorrelationMatrix correlation_matrix(const ReturnPanel& returns, const MonthWindow& window);

CorrStats corr_stats(const CorrelationMatrix& c);  // requires N >= 2

AdjacencyGraph adjacency(const CorrelationMatrix& c, double threshold);  // threshold in [0, 1]

// Deterministic text export: nodes in panel order, edges sorted
// lexicographically by name pair.
std::string export_graph(const AdjacencyGraph& graph, GraphFormat format);

}  // namespace plunge
