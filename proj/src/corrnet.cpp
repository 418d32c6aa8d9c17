#include "plunge/corrnet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "plunge/errors.hpp"

namespace plunge {

namespace {

constexpr double overshoot_limit = 1e-9;

}  // namespace

CorrelationMatrix correlation_matrix(const ReturnPanel& returns, const MonthWindow& window) {
    if (window.size() < 2 || window.end > returns.days()) {
        throw InputError("correlation matrix: window shorter than 2 observations");
    }
    const std::size_t n = returns.entity_count();
    const std::size_t len = window.size();

    // Center once per entity; the centered products reproduce the moment
    // form (<RiRj> - mu_i mu_j) / sqrt((<Ri^2>-mu_i^2)(<Rj^2>-mu_j^2)).
    Matrix centered(len, n);
    std::vector<double> variance(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        // Exactly constant columns must land in the degenerate bucket; the
        // rounded mean would otherwise leave ~1e-19 residue in the variance.
        bool constant = true;
        const double first = returns.values(window.begin, i);
        double sum = 0.0;
        for (std::size_t t = 0; t < len; ++t) {
            const double v = returns.values(window.begin + t, i);
            if (v != first) constant = false;
            sum += v;
        }
        if (constant) continue;  // centered column and variance stay zero
        const double mean = sum / static_cast<double>(len);
        double sq = 0.0;
        for (std::size_t t = 0; t < len; ++t) {
            const double d = returns.values(window.begin + t, i) - mean;
            centered(t, i) = d;
            sq += d * d;
        }
        variance[i] = sq / static_cast<double>(len);
    }

    CorrelationMatrix result;
    result.entities = returns.entities;
    result.values = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        result.values(i, i) = 1.0;  // unit diagonal, degenerate entities included
        if (variance[i] == 0.0) result.degenerate_entities.push_back(i);
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (variance[i] == 0.0) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (variance[j] == 0.0) continue;
            double cross = 0.0;
            for (std::size_t t = 0; t < len; ++t) cross += centered(t, i) * centered(t, j);
            const double cov = cross / static_cast<double>(len);
            double corr = cov / std::sqrt(variance[i] * variance[j]);
            if (std::abs(corr) > 1.0 + overshoot_limit || !std::isfinite(corr)) {
                throw NumericalError("correlation overshoot: C(" + result.entities[i] + "," +
                                     result.entities[j] + ") = " + std::to_string(corr));
            }
            corr = std::clamp(corr, -1.0, 1.0);
            result.values(i, j) = corr;
            result.values(j, i) = corr;
        }
    }
    return result;
}

CorrStats corr_stats(const CorrelationMatrix& c) {
    const std::size_t n = c.size();
    if (n < 2) throw InputError("correlation stats need at least 2 entities");

    const std::size_t pairs = n * (n - 1) / 2;
    double sum = 0.0;
    double lo = c.values(0, 1);
    double hi = c.values(0, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = c.values(i, j);
            sum += v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    const double mean = sum / static_cast<double>(pairs);

    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = c.values(i, j) - mean;
            sq += d * d;
        }
    }

    CorrStats stats;
    stats.mean = mean;
    stats.stdev = std::sqrt(sq / static_cast<double>(pairs));
    stats.min = lo;
    stats.max = hi;
    if (mean != 0.0) stats.ratio = stats.stdev / mean;
    return stats;
}

AdjacencyGraph adjacency(const CorrelationMatrix& c, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw InputError("adjacency threshold outside [0,1]: " + std::to_string(threshold));
    }
    AdjacencyGraph graph;
    graph.threshold = threshold;
    graph.entities = c.entities;

    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (c.values(i, j) >= threshold) graph.edges.emplace_back(i, j);
        }
    }
    graph.edge_count = graph.edges.size();
    const std::size_t pairs = n >= 2 ? n * (n - 1) / 2 : 0;
    graph.normalized_connectedness =
        pairs == 0 ? 0.0 : static_cast<double>(graph.edge_count) / static_cast<double>(pairs);
    return graph;
}

std::string export_graph(const AdjacencyGraph& graph, GraphFormat format) {
    // Normalize each edge to (lexicographically smaller name first) and sort,
    // so the export does not depend on entity column order.
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(graph.edges.size());
    for (const auto& [i, j] : graph.edges) {
        std::string a = graph.entities[i];
        std::string b = graph.entities[j];
        if (b < a) std::swap(a, b);
        named.emplace_back(std::move(a), std::move(b));
    }
    std::sort(named.begin(), named.end());

    if (format == GraphFormat::dot) {
        std::ostringstream out;
        out << "graph {\n";
        for (const auto& e : graph.entities) out << "  \"" << e << "\";\n";
        for (const auto& [a, b] : named) out << "  \"" << a << "\" -- \"" << b << "\";\n";
        out << "}\n";
        return out.str();
    }

    nlohmann::ordered_json doc;
    doc["threshold"] = graph.threshold;
    doc["nodes"] = graph.entities;
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : named) edges.push_back({a, b});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

}  // namespace plunge
