#include "plunge/metrics.hpp"

#include <cmath>

#include "plunge/errors.hpp"

namespace plunge {

ReturnPanel log_returns(const PricePanel& panel) {
    if (panel.days() < 2) {
        throw InputError("log returns need at least 2 trading days, got " +
                         std::to_string(panel.days()));
    }
    ReturnPanel returns;
    returns.entities = panel.entities;
    returns.dates.assign(panel.dates.begin() + 1, panel.dates.end());

    const std::size_t n = panel.entity_count();
    returns.values = Matrix(panel.days() - 1, n);
    for (std::size_t t = 0; t + 1 < panel.days(); ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            returns.values(t, i) = std::log(panel.values(t + 1, i)) - std::log(panel.values(t, i));
        }
    }
    return returns;
}

WindowStats window_stats(const ReturnPanel& returns, const MonthWindow& window) {
    if (window.begin >= window.end || window.end > returns.days()) {
        throw InputError("window stats: empty or out-of-range window");
    }
    const std::size_t n = returns.entity_count();
    const std::size_t len = window.size();

    WindowStats stats;
    stats.month = window.month;
    stats.n_days = len;
    stats.mean_return.resize(n);
    stats.volatility.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        // A constant column must report exactly zero volatility; the rounded
        // mean would otherwise leave ~1e-19 residue in the deviations.
        bool constant = true;
        const double first = returns.values(window.begin, i);
        double sum = 0.0;
        for (std::size_t t = window.begin; t < window.end; ++t) {
            const double v = returns.values(t, i);
            if (v != first) constant = false;
            sum += v;
        }
        if (constant) {
            stats.mean_return[i] = first;
            stats.volatility[i] = 0.0;
            continue;
        }
        const double mean = sum / static_cast<double>(len);

        double sq = 0.0;
        for (std::size_t t = window.begin; t < window.end; ++t) {
            const double d = returns.values(t, i) - mean;
            sq += d * d;
        }
        stats.mean_return[i] = mean;
        stats.volatility[i] = std::sqrt(sq / static_cast<double>(len));
    }
    return stats;
}

ReturnPanel drop_entity(const ReturnPanel& returns, std::string_view name) {
    std::size_t drop = returns.entity_count();
    for (std::size_t i = 0; i < returns.entity_count(); ++i) {
        if (returns.entities[i] == name) {
            drop = i;
            break;
        }
    }
    if (drop == returns.entity_count()) return returns;

    ReturnPanel out;
    out.dates = returns.dates;
    for (std::size_t i = 0; i < returns.entity_count(); ++i) {
        if (i != drop) out.entities.push_back(returns.entities[i]);
    }
    out.values = Matrix(returns.days(), out.entities.size());
    for (std::size_t t = 0; t < returns.days(); ++t) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < returns.entity_count(); ++i) {
            if (i != drop) out.values(t, c++) = returns.values(t, i);
        }
    }
    return out;
}

}  // namespace plunge
