// metrics.hpp
// Daily log returns and per-window return statistics. Volatility uses
// population normalization (1/T over the window, not 1/(T-1)).

#pragma once

#include <string_view>
#include <vector>

#include "plunge/ingest.hpp"

namespace plunge {

// Log returns of a price panel. Row t holds ln P(t+1) - ln P(t) and is
// dated by the later trading day, so month membership is unambiguous.
struct ReturnPanel {
    std::vector<std::string> entities;  // same order as the source panel
    std::vector<Date> dates;            // source dates minus the first
    Matrix values;                      // (T-1) x N

    std::size_t days() const { return dates.size(); }
    std::size_t entity_count() const { return entities.size(); }
};

struct WindowStats {
    MonthKey month;
    std::vector<double> mean_return;  // per entity
    std::vector<double> volatility;   // per entity, >= 0
    std::size_t n_days = 0;
};

ReturnPanel log_returns(const PricePanel& panel);  // requires T >= 2

WindowStats window_stats(const ReturnPanel& returns, const MonthWindow& window);

// Copy of the panel without the named entity; no-op if the name is absent.
ReturnPanel drop_entity(const ReturnPanel& returns, std::string_view name);

}  // namespace plunge
