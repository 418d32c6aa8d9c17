// ingest.hpp
// Loading, validation and calendar alignment of daily price panels and
// monthly PE series from delimited text files.
//
// Price panel CSV (wide):  header "date,<entity1>,<entity2>,...",
//   dates ISO YYYY-MM-DD, plain decimal values, no thousands separators.
// PE CSV: header "month,pe", month as YYYY-MM.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plunge/dates.hpp"
#include "plunge/matrix.hpp"

namespace plunge {

enum class MissingCellAction {
    drop_date,  // drop the whole row so all entities stay on one calendar
    fail,       // reject the file
};

struct IngestPolicy {
    MissingCellAction missing_cell_action = MissingCellAction::drop_date;
    int min_days_per_month = 15;  // months with fewer trading days are excluded downstream
    std::optional<std::string> benchmark_name;

    void validate() const;  // throws InputError; requires min_days_per_month >= 2
};

// Aligned daily closing levels for N entities over T trading days.
// Invariants: all values strictly positive; dates strictly increasing.
struct PricePanel {
    std::vector<std::string> entities;  // column order of `values`
    std::vector<Date> dates;
    Matrix values;  // T x N

    std::size_t days() const { return dates.size(); }
    std::size_t entity_count() const { return entities.size(); }
    std::optional<std::size_t> entity_index(std::string_view name) const;

    bool operator==(const PricePanel&) const = default;
};

// Monthly PE observations, strictly increasing months, positive values.
struct PESeries {
    std::vector<MonthKey> months;
    std::vector<double> values;

    std::size_t size() const { return months.size(); }
    std::optional<double> at(const MonthKey& m) const;

    bool operator==(const PESeries&) const = default;
};

// Contiguous row range [begin, end) of one calendar month.
struct MonthWindow {
    MonthKey month;
    std::size_t begin = 0;
    std::size_t end = 0;
    bool valid = true;  // false when shorter than policy.min_days_per_month

    std::size_t size() const { return end - begin; }
};

PricePanel load_price_panel(const std::string& path, const IngestPolicy& policy);
PricePanel parse_price_panel(std::istream& in, const IngestPolicy& policy,
                             const std::string& origin);

PESeries load_pe_series(const std::string& path);
PESeries parse_pe_series(std::istream& in, const std::string& origin);

// One window per calendar month present, in date order. Windows partition
// the index range; `valid` marks months meeting the day minimum.
std::vector<MonthWindow> month_windows(const std::vector<Date>& dates,
                                       const IngestPolicy& policy);
std::vector<MonthWindow> month_windows(const PricePanel& panel, const IngestPolicy& policy);

// Writers emit the exact formats the loaders consume (12 significant digits).
void write_price_panel(const PricePanel& panel, std::ostream& out);
void write_pe_series(const PESeries& series, std::ostream& out);

}  // namespace plunge
