#include "plunge/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "plunge/errors.hpp"
#include "plunge/numfmt.hpp"

namespace plunge {

namespace {

std::string location(const std::string& origin, std::size_t line_no) {
    return origin + ":" + std::to_string(line_no) + ": ";
}

// Splits one CSV line on commas. The formats carry no quoting or escapes.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

// Full-string strict double parse; rejects NaN/inf and trailing junk.
std::optional<double> parse_value(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) return std::nullopt;
    return value;
}

// Reads a logical line, tolerating CRLF endings.
bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

}  // namespace

void IngestPolicy::validate() const {
    if (min_days_per_month < 2) {
        throw InputError("ingest policy: min_days_per_month must be at least 2");
    }
}

std::optional<std::size_t> PricePanel::entity_index(std::string_view name) const {
    for (std::size_t i = 0; i < entities.size(); ++i) {
        if (entities[i] == name) return i;
    }
    return std::nullopt;
}

std::optional<double> PESeries::at(const MonthKey& m) const {
    const auto it = std::lower_bound(months.begin(), months.end(), m);
    if (it == months.end() || *it != m) return std::nullopt;
    return values[static_cast<std::size_t>(it - months.begin())];
}

PricePanel load_price_panel(const std::string& path, const IngestPolicy& policy) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open price file: " + path);
    return parse_price_panel(in, policy, path);
}

PricePanel parse_price_panel(std::istream& in, const IngestPolicy& policy,
                             const std::string& origin) {
    policy.validate();

    std::string line;
    std::size_t line_no = 0;
    if (!next_line(in, line)) throw InputError(origin + ": empty file");
    ++line_no;

    const auto header = split_fields(line);
    if (header.size() < 2 || header[0] != "date") {
        throw InputError(location(origin, line_no) +
                         "malformed header, expected \"date,<entity>,...\"");
    }

    PricePanel panel;
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i].empty()) {
            throw InputError(location(origin, line_no) + "empty entity name in header");
        }
        panel.entities.emplace_back(header[i]);
    }
    const std::set<std::string> unique(panel.entities.begin(), panel.entities.end());
    if (unique.size() != panel.entities.size()) {
        throw InputError(location(origin, line_no) + "duplicate entity name in header");
    }

    const std::size_t n = panel.entities.size();
    std::vector<double> cells;
    std::vector<double> data;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;  // tolerate trailing blank lines
        const auto fields = split_fields(line);
        if (fields.size() != n + 1) {
            throw InputError(location(origin, line_no) + "malformed row, expected " +
                             std::to_string(n + 1) + " fields, got " +
                             std::to_string(fields.size()));
        }
        const auto date = parse_date(fields[0]);
        if (!date) {
            throw InputError(location(origin, line_no) + "malformed date \"" +
                             std::string(fields[0]) + "\"");
        }
        if (!panel.dates.empty() && !(panel.dates.back() < *date)) {
            throw InputError(location(origin, line_no) +
                             "dates not strictly increasing at " + to_string(*date));
        }

        cells.clear();
        bool drop = false;
        for (std::size_t i = 1; i <= n; ++i) {
            if (fields[i].empty()) {
                if (policy.missing_cell_action == MissingCellAction::fail) {
                    throw InputError(location(origin, line_no) + "missing cell for entity \"" +
                                     panel.entities[i - 1] + "\"");
                }
                drop = true;
                break;
            }
            const auto value = parse_value(fields[i]);
            if (!value) {
                throw InputError(location(origin, line_no) + "malformed value \"" +
                                 std::string(fields[i]) + "\"");
            }
            if (!(*value > 0.0)) {
                if (policy.missing_cell_action == MissingCellAction::fail) {
                    throw InputError(location(origin, line_no) + "non-positive price " +
                                     std::string(fields[i]) + " for entity \"" +
                                     panel.entities[i - 1] + "\"");
                }
                drop = true;
                break;
            }
            cells.push_back(*value);
        }
        if (drop) continue;

        panel.dates.push_back(*date);
        data.insert(data.end(), cells.begin(), cells.end());
    }

    if (panel.dates.empty()) {
        throw InputError(origin + ": empty panel after drops");
    }
    panel.values = Matrix(panel.dates.size(), n);
    for (std::size_t t = 0; t < panel.dates.size(); ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            panel.values(t, i) = data[t * n + i];
        }
    }
    return panel;
}

PESeries load_pe_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open PE file: " + path);
    return parse_pe_series(in, path);
}

PESeries parse_pe_series(std::istream& in, const std::string& origin) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(in, line)) throw InputError(origin + ": empty file");
    ++line_no;
    if (line != "month,pe") {
        throw InputError(location(origin, line_no) + "malformed header, expected \"month,pe\"");
    }

    std::vector<std::pair<MonthKey, double>> rows;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 2) {
            throw InputError(location(origin, line_no) + "malformed row, expected 2 fields");
        }
        const auto month = parse_month(fields[0]);
        if (!month) {
            throw InputError(location(origin, line_no) + "malformed month \"" +
                             std::string(fields[0]) + "\"");
        }
        const auto value = parse_value(fields[1]);
        if (!value) {
            throw InputError(location(origin, line_no) + "malformed value \"" +
                             std::string(fields[1]) + "\"");
        }
        if (!(*value > 0.0)) {
            throw InputError(location(origin, line_no) + "non-positive PE " +
                             std::string(fields[1]));
        }
        rows.emplace_back(*month, *value);
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    PESeries series;
    for (const auto& [month, value] : rows) {
        if (!series.months.empty() && series.months.back() == month) {
            throw InputError(origin + ": duplicate month " + to_string(month));
        }
        series.months.push_back(month);
        series.values.push_back(value);
    }
    return series;
}

std::vector<MonthWindow> month_windows(const std::vector<Date>& dates,
                                       const IngestPolicy& policy) {
    policy.validate();
    std::vector<MonthWindow> windows;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= dates.size(); ++i) {
        if (i == dates.size() || month_of(dates[i]) != month_of(dates[start])) {
            MonthWindow w;
            w.month = month_of(dates[start]);
            w.begin = start;
            w.end = i;
            w.valid = w.size() >= static_cast<std::size_t>(policy.min_days_per_month);
            windows.push_back(w);
            start = i;
        }
    }
    return windows;
}

std::vector<MonthWindow> month_windows(const PricePanel& panel, const IngestPolicy& policy) {
    return month_windows(panel.dates, policy);
}

void write_price_panel(const PricePanel& panel, std::ostream& out) {
    out << "date";
    for (const auto& e : panel.entities) out << ',' << e;
    out << '\n';
    for (std::size_t t = 0; t < panel.days(); ++t) {
        out << to_string(panel.dates[t]);
        for (std::size_t i = 0; i < panel.entity_count(); ++i) {
            out << ',' << format_number(panel.values(t, i));
        }
        out << '\n';
    }
}

void write_pe_series(const PESeries& series, std::ostream& out) {
    out << "month,pe\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << to_string(series.months[i]) << ',' << format_number(series.values[i]) << '\n';
    }
}

}  // namespace plunge
