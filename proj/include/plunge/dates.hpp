// dates.hpp
// Calendar types for daily trading data: Date (YYYY-MM-DD) and
// MonthKey (YYYY-MM). Both order lexicographically by time.

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace plunge {

struct MonthKey {
    int year = 0;
    int month = 0;  // 1..12

    auto operator<=>(const MonthKey&) const = default;
};

struct Date {
    int year = 0;
    int month = 0;  // 1..12
    int day = 0;    // 1..31, checked against the month

    auto operator<=>(const Date&) const = default;
};

int days_in_month(int year, int month);
bool valid_date(const Date& d);

inline MonthKey month_of(const Date& d) { return MonthKey{d.year, d.month}; }
MonthKey next_month(const MonthKey& m);
MonthKey prev_month(const MonthKey& m);

std::string to_string(const Date& d);      // YYYY-MM-DD
std::string to_string(const MonthKey& m);  // YYYY-MM

// Strict parsers: fixed-width ISO forms only, calendar-validated.
std::optional<Date> parse_date(std::string_view text);
std::optional<MonthKey> parse_month(std::string_view text);

}  // namespace plunge
