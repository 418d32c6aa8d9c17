#include "plunge/dates.hpp"

#include <cctype>
#include <cstdio>

namespace plunge {

namespace {

bool is_leap(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

// Parses exactly `width` digits starting at `pos`; advances pos on success.
std::optional<int> take_digits(std::string_view text, std::size_t& pos, int width) {
    if (pos + static_cast<std::size_t>(width) > text.size()) return std::nullopt;
    int value = 0;
    for (int i = 0; i < width; ++i) {
        const char c = text[pos + static_cast<std::size_t>(i)];
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        value = value * 10 + (c - '0');
    }
    pos += static_cast<std::size_t>(width);
    return value;
}

}  // namespace

int days_in_month(int year, int month) {
    static constexpr int table[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) return 0;
    if (month == 2 && is_leap(year)) return 29;
    return table[month - 1];
}

bool valid_date(const Date& d) {
    return d.month >= 1 && d.month <= 12 && d.day >= 1 && d.day <= days_in_month(d.year, d.month);
}

MonthKey next_month(const MonthKey& m) {
    return m.month == 12 ? MonthKey{m.year + 1, 1} : MonthKey{m.year, m.month + 1};
}

MonthKey prev_month(const MonthKey& m) {
    return m.month == 1 ? MonthKey{m.year - 1, 12} : MonthKey{m.year, m.month - 1};
}

std::string to_string(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

std::string to_string(const MonthKey& m) {
    char buf[12];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", m.year, m.month);
    return buf;
}

std::optional<Date> parse_date(std::string_view text) {
    std::size_t pos = 0;
    const auto y = take_digits(text, pos, 4);
    if (!y || pos >= text.size() || text[pos] != '-') return std::nullopt;
    ++pos;
    const auto m = take_digits(text, pos, 2);
    if (!m || pos >= text.size() || text[pos] != '-') return std::nullopt;
    ++pos;
    const auto d = take_digits(text, pos, 2);
    if (!d || pos != text.size()) return std::nullopt;
    const Date date{*y, *m, *d};
    if (!valid_date(date)) return std::nullopt;
    return date;
}

std::optional<MonthKey> parse_month(std::string_view text) {
    std::size_t pos = 0;
    const auto y = take_digits(text, pos, 4);
    if (!y || pos >= text.size() || text[pos] != '-') return std::nullopt;
    ++pos;
    const auto m = take_digits(text, pos, 2);
    if (!m || pos != text.size()) return std::nullopt;
    if (*m < 1 || *m > 12) return std::nullopt;
    return MonthKey{*y, *m};
}

}  // namespace plunge
