#include "fxent/date.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "fxent/error.hpp"

namespace fxent {

namespace {

int parse_int(std::string_view s) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ConfigError("not a number: '" + std::string(s) + "'");
    return out;
}

Date make_checked(int y, int m, int d, std::string_view original) {
    Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
              std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok())
        throw ConfigError("invalid calendar date: '" + std::string(original) + "'");
    return date;
}

}  // namespace

Date parse_date(std::string_view text, DateFormat format) {
    const char sep = format == DateFormat::iso ? '-' : '/';
    auto p1 = text.find(sep);
    auto p2 = p1 == std::string_view::npos ? p1 : text.find(sep, p1 + 1);
    if (p2 == std::string_view::npos)
        throw ConfigError("unparseable date: '" + std::string(text) + "'");
    const int a = parse_int(text.substr(0, p1));
    const int b = parse_int(text.substr(p1 + 1, p2 - p1 - 1));
    const int c = parse_int(text.substr(p2 + 1));
    if (format == DateFormat::iso) return make_checked(a, b, c, text);
    return make_checked(c, a, b, text);  // MM/DD/YYYY
}

std::string format_date(Date d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
    return buf;
}

Date first_day_of_month(std::chrono::year_month ym) {
    return Date{ym.year(), ym.month(), std::chrono::day{1}};
}

Date last_day_of_month(std::chrono::year_month ym) {
    return Date{std::chrono::year_month_day_last{ym.year(),
                                                 std::chrono::month_day_last{ym.month()}}};
}

namespace {

// Boundary spec is either a full ISO date or "YYYY-MM".
Date parse_boundary(std::string_view spec, bool is_start) {
    const auto dashes = std::count(spec.begin(), spec.end(), '-');
    if (dashes == 2) return parse_date(spec, DateFormat::iso);
    if (dashes == 1) {
        auto p = spec.find('-');
        const int y = parse_int(spec.substr(0, p));
        const int m = parse_int(spec.substr(p + 1));
        if (m < 1 || m > 12)
            throw ConfigError("invalid month in '" + std::string(spec) + "'");
        std::chrono::year_month ym{std::chrono::year{y},
                                   std::chrono::month{static_cast<unsigned>(m)}};
        return is_start ? first_day_of_month(ym) : last_day_of_month(ym);
    }
    throw ConfigError("unparseable window boundary: '" + std::string(spec) + "'");
}

}  // namespace

DateWindow make_window(std::string_view label, std::string_view start_spec,
                       std::string_view end_spec) {
    DateWindow w{std::string(label), parse_boundary(start_spec, true),
                 parse_boundary(end_spec, false)};
    if (w.start > w.end)
        throw ConfigError("window '" + w.label + "' has start after end");
    return w;
}

}  // namespace fxent
