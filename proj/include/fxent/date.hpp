#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace fxent {

using Date = std::chrono::year_month_day;

enum class DateFormat { iso, us };  // YYYY-MM-DD or MM/DD/YYYY

/// Parse a calendar date in the given format. Throws ConfigError on malformed input
/// or an invalid calendar day (e.g. 2021-02-30).
Date parse_date(std::string_view text, DateFormat format);

/// ISO 8601 rendering, YYYY-MM-DD.
std::string format_date(Date d);

Date first_day_of_month(std::chrono::year_month ym);
Date last_day_of_month(std::chrono::year_month ym);

struct DateWindow {
    std::string label;
    Date start;  // inclusive
    Date end;    // inclusive

    bool contains(Date d) const { return start <= d && d <= end; }
};

/// Build a window from boundary specs that are either full ISO dates or
/// year-months ("2006-05", expanded to first/last day). Throws ConfigError
/// if start > end.
DateWindow make_window(std::string_view label, std::string_view start_spec,
                       std::string_view end_spec);

}  // namespace fxent
