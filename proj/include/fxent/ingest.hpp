#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fxent/date.hpp"
#include "fxent/series.hpp"

namespace fxent {

struct RawQuoteRow {
    Date date;
    double price;  // strictly positive, finite

    friend bool operator==(const RawQuoteRow&, const RawQuoteRow&) = default;
};

struct ColumnConfig {
    std::string date_column = "Date";
    std::string price_column = "Price";
    char delimiter = ',';
    DateFormat date_format = DateFormat::iso;
};

/// Parse delimiter-separated text with a header row into quote rows, in file
/// order. Numeric cleanup strips surrounding quotes and thousands separators.
/// Throws ConfigError if a configured column is missing from the header,
/// ParseError (with line number) for an unparseable or non-positive price or a
/// bad date.
std::vector<RawQuoteRow> parse_csv(std::istream& text, const ColumnConfig& config);
std::vector<RawQuoteRow> parse_csv(const std::string& text, const ColumnConfig& config);

/// Sort rows ascending by date and drop exact-duplicate dates (keeping the
/// first occurrence). Throws ConflictError when one date carries two different
/// prices, InsufficientDataError when fewer than 2 rows survive.
DatedSeries normalize(std::vector<RawQuoteRow> rows, const std::string& id);

/// Canonical two-column re-export: header "date,value", ISO dates.
std::string to_canonical_csv(const DatedSeries& series);

}  // namespace fxent
