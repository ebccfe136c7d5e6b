#include "fxent/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "fxent/error.hpp"

namespace fxent {

namespace {

// Split one CSV line, honoring double-quoted fields ("" escapes a quote).
std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == delimiter) {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Strip thousands separators, then parse a strictly positive finite decimal.
double parse_price(const std::string& raw) {
    std::string cleaned;
    cleaned.reserve(raw.size());
    for (char c : raw)
        if (c != ',') cleaned += c;
    if (cleaned.empty()) throw ConfigError("empty price field");
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(cleaned.data(), cleaned.data() + cleaned.size(), out);
    if (ec != std::errc{} || ptr != cleaned.data() + cleaned.size())
        throw ConfigError("unparseable price: '" + raw + "'");
    if (!std::isfinite(out) || out <= 0.0)
        throw ConfigError("non-positive quote: '" + raw + "'");
    return out;
}

}  // namespace

std::vector<RawQuoteRow> parse_csv(std::istream& text, const ColumnConfig& config) {
    std::string line;
    if (!std::getline(text, line)) throw ConfigError("empty input: no header row");

    const auto header = split_fields(line, config.delimiter);
    auto find_column = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (trim(header[i]) == name) return i;
        throw ConfigError("missing column '" + name + "' in header");
    };
    const std::size_t date_idx = find_column(config.date_column);
    const std::size_t price_idx = find_column(config.price_column);

    std::vector<RawQuoteRow> rows;
    std::size_t line_number = 1;
    while (std::getline(text, line)) {
        ++line_number;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line, config.delimiter);
        if (date_idx >= fields.size() || price_idx >= fields.size())
            throw ParseError(line_number, "too few fields");
        try {
            RawQuoteRow row;
            row.date = parse_date(trim(fields[date_idx]), config.date_format);
            row.price = parse_price(trim(fields[price_idx]));
            rows.push_back(row);
        } catch (const ConfigError& e) {
            throw ParseError(line_number, e.what());
        }
    }
    return rows;
}

std::vector<RawQuoteRow> parse_csv(const std::string& text, const ColumnConfig& config) {
    std::istringstream in(text);
    return parse_csv(in, config);
}

DatedSeries normalize(std::vector<RawQuoteRow> rows, const std::string& id) {
    if (rows.empty()) throw InsufficientDataError("series '" + id + "': no rows");

    std::stable_sort(rows.begin(), rows.end(),
                     [](const RawQuoteRow& a, const RawQuoteRow& b) { return a.date < b.date; });

    DatedSeries series;
    series.id = id;
    series.observations.reserve(rows.size());
    for (const auto& row : rows) {
        if (!series.observations.empty() && series.observations.back().date == row.date) {
            if (series.observations.back().value != row.price)
                throw ConflictError("series '" + id + "': conflicting prices on " +
                                    format_date(row.date));
            continue;  // exact duplicate, keep first
        }
        series.observations.push_back({row.date, row.price});
    }
    if (series.observations.size() < 2)
        throw InsufficientDataError("series '" + id + "': fewer than 2 observations");
    return series;
}

std::string to_canonical_csv(const DatedSeries& series) {
    std::ostringstream out;
    out << "date,value\n";
    out.precision(17);
    for (const auto& obs : series.observations)
        out << format_date(obs.date) << ',' << obs.value << '\n';
    return out.str();
}

}  // namespace fxent
