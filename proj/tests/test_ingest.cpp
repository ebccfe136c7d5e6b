#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "fxent/error.hpp"
#include "fxent/ingest.hpp"

using namespace fxent;

namespace {

Date d(int y, unsigned m, unsigned day) {
    return Date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{day}};
}

}  // namespace

TEST_CASE("parse_date handles both accepted formats") {
    CHECK(parse_date("2021-12-31", DateFormat::iso) == d(2021, 12, 31));
    CHECK(parse_date("12/31/2021", DateFormat::us) == d(2021, 12, 31));
    CHECK_THROWS_AS(parse_date("2021/12/31", DateFormat::iso), ConfigError);
    CHECK_THROWS_AS(parse_date("2021-02-30", DateFormat::iso), ConfigError);
    CHECK_THROWS_AS(parse_date("not-a-date", DateFormat::iso), ConfigError);
}

TEST_CASE("make_window expands month-granular boundaries inclusively") {
    const auto w = make_window("pre-gfc", "2006-05", "2007-09");
    CHECK(w.start == d(2006, 5, 1));
    CHECK(w.end == d(2007, 9, 30));
    // leap-year February
    CHECK(make_window("x", "2020-02", "2020-02").end == d(2020, 2, 29));
    CHECK_THROWS_AS(make_window("bad", "2021-01-01", "2020-01-01"), ConfigError);
}

TEST_CASE("parse_csv maps configured columns") {
    const std::string text = "Date,Price\n12/31/2021,\"74.335\"\n";
    ColumnConfig cfg;
    cfg.date_format = DateFormat::us;
    const auto rows = parse_csv(text, cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].date == d(2021, 12, 31));
    CHECK(rows[0].price == doctest::Approx(74.335));
}

TEST_CASE("parse_csv strips thousands separators inside quotes") {
    const auto rows = parse_csv("Date,Price\n2020-01-02,\"1,234.50\"\n", ColumnConfig{});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].price == doctest::Approx(1234.50));
}

TEST_CASE("parse_csv ignores extra columns and preserves file order") {
    const auto rows = parse_csv(
        "Date,Price,Open,Vol.\n2020-01-03,75.0,74.9,1.2K\n2020-01-02,74.0,73.9,0.9K\n",
        ColumnConfig{});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].date == d(2020, 1, 3));
    CHECK(rows[1].date == d(2020, 1, 2));
}

TEST_CASE("parse_csv rejects non-positive quotes with the line number") {
    try {
        parse_csv("Date,Price\n2020-01-02,-3.2\n", ColumnConfig{});
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 2);
    }
}

TEST_CASE("parse_csv reports a missing configured column") {
    ColumnConfig cfg;
    cfg.price_column = "Close";
    CHECK_THROWS_WITH_AS(parse_csv("Date,Price\n2020-01-02,74.0\n", cfg),
                         doctest::Contains("Close"), ConfigError);
}

TEST_CASE("normalize sorts ascending and dedupes exact duplicates") {
    std::vector<RawQuoteRow> rows = {{d(2020, 1, 3), 75.0},
                                     {d(2020, 1, 2), 74.0},
                                     {d(2020, 1, 1), 73.0},
                                     {d(2020, 1, 2), 74.0}};
    const auto series = normalize(rows, "USD/INR");
    REQUIRE(series.observations.size() == 3);
    CHECK(series.observations[0].date == d(2020, 1, 1));
    CHECK(series.observations[2].date == d(2020, 1, 3));
}

TEST_CASE("normalize flags contradictory duplicates") {
    std::vector<RawQuoteRow> rows = {{d(2020, 1, 2), 74.0}, {d(2020, 1, 2), 75.0}};
    CHECK_THROWS_WITH_AS(normalize(rows, "x"), doctest::Contains("2020-01-02"),
                         ConflictError);
}

TEST_CASE("normalize needs at least 2 surviving rows") {
    std::vector<RawQuoteRow> rows = {{d(2020, 1, 2), 74.0}, {d(2020, 1, 2), 74.0}};
    CHECK_THROWS_AS(normalize(rows, "x"), InsufficientDataError);
    CHECK_THROWS_AS(normalize({}, "x"), InsufficientDataError);
}

TEST_CASE("normalize is idempotent on random row sets") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> day(1, 28), month(1, 12);
    std::uniform_real_distribution<double> price(1.0, 200.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<RawQuoteRow> rows;
        for (int k = 0; k < 40; ++k)
            rows.push_back({d(2020, static_cast<unsigned>(month(rng)),
                              static_cast<unsigned>(day(rng))),
                            price(rng)});
        DatedSeries once;
        try {
            once = normalize(rows, "p");
        } catch (const ConflictError&) {
            continue;  // random collision with different prices
        }
        std::vector<RawQuoteRow> again;
        for (const auto& obs : once.observations) again.push_back({obs.date, obs.value});
        CHECK(normalize(again, "p") == once);
    }
}

TEST_CASE("parse then canonical re-export round-trips pairs exactly") {
    const std::string text =
        "Date,Price\n2020-01-01,73.125\n2020-01-02,74.335\n2020-01-03,75.0625\n";
    const auto series = normalize(parse_csv(text, ColumnConfig{}), "rt");
    const auto exported = to_canonical_csv(series);

    ColumnConfig canon;
    canon.date_column = "date";
    canon.price_column = "value";
    const auto reparsed = normalize(parse_csv(exported, canon), "rt");
    CHECK(reparsed == series);
}
