#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fxent/error.hpp"
#include "fxent/regime.hpp"
#include "test_support.hpp"

using namespace fxent;

namespace {

Date d(int y, unsigned m, unsigned day) {
    return Date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{day}};
}

// Daily price path starting at the given date, one observation per day.
DatedSeries price_series(Date start, const std::vector<double>& prices,
                         const std::string& id = "synthetic") {
    DatedSeries s;
    s.id = id;
    auto day = std::chrono::sys_days{start};
    for (double p : prices) {
        s.observations.push_back({Date{day}, p});
        day += std::chrono::days{1};
    }
    return s;
}

// Prices whose log returns are a seeded Gaussian walk.
std::vector<double> walk_prices(std::size_t n, std::uint64_t seed, double vol = 0.005) {
    const auto returns = testsupport::gaussian_series(n - 1, seed, 0.0, vol);
    std::vector<double> prices = {100.0};
    for (double r : returns) prices.push_back(prices.back() * std::exp(r));
    return prices;
}

EntropyParams default_params() {
    EntropyParams p;
    p.m = 2;
    p.r_factor = 0.2;
    return p;
}

}  // namespace

TEST_CASE("crisis presets encode the stated month windows") {
    const auto gfc = crisis_preset(CrisisName::gfc);
    CHECK(gfc.pre.start == d(2006, 5, 1));
    CHECK(gfc.pre.end == d(2007, 9, 30));
    CHECK(gfc.post.start == d(2007, 10, 1));
    CHECK(gfc.post.end == d(2009, 2, 28));

    const auto covid = crisis_preset(CrisisName::covid19);
    CHECK(covid.pre.start == d(2018, 1, 1));
    CHECK(covid.pre.end == d(2019, 12, 31));
    CHECK(covid.post.start == d(2020, 1, 1));
    CHECK(covid.post.end == d(2021, 12, 31));
}

TEST_CASE("identical value sequences in both windows yield Unchanged") {
    // same 400-day price pattern placed in each window of a custom preset
    const auto pattern = walk_prices(400, 21);
    auto pre = price_series(d(2018, 1, 1), pattern);
    auto post = price_series(d(2020, 1, 1), pattern);
    DatedSeries combined = pre;
    combined.observations.insert(combined.observations.end(),
                                 post.observations.begin(), post.observations.end());

    // windows sized so each contains exactly the 400-day block interior;
    // slice-then-returns makes both windows see identical return sequences
    CrisisPreset preset{"custom",
                        {"pre", d(2018, 1, 1), d(2019, 6, 1)},
                        {"post", d(2020, 1, 1), d(2021, 6, 1)}};
    const auto row = compare_windows(combined, preset, Statistic::sampen,
                                     default_params(), SliceMode::slice_then_returns);
    CHECK(row.change == Change::unchanged);
    CHECK(row.pre_value == row.post_value);
}

TEST_CASE("compare_windows resolves r per window in r_factor mode") {
    // post window twice as volatile: r must differ between windows
    const auto calm = walk_prices(500, 31, 0.004);
    const auto wild = walk_prices(500, 32, 0.012);
    auto series = price_series(d(2018, 6, 1), calm);
    auto post = price_series(d(2020, 3, 1), wild);
    series.observations.insert(series.observations.end(), post.observations.begin(),
                               post.observations.end());

    const auto row = compare_windows(series, crisis_preset(CrisisName::covid19),
                                     Statistic::sampen, default_params());
    REQUIRE(row.pre_params.r.has_value());
    REQUIRE(row.post_params.r.has_value());
    CHECK(*row.post_params.r > 2.0 * *row.pre_params.r);
}

TEST_CASE("change label direction") {
    const auto regular = testsupport::sine_series(600, 40.0, 0.05, 1);
    // sine prices must stay positive
    std::vector<double> sine_prices, noise_prices;
    for (double v : regular) sine_prices.push_back(100.0 + 5.0 * v);
    for (double v : testsupport::gaussian_series(600, 2)) noise_prices.push_back(100.0 + v);

    auto series = price_series(d(2018, 1, 1), noise_prices);  // irregular pre
    auto post = price_series(d(2020, 1, 1), sine_prices);     // regular post
    series.observations.insert(series.observations.end(), post.observations.begin(),
                               post.observations.end());
    const auto row = compare_windows(series, crisis_preset(CrisisName::covid19),
                                     Statistic::sampen, default_params());
    CHECK(row.change == Change::decrease);
    CHECK(row.post_value < row.pre_value);
}

TEST_CASE("errors are annotated with series id and window label") {
    const auto series = price_series(d(2018, 1, 1), walk_prices(400, 41), "USD/INR");
    // post window has no data at all
    CHECK_THROWS_WITH_AS(compare_windows(series, crisis_preset(CrisisName::covid19),
                                         Statistic::sampen, default_params()),
                         doctest::Contains("USD/INR"), Error);
    try {
        compare_windows(series, crisis_preset(CrisisName::covid19), Statistic::sampen,
                        default_params());
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("post-covid19") != std::string::npos);
    }
}

TEST_CASE("slice modes differ by at most the boundary observation") {
    auto series = price_series(d(2017, 6, 1), walk_prices(1800, 51));
    const auto params = default_params();
    const auto a = compare_windows(series, crisis_preset(CrisisName::covid19),
                                   Statistic::sampen, params,
                                   SliceMode::returns_then_slice);
    const auto b = compare_windows(series, crisis_preset(CrisisName::covid19),
                                   Statistic::sampen, params,
                                   SliceMode::slice_then_returns);
    // same data up to one boundary return; values should be close but need not match
    CHECK(a.pre_value == doctest::Approx(b.pre_value).epsilon(0.05));
    CHECK(a.post_value == doctest::Approx(b.post_value).epsilon(0.05));
}

TEST_CASE("summarize_hypothesis counts decreases and applies strict majority") {
    auto row = [](const std::string& id, Change c) {
        return WindowComparison{id, Statistic::sampen, 2.0,
                                c == Change::decrease ? 1.5
                                : c == Change::increase ? 2.5 : 2.0,
                                c, {}, {}};
    };
    std::vector<WindowComparison> rows = {
        row("a", Change::decrease), row("b", Change::decrease),
        row("c", Change::decrease), row("d", Change::increase)};
    auto s = summarize_hypothesis(rows, Statistic::sampen);
    CHECK(s.decreases == 3);
    CHECK(s.total == 4);
    CHECK(s.supports_hypothesis);

    // exactly half is not a strict majority
    rows.push_back(row("e", Change::increase));
    rows.push_back(row("f", Change::unchanged));
    s = summarize_hypothesis(rows, Statistic::sampen);
    CHECK(s.decreases == 3);
    CHECK(s.total == 6);
    CHECK_FALSE(s.supports_hypothesis);

    // all-increase: zero decreases
    std::vector<WindowComparison> ups = {row("a", Change::increase),
                                         row("b", Change::increase)};
    s = summarize_hypothesis(ups, Statistic::sampen);
    CHECK(s.decreases == 0);
    CHECK_FALSE(s.supports_hypothesis);
}

TEST_CASE("summarize_hypothesis count additivity over a partition") {
    std::mt19937_64 rng(61);
    std::vector<WindowComparison> rows;
    for (int k = 0; k < 20; ++k) {
        const auto c = static_cast<Change>(rng() % 3);
        rows.push_back({"s" + std::to_string(k), Statistic::apen, 1.0, 1.0, c, {}, {}});
    }
    const auto whole = summarize_hypothesis(rows, Statistic::apen);
    std::vector<WindowComparison> left(rows.begin(), rows.begin() + 7);
    std::vector<WindowComparison> right(rows.begin() + 7, rows.end());
    const auto l = summarize_hypothesis(left, Statistic::apen);
    const auto r = summarize_hypothesis(right, Statistic::apen);
    CHECK(l.decreases + r.decreases == whole.decreases);
    CHECK(l.total + r.total == whole.total);
}

TEST_CASE("summarize_hypothesis rejects statistic mismatch and empty input") {
    std::vector<WindowComparison> rows = {
        {"a", Statistic::apen, 1.0, 0.5, Change::decrease, {}, {}}};
    CHECK_THROWS_AS(summarize_hypothesis(rows, Statistic::sampen), ParamError);
    CHECK_THROWS_AS(summarize_hypothesis({}, Statistic::sampen), ParamError);
}
