#include "fxent/regime.hpp"

#include <cmath>

#include "fxent/error.hpp"

namespace fxent {

CrisisPreset crisis_preset(CrisisName name) {
    using std::chrono::day;
    using std::chrono::month;
    using std::chrono::year;
    if (name == CrisisName::gfc) {
        return {"gfc",
                {"pre-gfc", Date{year{2006}, month{5}, day{1}}, Date{year{2007}, month{9}, day{30}}},
                {"post-gfc", Date{year{2007}, month{10}, day{1}}, Date{year{2009}, month{2}, day{28}}}};
    }
    return {"covid19",
            {"pre-covid19", Date{year{2018}, month{1}, day{1}}, Date{year{2019}, month{12}, day{31}}},
            {"post-covid19", Date{year{2020}, month{1}, day{1}}, Date{year{2021}, month{12}, day{31}}}};
}

std::string to_string(Change c) {
    switch (c) {
        case Change::decrease: return "Decrease";
        case Change::increase: return "Increase";
        default: return "Unchanged";
    }
}

namespace {

Change classify(double pre, double post) {
    if (post < pre - kTieEpsilon) return Change::decrease;
    if (post > pre + kTieEpsilon) return Change::increase;
    return Change::unchanged;
}

EntropyResult window_entropy(const ReturnSeries& returns, const DateWindow& window,
                             Statistic statistic, const EntropyParams& params,
                             const std::string& series_id) {
    try {
        const ReturnSeries windowed = slice(returns, window);
        return compute_entropy(windowed.values, statistic, params);
    } catch (const Error& e) {
        throw Error("series '" + series_id + "', window '" + window.label +
                    "': " + e.what());
    }
}

WindowComparison compare_impl(const ReturnSeries& pre_source,
                              const ReturnSeries& post_source,
                              const CrisisPreset& preset, Statistic statistic,
                              const EntropyParams& params) {
    const EntropyResult pre =
        window_entropy(pre_source, preset.pre, statistic, params, pre_source.id);
    const EntropyResult post =
        window_entropy(post_source, preset.post, statistic, params, post_source.id);
    return {pre_source.id, statistic,          pre.value,
            post.value,    classify(pre.value, post.value),
            pre.params,    post.params};
}

}  // namespace

WindowComparison compare_windows(const ReturnSeries& returns, const CrisisPreset& preset,
                                 Statistic statistic, const EntropyParams& params) {
    return compare_impl(returns, returns, preset, statistic, params);
}

WindowComparison compare_windows(const DatedSeries& prices, const CrisisPreset& preset,
                                 Statistic statistic, const EntropyParams& params,
                                 SliceMode mode) {
    if (mode == SliceMode::returns_then_slice)
        return compare_windows(log_returns(prices), preset, statistic, params);
    // slice-then-returns: the boundary return is lost in each window
    auto window_returns = [&](const DateWindow& window) {
        try {
            return log_returns(slice(prices, window));
        } catch (const Error& e) {
            throw Error("series '" + prices.id + "', window '" + window.label +
                        "': " + e.what());
        }
    };
    return compare_impl(window_returns(preset.pre), window_returns(preset.post), preset,
                        statistic, params);
}

HypothesisSummary summarize_hypothesis(const std::vector<WindowComparison>& rows,
                                       Statistic statistic) {
    if (rows.empty()) throw ParamError("summarize_hypothesis: no rows");
    int decreases = 0;
    for (const auto& row : rows) {
        if (row.statistic != statistic)
            throw ParamError("summarize_hypothesis: row for series '" + row.series_id +
                             "' carries a different statistic");
        if (row.change == Change::decrease) ++decreases;
    }
    const int total = static_cast<int>(rows.size());
    return {statistic, decreases, total, decreases * 2 > total};
}

}  // namespace fxent
