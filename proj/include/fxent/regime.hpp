#pragma once

#include <string>
#include <vector>

#include "fxent/date.hpp"
#include "fxent/entropy.hpp"
#include "fxent/series.hpp"

namespace fxent {

struct CrisisPreset {
    std::string name;
    DateWindow pre;
    DateWindow post;
};

enum class CrisisName { gfc, covid19 };

/// GFC: pre May 2006 - Sep 2007, post Oct 2007 - Feb 2009.
/// COVID19: pre Jan 2018 - Dec 2019, post Jan 2020 - Dec 2021.
CrisisPreset crisis_preset(CrisisName name);

enum class Change { decrease, increase, unchanged };

std::string to_string(Change c);

// Whether window entropy is computed on returns sliced from the full return
// series (default; keeps the boundary return) or on returns of sliced prices.
enum class SliceMode { returns_then_slice, slice_then_returns };

// One row of a pre/post comparison table.
struct WindowComparison {
    std::string series_id;
    Statistic statistic;
    double pre_value;
    double post_value;
    Change change;
    EntropyParams pre_params;   // r resolved per window
    EntropyParams post_params;
};

inline constexpr double kTieEpsilon = 1e-12;

/// Entropy computed independently on each window, r re-derived from each
/// window's sd in r_factor mode. Errors from slicing or the entropy engine are
/// re-thrown annotated with the series id and window label.
WindowComparison compare_windows(const DatedSeries& prices, const CrisisPreset& preset,
                                 Statistic statistic, const EntropyParams& params,
                                 SliceMode mode = SliceMode::returns_then_slice);

WindowComparison compare_windows(const ReturnSeries& returns, const CrisisPreset& preset,
                                 Statistic statistic, const EntropyParams& params);

struct HypothesisSummary {
    Statistic statistic;
    int decreases;
    int total;
    bool supports_hypothesis;  // strict majority of rows decreased
};

/// Count decreases among rows; all rows must carry the requested statistic.
HypothesisSummary summarize_hypothesis(const std::vector<WindowComparison>& rows,
                                       Statistic statistic);

}  // namespace fxent
