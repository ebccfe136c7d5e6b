#pragma once

#include <string>
#include <vector>

#include "fxent/entropy.hpp"
#include "fxent/regime.hpp"
#include "fxent/series.hpp"

namespace fxent {

enum class OutputFormat { csv, json, markdown };

// Tables print decimals with 4 fractional digits; JSON carries full precision.

/// Comparison table, columns series, pre, post, change, stable order.
std::string render_comparisons(const std::vector<WindowComparison>& rows,
                               OutputFormat format);

struct NamedStats {
    std::string series_id;
    DescriptiveStats stats;
};

std::string render_stats(const std::vector<NamedStats>& rows, OutputFormat format,
                         bool excess_kurtosis = false);

struct NamedEntropy {
    std::string series_id;
    EntropyResult result;
};

std::string render_entropy(const std::vector<NamedEntropy>& rows, OutputFormat format);

std::string render_summary(const HypothesisSummary& summary, OutputFormat format);

/// Two-column plot-data feed: header "date,log_return", one row per return.
std::string to_plot_csv(const ReturnSeries& returns);

}  // namespace fxent
