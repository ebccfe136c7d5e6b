#include "fxent/series.hpp"

#include <algorithm>
#include <cmath>

#include "fxent/error.hpp"

namespace fxent {

ReturnSeries log_returns(const DatedSeries& series) {
    if (series.observations.size() < 2)
        throw InsufficientDataError("series '" + series.id +
                                    "': need at least 2 observations for returns");
    ReturnSeries out;
    out.id = series.id;
    out.dates.reserve(series.observations.size() - 1);
    out.values.reserve(series.observations.size() - 1);
    for (std::size_t k = 1; k < series.observations.size(); ++k) {
        out.dates.push_back(series.observations[k].date);
        out.values.push_back(
            std::log(series.observations[k].value / series.observations[k - 1].value));
    }
    return out;
}

DescriptiveStats descriptive_stats(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 4) throw InsufficientDataError("descriptive stats need at least 4 values");

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    const double dn = static_cast<double>(n);
    const double sample_var = m2 / (dn - 1.0);
    m2 /= dn;
    m3 /= dn;
    m4 /= dn;
    if (m2 == 0.0) throw DegenerateSeriesError("zero variance: all values equal");

    DescriptiveStats stats;
    stats.mean = mean;
    stats.std_dev = std::sqrt(sample_var);
    stats.skewness = m3 / std::pow(m2, 1.5);
    stats.kurtosis = m4 / (m2 * m2);
    return stats;
}

namespace {

template <typename Series, typename Keep>
void check_nonempty(const Series& out, const DateWindow& window, const std::string& id,
                    Keep size) {
    if (size(out) == 0)
        throw EmptyWindowError("series '" + id + "': window '" + window.label +
                               "' [" + format_date(window.start) + ", " +
                               format_date(window.end) + "] selects no observations");
}

}  // namespace

DatedSeries slice(const DatedSeries& series, const DateWindow& window) {
    DatedSeries out;
    out.id = series.id;
    for (const auto& obs : series.observations)
        if (window.contains(obs.date)) out.observations.push_back(obs);
    check_nonempty(out, window, series.id,
                   [](const DatedSeries& s) { return s.observations.size(); });
    return out;
}

ReturnSeries slice(const ReturnSeries& series, const DateWindow& window) {
    ReturnSeries out;
    out.id = series.id;
    for (std::size_t k = 0; k < series.dates.size(); ++k) {
        if (window.contains(series.dates[k])) {
            out.dates.push_back(series.dates[k]);
            out.values.push_back(series.values[k]);
        }
    }
    check_nonempty(out, window, series.id,
                   [](const ReturnSeries& s) { return s.dates.size(); });
    return out;
}

}  // namespace fxent
