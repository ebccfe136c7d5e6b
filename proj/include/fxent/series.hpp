#pragma once

#include <string>
#include <vector>

#include "fxent/date.hpp"

namespace fxent {

struct Observation {
    Date date;
    double value;  // strictly positive, finite

    friend bool operator==(const Observation&, const Observation&) = default;
};

// Ordered (date, value) observations of one exchange rate.
// Invariants: dates strictly increasing, values positive and finite, length >= 2.
struct DatedSeries {
    std::string id;
    std::vector<Observation> observations;

    friend bool operator==(const DatedSeries&, const DatedSeries&) = default;
};

// Daily log returns of a DatedSeries; dates[k] is the date of the later quote.
struct ReturnSeries {
    std::string id;
    std::vector<Date> dates;
    std::vector<double> values;

    friend bool operator==(const ReturnSeries&, const ReturnSeries&) = default;
};

/// values[k] = ln(obs[k+1].value / obs[k].value). Throws InsufficientDataError
/// if the series has fewer than 2 observations.
ReturnSeries log_returns(const DatedSeries& series);

struct DescriptiveStats {
    double mean;
    double std_dev;   // sample (n-1) standard deviation
    double skewness;  // m3 / m2^(3/2), n-denominator central moments
    double kurtosis;  // raw (Pearson) convention, normal = 3
};

/// Moment statistics of a value list. Requires length >= 4 and nonzero variance.
DescriptiveStats descriptive_stats(const std::vector<double>& values);

/// Keep observations with window.start <= date <= window.end.
/// Throws EmptyWindowError (naming the window label) when nothing survives.
DatedSeries slice(const DatedSeries& series, const DateWindow& window);
ReturnSeries slice(const ReturnSeries& series, const DateWindow& window);

}  // namespace fxent
