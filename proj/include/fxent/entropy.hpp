#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace fxent {

enum class Statistic { apen, sampen };

std::string to_string(Statistic s);

enum class MatchConvention {
    apen_self_counting,  // templates 1..N-p+1 per length p, j = i counted
    sampen_no_self,      // both lengths over 1..N-m, ordered pairs i != j
};

enum class Engine { oracle, fast };

// (m, r) with r either explicit or derived as r_factor * sd of the analyzed
// values. Exactly one of r / r_factor is set on input; after a computation the
// result carries the resolved r.
struct EntropyParams {
    int m = 2;
    std::optional<double> r;
    std::optional<double> r_factor;
};

struct MatchCounts {
    std::int64_t template_len_m_matches = 0;
    std::int64_t template_len_m_plus_1_matches = 0;
    MatchConvention convention = MatchConvention::sampen_no_self;

    friend bool operator==(const MatchCounts&, const MatchCounts&) = default;
};

struct EntropyResult {
    Statistic kind;
    double value;
    EntropyParams params;  // params.r holds the resolved tolerance
    std::size_t n;
    MatchCounts counts;
    Engine engine;
};

/// max_k |a[k] - b[k]|. Lengths must match and be >= 1.
double chebyshev_distance(std::span<const double> a, std::span<const double> b);

/// r_factor * sample standard deviation (n-1 denominator) of the values.
/// Throws DegenerateSeriesError when the variance is zero (r would be 0).
double tolerance_from_sd(std::span<const double> values, double r_factor);

/// Approximate entropy, Pincus convention: per-template log match frequencies
/// with self-counting, averaged at lengths m and m+1.
/// Requires N >= m + 2 and a resolvable r > 0.
EntropyResult apen(std::span<const double> values, const EntropyParams& params);

/// Sample entropy, Richman-Moorman convention: -ln(A/B) over ordered pairs
/// i != j with both template lengths indexed 1..N-m. Brute-force reference
/// path (engine = oracle).
/// Throws NoMatchesError when B = 0 or A = 0.
EntropyResult sampen(std::span<const double> values, const EntropyParams& params);

/// Exact optimized sample entropy (engine = fast): candidate pairs are pruned
/// by value ordering on the first coordinate and each length-m match is
/// extended to length m+1 with one extra comparison. Parallelized with OpenMP.
/// Identical counts and value (within rounding) to sampen().
EntropyResult fast_sampen(std::span<const double> values, const EntropyParams& params);

/// Raw pair counts before normalization, per the requested convention.
MatchCounts match_counts(std::span<const double> values, const EntropyParams& params,
                         MatchConvention convention);

/// Resolve the effective tolerance for a value window: explicit r, or
/// r_factor * sd. Throws ParamError on a missing/invalid specification.
double resolve_tolerance(std::span<const double> values, const EntropyParams& params);

/// Dispatch on statistic kind; SampEn uses the fast engine.
EntropyResult compute_entropy(std::span<const double> values, Statistic statistic,
                              const EntropyParams& params);

}  // namespace fxent
