#include "fxent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fxent/error.hpp"

namespace fxent {

std::string to_string(Statistic s) {
    return s == Statistic::apen ? "apen" : "sampen";
}

double chebyshev_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty())
        throw ParamError("chebyshev_distance: vectors must have equal nonzero length");
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        d = std::max(d, std::fabs(a[k] - b[k]));
    return d;
}

double tolerance_from_sd(std::span<const double> values, double r_factor) {
    if (values.size() < 2)
        throw InsufficientDataError("tolerance_from_sd: need at least 2 values");
    if (!(r_factor > 0.0)) throw ParamError("r_factor must be positive");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    if (sd == 0.0)
        throw DegenerateSeriesError("degenerate tolerance: zero standard deviation");
    return r_factor * sd;
}

double resolve_tolerance(std::span<const double> values, const EntropyParams& params) {
    if (params.r.has_value() == params.r_factor.has_value())
        throw ParamError("exactly one of r / r_factor must be set");
    if (params.r) {
        if (!(*params.r > 0.0)) throw ParamError("r must be positive");
        return *params.r;
    }
    return tolerance_from_sd(values, *params.r_factor);
}

namespace {

void check_preconditions(std::span<const double> values, int m) {
    if (m < 1) throw ParamError("m must be >= 1");
    if (values.size() < static_cast<std::size_t>(m) + 2)
        throw InsufficientDataError("entropy needs N >= m + 2 (N = " +
                                    std::to_string(values.size()) +
                                    ", m = " + std::to_string(m) + ")");
}

EntropyParams resolved(const EntropyParams& params, double r) {
    EntropyParams out = params;
    out.r = r;
    return out;
}

// Counts per length-p template, self-counting, templates indexed 0..N-p.
std::vector<std::int64_t> apen_counts(std::span<const double> v, int p, double r) {
    const std::int64_t n_templates = static_cast<std::int64_t>(v.size()) - p + 1;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n_templates), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n_templates; ++i) {
        std::int64_t c = 0;
        for (std::int64_t j = 0; j < n_templates; ++j) {
            bool match = true;
            for (int k = 0; k < p; ++k) {
                if (std::fabs(v[i + k] - v[j + k]) > r) {
                    match = false;
                    break;
                }
            }
            if (match) ++c;
        }
        counts[i] = c;
    }
    return counts;
}

// Phi^p(r) = mean over templates of ln(count / n_templates). Self-counting
// guarantees count >= 1, so every log is finite.
double phi(const std::vector<std::int64_t>& counts) {
    const double n_templates = static_cast<double>(counts.size());
    double sum = 0.0;
    for (std::int64_t c : counts) sum += std::log(static_cast<double>(c) / n_templates);
    return sum / n_templates;
}

// Ordered-pair counts (B at length m, A at length m+1), both template lengths
// indexed 0..N-m-1, no self-pairs. Brute force, no pruning.
MatchCounts sampen_counts_bruteforce(std::span<const double> v, int m, double r) {
    const std::int64_t n_templates = static_cast<std::int64_t>(v.size()) - m;
    std::int64_t b = 0, a = 0;
    for (std::int64_t i = 0; i < n_templates; ++i) {
        for (std::int64_t j = 0; j < n_templates; ++j) {
            if (j == i) continue;
            bool match = true;
            for (int k = 0; k < m; ++k) {
                if (std::fabs(v[i + k] - v[j + k]) > r) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            ++b;
            if (std::fabs(v[i + m] - v[j + m]) <= r) ++a;
        }
    }
    return {b, a, MatchConvention::sampen_no_self};
}

// Fast exact counts: templates sorted by first coordinate; only pairs whose
// first coordinates are within r are candidates (a necessary condition for a
// Chebyshev match). Each length-m match extends to length m+1 with a single
// extra comparison. Unordered pairs are counted and doubled.
MatchCounts sampen_counts_fast(std::span<const double> v, int m, double r) {
    const std::int64_t n_templates = static_cast<std::int64_t>(v.size()) - m;
    std::vector<std::int64_t> order(static_cast<std::size_t>(n_templates));
    std::iota(order.begin(), order.end(), std::int64_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::int64_t x, std::int64_t y) { return v[x] < v[y]; });

    // lo[p]: smallest sorted position whose first coordinate is within r of
    // position p's. Precomputed serially so the parallel loop is independent.
    std::vector<std::int64_t> lo(static_cast<std::size_t>(n_templates));
    std::int64_t left = 0;
    for (std::int64_t p = 0; p < n_templates; ++p) {
        while (v[order[left]] < v[order[p]] - r) ++left;
        lo[p] = left;
    }

    std::int64_t b = 0, a = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : b, a)
    for (std::int64_t p = 0; p < n_templates; ++p) {
        const std::int64_t i = order[p];
        for (std::int64_t q = lo[p]; q < p; ++q) {
            const std::int64_t j = order[q];
            bool match = true;
            for (int k = 1; k < m; ++k) {
                if (std::fabs(v[i + k] - v[j + k]) > r) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            ++b;
            if (std::fabs(v[i + m] - v[j + m]) <= r) ++a;
        }
    }
    return {2 * b, 2 * a, MatchConvention::sampen_no_self};
}

EntropyResult sampen_from_counts(std::span<const double> values, const EntropyParams& params,
                                 double r, const MatchCounts& counts, Engine engine) {
    if (counts.template_len_m_matches == 0)
        throw NoMatchesError("sampen: no template matches at length m "
                             "(window too short or r too tight)");
    if (counts.template_len_m_plus_1_matches == 0)
        throw NoMatchesError("sampen: no extended matches at length m+1 "
                             "(window too short or r too tight)");
    const double ratio = static_cast<double>(counts.template_len_m_plus_1_matches) /
                         static_cast<double>(counts.template_len_m_matches);
    return {Statistic::sampen, -std::log(ratio), resolved(params, r),
            values.size(), counts, engine};
}

}  // namespace

EntropyResult apen(std::span<const double> values, const EntropyParams& params) {
    check_preconditions(values, params.m);
    const double r = resolve_tolerance(values, params);

    const auto counts_m = apen_counts(values, params.m, r);
    const auto counts_m1 = apen_counts(values, params.m + 1, r);
    const double value = phi(counts_m) - phi(counts_m1);

    MatchCounts counts;
    counts.convention = MatchConvention::apen_self_counting;
    counts.template_len_m_matches = std::accumulate(counts_m.begin(), counts_m.end(),
                                                    std::int64_t{0});
    counts.template_len_m_plus_1_matches =
        std::accumulate(counts_m1.begin(), counts_m1.end(), std::int64_t{0});
    return {Statistic::apen, value, resolved(params, r), values.size(), counts,
            Engine::fast};
}

EntropyResult sampen(std::span<const double> values, const EntropyParams& params) {
    check_preconditions(values, params.m);
    const double r = resolve_tolerance(values, params);
    return sampen_from_counts(values, params, r,
                              sampen_counts_bruteforce(values, params.m, r),
                              Engine::oracle);
}

EntropyResult fast_sampen(std::span<const double> values, const EntropyParams& params) {
    check_preconditions(values, params.m);
    const double r = resolve_tolerance(values, params);
    return sampen_from_counts(values, params, r, sampen_counts_fast(values, params.m, r),
                              Engine::fast);
}

MatchCounts match_counts(std::span<const double> values, const EntropyParams& params,
                         MatchConvention convention) {
    check_preconditions(values, params.m);
    const double r = resolve_tolerance(values, params);
    if (convention == MatchConvention::sampen_no_self) {
        const auto counts = sampen_counts_fast(values, params.m, r);
        if (counts.template_len_m_matches == 0)
            throw NoMatchesError("match_counts: no template matches at length m");
        return counts;
    }
    const auto counts_m = apen_counts(values, params.m, r);
    const auto counts_m1 = apen_counts(values, params.m + 1, r);
    MatchCounts counts;
    counts.convention = MatchConvention::apen_self_counting;
    counts.template_len_m_matches = std::accumulate(counts_m.begin(), counts_m.end(),
                                                    std::int64_t{0});
    counts.template_len_m_plus_1_matches =
        std::accumulate(counts_m1.begin(), counts_m1.end(), std::int64_t{0});
    return counts;
}

EntropyResult compute_entropy(std::span<const double> values, Statistic statistic,
                              const EntropyParams& params) {
    return statistic == Statistic::apen ? apen(values, params)
                                        : fast_sampen(values, params);
}

}  // namespace fxent
