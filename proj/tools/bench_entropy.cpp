// Compares the serial brute-force sample-entropy path against the pruned
// OpenMP path, and times ApEn, across a range of series lengths.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fxent/entropy.hpp"

namespace {

std::vector<double> gaussian_series(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> out(n);
    for (double& v : out) v = dist(rng);
    return out;
}

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled\n");
#endif
    std::printf("%8s %6s  %14s %14s %10s %14s\n", "N", "m", "sampen[ms]",
                "fast_sampen[ms]", "speedup", "apen[ms]");

    fxent::EntropyParams params;
    params.r_factor = 0.2;

    for (std::size_t n : {1000u, 2000u, 5000u, 10000u, 20000u}) {
        const auto series = gaussian_series(n, 42);
        for (int m : {1, 2}) {
            params.m = m;
            fxent::EntropyResult slow{}, fast{};
            const double t_slow = time_ms([&] { slow = fxent::sampen(series, params); });
            const double t_fast =
                time_ms([&] { fast = fxent::fast_sampen(series, params); });
            const double t_apen = time_ms([&] { (void)fxent::apen(series, params); });
            if (slow.counts != fast.counts)
                std::printf("MISMATCH at N=%zu m=%d\n", n, m);
            std::printf("%8zu %6d  %14.2f %14.2f %9.1fx %14.2f\n", n, m, t_slow, t_fast,
                        t_slow / t_fast, t_apen);
        }
    }
    return 0;
}
