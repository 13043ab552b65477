#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace dpsn::rng {

// std::mt19937_64 has a standardized output stream; all value mappings
// below are hand-rolled so results are identical across platforms and
// standard libraries.
using Engine = std::mt19937_64;

/// splitmix64-style mixer for deriving independent seeds.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Unbiased draw from [0, n). Rejection sampling, no modulo bias.
inline std::uint64_t bounded(Engine& eng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % n;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double unit(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine& eng, double lo, double hi) {
    return lo + (hi - lo) * unit(eng);
}

/// Box-Muller, one variate per call (two engine draws).
inline double gaussian(Engine& eng, double mean = 0.0, double sd = 1.0) {
    const double u1 = 1.0 - unit(eng);  // (0, 1], keeps log finite
    const double u2 = unit(eng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    return mean + sd * r * std::cos(two_pi * u2);
}

/// k distinct indices from [0, n), ascending. Partial Fisher-Yates.
inline std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Engine& eng) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(bounded(eng, n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(std::min(k, n));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace dpsn::rng
