#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>
#include <random>

namespace dnormal {

/// splitmix64 step; used to derive independent stream seeds from (seed, index).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(mix64(seed + mix64(stream)));
}

/// Uniform double in [0, 1). Hand-rolled mapping so runs are reproducible
/// across standard libraries (std distributions are implementation-defined).
inline double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double next_uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * next_unit(rng);
}

/// Standard normal via Box-Muller on the deterministic uniform mapping.
inline double next_gaussian(std::mt19937_64& rng) {
    double u1 = next_unit(rng);
    while (u1 <= 0.0) u1 = next_unit(rng);
    const double u2 = next_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Uniform integer in [0, n); n must be positive.
inline std::uint64_t next_index(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

}  // namespace dnormal
