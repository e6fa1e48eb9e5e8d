#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace opinet {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based child seed: mixes the master seed with a path of indices so
// any replicate can be reproduced in isolation.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = splitmix64(master);
    for (std::uint64_t idx : path)
        s = splitmix64(s ^ idx);
    return s;
}

// Unbiased draw on [0, bound). Self-contained so output streams do not depend
// on the standard library's distribution internals.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t reject_below = (-bound) % bound; // 2^64 mod bound
    std::uint64_t draw = rng();
    while (draw < reject_below)
        draw = rng();
    return draw % bound;
}

// Uniform on [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) {
    return uniform_unit(rng) < p;
}

template <typename T>
void shuffle_vector(std::vector<T>& values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

} // namespace opinet
