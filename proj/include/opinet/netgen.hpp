#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "opinet/graph.hpp"
#include "opinet/rng.hpp"

namespace opinet {

struct GenConfig {
    NodeId n = 1000;
    double gamma = 3.0;
    std::uint32_t k_in = 17;
    std::uint64_t seed = 0;
};

// Out-degrees drawn from the discrete power law P(k) proportional to
// k^-gamma on [1, n-1], before any sum repair.
std::vector<std::uint32_t> sample_powerlaw_degrees(const GenConfig& config, Rng& rng);

// Power-law draw followed by single-unit random repair until the sequence
// sums to exactly n * k_in; entries stay within [0, n-1].
std::vector<std::uint32_t> sample_outdegrees(const GenConfig& config, Rng& rng);

// Stub-matching configuration model: node i gets out_degrees[i] out-stubs and
// k_in in-stubs, matched by a uniform random permutation. Self-loop matchings
// are re-drawn; parallel matchings merge into edge weights.
DirectedMultigraph build_configuration_graph(std::span<const std::uint32_t> out_degrees,
                                             std::uint32_t k_in, Rng& rng);

// Full pipeline seeded from config.seed.
DirectedMultigraph generate_graph(const GenConfig& config);

} // namespace opinet
