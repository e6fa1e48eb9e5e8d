#pragma once

#include <cstdint>
#include <utility>

#include "opinet/graph.hpp"
#include "opinet/rng.hpp"

namespace opinet {

struct RewireConfig {
    double r_target = 0.0;       // in (-1, 1)
    double tolerance = 0.005;
    std::uint64_t max_steps = 10'000'000;
    std::uint64_t seed = 0;
};

// Change in sum over edge instances of out-deg(source) * out-deg(target) when
// (a->b),(c->d) become (a->d),(c->b): (k_a - k_c) * (k_d - k_b). The swap
// preserves all degrees, so the sign equals the sign of the assortativity
// change.
std::int64_t swap_delta(const DirectedMultigraph& graph, const Edge& e1, const Edge& e2);

struct RewireResult {
    DirectedMultigraph graph;
    double achieved_r = 0.0;
    std::uint64_t steps_used = 0;
    bool converged = false;
};

// Degree-preserving double edge swaps over the expanded edge-instance
// multiset. A candidate swap is applied only if it moves r toward the target
// without creating a self-loop and without increasing |r - target|.
//
// Exposed as a class so tests can drive individual swaps and audit the
// incrementally maintained correlation against a full recomputation.
class RewireEngine {
public:
    explicit RewireEngine(const DirectedMultigraph& graph); // throws degenerate_degrees

    double current_r() const noexcept { return r_; }
    std::uint64_t instance_count() const noexcept { return instances_.size(); }
    std::pair<NodeId, NodeId> instance(std::uint64_t index) const { return instances_.at(index); }

    std::int64_t delta(std::uint64_t i, std::uint64_t j) const;

    // Applies the acceptance rule for the swap of instances i and j toward
    // r_target; returns whether the swap was applied.
    bool try_swap(std::uint64_t i, std::uint64_t j, double r_target);

    DirectedMultigraph build_graph() const;

private:
    double r_from_sxy(std::int64_t sum_xy) const;

    NodeId node_count_ = 0;
    std::vector<std::uint64_t> out_degree_;
    std::vector<std::pair<NodeId, NodeId>> instances_;
    std::int64_t sum_xy_ = 0; // the only moment a degree-preserving swap changes
    double m_ = 0.0;          // instance count
    double sx_sy_ = 0.0;      // (sum of x) * (sum of y), fixed by the degrees
    double inv_denom_ = 0.0;  // 1 / sqrt((M*Sxx - Sx^2)(M*Syy - Sy^2)), fixed
    double r_ = 0.0;
};

// Runs the swap loop until |r - r_target| <= tolerance or the step budget is
// spent; the result graph always has the input's exact degree sequences.
RewireResult rewire_best_effort(const DirectedMultigraph& graph, const RewireConfig& config, Rng& rng);

// Same, but throws TargetUnreachableError when the budget runs out.
RewireResult rewire_to_target(const DirectedMultigraph& graph, const RewireConfig& config, Rng& rng);

} // namespace opinet
