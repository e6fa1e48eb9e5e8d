#pragma once

#include <cstdint>
#include <vector>

#include "opinet/graph.hpp"
#include "opinet/rng.hpp"

namespace opinet {

// One binary opinion per node.
using OpinionState = std::vector<std::uint8_t>;

struct ThresholdAssignment {
    std::vector<double> thresholds; // per-node, each a member of threshold_set(n_th)
    std::uint32_t n_th = 2;
};

struct FixationRecord {
    std::uint64_t t_f_sweeps = 0;
    std::uint64_t t_f_picks = 0; // = t_f_sweeps * N; absorption is resolved at sweep boundaries
    double s_bar = 0.0;
    bool absorbed = false;
};

// n_th evenly spaced values from 0.5 to 1 inclusive.
std::vector<double> threshold_set(std::uint32_t n_th);

// Each node's threshold drawn independently and uniformly from threshold_set(n_th).
ThresholdAssignment assign_thresholds(NodeId n, std::uint32_t n_th, Rng& rng);

// Bernoulli(p) initial opinions.
OpinionState init_opinions(NodeId n, double p, Rng& rng);

// Multiplicity-weighted mean opinion of the node's in-neighbors.
double neighbor_mean(const DirectedMultigraph& graph, const OpinionState& state, NodeId node);

// Strict-threshold update rule: an off node turns on when the in-neighbor
// mean strictly exceeds its threshold; an on node turns off when the mean
// falls strictly below one minus its threshold. Ties never flip.
std::uint8_t flip_decision(std::uint8_t s_i, double o_bar, double phi_i);

// True iff no node with at least one in-neighbor would change.
bool is_absorbed(const DirectedMultigraph& graph, const OpinionState& state,
                 const ThresholdAssignment& thresholds);

// Asynchronous dynamics: repeatedly pick a uniform random node and update it
// in place. One sweep = N picks; absorption is checked at sweep boundaries.
// A spent sweep budget is reported via absorbed=false, not an error.
FixationRecord run_to_fixation(const DirectedMultigraph& graph, OpinionState& state,
                               const ThresholdAssignment& thresholds,
                               std::uint64_t max_sweeps, Rng& rng);

double mean_opinion(const OpinionState& state);

} // namespace opinet
