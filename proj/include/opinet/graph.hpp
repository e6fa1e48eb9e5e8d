#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace opinet {

using NodeId = std::uint32_t;

struct Edge {
    NodeId source = 0;
    NodeId target = 0;
    std::uint32_t weight = 1; // parallel-edge multiplicity

    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Direction { in, out };

// Directed multigraph with node ids 0..N-1. Parallel edges are stored as a
// single entry with an integer multiplicity; self-loops are rejected at
// construction. Immutable once built except through explicit rebuilds, so
// concurrent reads from simulation replicates are safe.
class DirectedMultigraph {
public:
    explicit DirectedMultigraph(NodeId node_count = 0);

    static DirectedMultigraph from_edges(NodeId node_count, std::span<const Edge> edges);

    // Merges with any existing (source, target) entry.
    void add_edge(NodeId source, NodeId target, std::uint32_t weight = 1);

    NodeId node_count() const noexcept { return node_count_; }

    // Total edge multiplicity M.
    std::uint64_t total_weight() const noexcept { return total_weight_; }

    std::size_t distinct_edge_count() const noexcept { return distinct_edges_; }

    std::uint64_t out_degree(NodeId node) const { return out_degree_.at(node); }
    std::uint64_t in_degree(NodeId node) const { return in_degree_.at(node); }

    const std::vector<std::uint64_t>& out_degrees() const noexcept { return out_degree_; }
    const std::vector<std::uint64_t>& in_degrees() const noexcept { return in_degree_; }

    // Neighbor lists are kept sorted by node id.
    const std::vector<std::pair<NodeId, std::uint32_t>>& out_neighbors(NodeId node) const {
        return out_adj_.at(node);
    }
    const std::vector<std::pair<NodeId, std::uint32_t>>& in_neighbors(NodeId node) const {
        return in_adj_.at(node);
    }

    // All edges sorted by (source, target).
    std::vector<Edge> edges() const;

private:
    NodeId node_count_ = 0;
    std::uint64_t total_weight_ = 0;
    std::size_t distinct_edges_ = 0;
    std::vector<std::vector<std::pair<NodeId, std::uint32_t>>> out_adj_;
    std::vector<std::vector<std::pair<NodeId, std::uint32_t>>> in_adj_;
    std::vector<std::uint64_t> out_degree_;
    std::vector<std::uint64_t> in_degree_;
};

// Multiplicity-weighted degree of every node in the requested direction.
std::vector<std::uint64_t> degree_sequence(const DirectedMultigraph& graph, Direction direction);

// Pearson correlation over the edge multiset (each edge counted weight times)
// between the source's out-degree and the target's out-degree. Throws
// ErrorCode::degenerate_degrees when either marginal has zero variance.
double assortativity(const DirectedMultigraph& graph);

} // namespace opinet
