#include "opinet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "opinet/errors.hpp"

namespace opinet {

DirectedMultigraph::DirectedMultigraph(NodeId node_count)
    : node_count_(node_count),
      out_adj_(node_count),
      in_adj_(node_count),
      out_degree_(node_count, 0),
      in_degree_(node_count, 0) {}

DirectedMultigraph DirectedMultigraph::from_edges(NodeId node_count, std::span<const Edge> edges) {
    DirectedMultigraph graph(node_count);
    for (const Edge& e : edges)
        graph.add_edge(e.source, e.target, e.weight);
    return graph;
}

namespace {

void merge_into(std::vector<std::pair<NodeId, std::uint32_t>>& adj, NodeId key,
                std::uint32_t weight, bool& inserted) {
    auto it = std::lower_bound(adj.begin(), adj.end(), key,
                               [](const auto& entry, NodeId k) { return entry.first < k; });
    if (it != adj.end() && it->first == key) {
        it->second += weight;
        inserted = false;
    } else {
        adj.insert(it, {key, weight});
        inserted = true;
    }
}

} // namespace

void DirectedMultigraph::add_edge(NodeId source, NodeId target, std::uint32_t weight) {
    if (source >= node_count_ || target >= node_count_)
        throw Error(ErrorCode::invalid_argument,
                    "edge endpoint out of range: " + std::to_string(source) + "->" +
                        std::to_string(target) + " with " + std::to_string(node_count_) +
                        " nodes");
    if (source == target)
        throw Error(ErrorCode::invalid_argument,
                    "self-loop rejected at node " + std::to_string(source));
    if (weight == 0)
        throw Error(ErrorCode::invalid_argument, "edge weight must be positive");

    bool inserted = false;
    merge_into(out_adj_[source], target, weight, inserted);
    bool inserted_in = false;
    merge_into(in_adj_[target], source, weight, inserted_in);
    if (inserted)
        ++distinct_edges_;
    out_degree_[source] += weight;
    in_degree_[target] += weight;
    total_weight_ += weight;
}

std::vector<Edge> DirectedMultigraph::edges() const {
    std::vector<Edge> result;
    result.reserve(distinct_edges_);
    for (NodeId source = 0; source < node_count_; ++source)
        for (const auto& [target, weight] : out_adj_[source])
            result.push_back({source, target, weight});
    return result; // out_adj_ is sorted by target, so this is (source, target) order
}

std::vector<std::uint64_t> degree_sequence(const DirectedMultigraph& graph, Direction direction) {
    return direction == Direction::out ? graph.out_degrees() : graph.in_degrees();
}

double assortativity(const DirectedMultigraph& graph) {
    if (graph.total_weight() == 0)
        throw Error(ErrorCode::invalid_argument, "assortativity needs at least one edge");

    const auto& k_out = graph.out_degrees();

    // Degeneracy is decided on the integer degrees, not on a computed
    // variance, so it is immune to rounding.
    std::uint64_t min_x = std::numeric_limits<std::uint64_t>::max(), max_x = 0;
    std::uint64_t min_y = std::numeric_limits<std::uint64_t>::max(), max_y = 0;
    for (NodeId source = 0; source < graph.node_count(); ++source) {
        for (const auto& [target, weight] : graph.out_neighbors(source)) {
            (void)weight;
            min_x = std::min(min_x, k_out[source]);
            max_x = std::max(max_x, k_out[source]);
            min_y = std::min(min_y, k_out[target]);
            max_y = std::max(max_y, k_out[target]);
        }
    }
    if (min_x == max_x || min_y == max_y)
        throw Error(ErrorCode::degenerate_degrees,
                    "assortativity undefined: zero degree variance across edge endpoints");

    const double total = static_cast<double>(graph.total_weight());
    double sum_x = 0.0, sum_y = 0.0;
    for (NodeId source = 0; source < graph.node_count(); ++source) {
        for (const auto& [target, weight] : graph.out_neighbors(source)) {
            const double w = static_cast<double>(weight);
            sum_x += w * static_cast<double>(k_out[source]);
            sum_y += w * static_cast<double>(k_out[target]);
        }
    }
    const double mean_x = sum_x / total;
    const double mean_y = sum_y / total;

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (NodeId source = 0; source < graph.node_count(); ++source) {
        for (const auto& [target, weight] : graph.out_neighbors(source)) {
            const double w = static_cast<double>(weight);
            const double dx = static_cast<double>(k_out[source]) - mean_x;
            const double dy = static_cast<double>(k_out[target]) - mean_y;
            sxx += w * dx * dx;
            syy += w * dy * dy;
            sxy += w * dx * dy;
        }
    }
    return sxy / std::sqrt(sxx * syy);
}

} // namespace opinet
