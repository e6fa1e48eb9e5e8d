#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opinet/graph.hpp"

namespace opinet {

struct ContentRecord {
    std::string id;
    std::optional<std::string> parent_id; // absent = root post
    std::string author;
    std::int64_t created_utc = 0;
    std::optional<double> polarity; // in [-1, 1] when present
};

// Parsed reply forest. Records are stored flat; tree structure lives in the
// parent/children index arrays. Roots and children are ordered by
// (created_utc, id).
struct CascadeForest {
    std::vector<ContentRecord> records;
    std::vector<std::int32_t> parent;                  // index into records, -1 for roots
    std::vector<std::vector<std::uint32_t>> children;
    std::vector<std::uint32_t> roots;
    std::vector<bool> orphaned; // parent_id referenced an id missing from the dump

    std::uint32_t tree_size(std::uint32_t root) const;
};

// JSON Lines, one record per line with fields `id`, `parent_id`, `author`,
// `created_utc`, `polarity`. Records whose parent is missing become flagged
// roots; a parent cycle is malformed input.
CascadeForest parse_cascades(std::istream& in);
CascadeForest parse_cascades_file(const std::string& path);

// (influencer, follower) author pairs for one tree: every non-root record
// follows each distinct author on its strict ancestor chain, skipping itself.
std::vector<std::pair<std::string, std::string>> cascade_to_edges(const CascadeForest& forest,
                                                                  std::uint32_t root);

struct IngestedNetwork {
    DirectedMultigraph graph;
    std::vector<std::string> authors; // node id -> author name
};

// Accumulates influence pairs across the whole forest; repeated pairs add
// edge weight. Every author seen in the forest gets a node.
IngestedNetwork build_network(const CascadeForest& forest);

void write_author_map_csv(std::ostream& out, const std::vector<std::string>& authors);

struct PowerlawFit {
    double gamma_hat = 0.0;
    double r_squared = 0.0;
};

// Least-squares regression of log(frequency) on log(degree) over the raw
// histogram of positive degrees, zero-count bins dropped.
PowerlawFit powerlaw_fit(std::span<const std::uint64_t> degrees);

struct PolaritySample {
    std::int64_t created_utc = 0;
    std::string id;
    double polarity = 0.0;
};

// Sorts by (created_utc, id) and splits into n_bins contiguous near-equal
// groups (earlier bins take the remainder); returns per-bin means.
std::vector<double> bin_polarity(std::vector<PolaritySample> samples, std::uint32_t n_bins = 20);

// Root indices of the k largest trees by record count (ties: earlier, then
// smaller-id roots first).
std::vector<std::uint32_t> largest_cascades(const CascadeForest& forest, std::uint32_t k);

} // namespace opinet
