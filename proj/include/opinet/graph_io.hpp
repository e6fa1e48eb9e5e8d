#pragma once

#include <iosfwd>
#include <string>

#include "opinet/graph.hpp"

namespace opinet {

// Edge-list CSV with header `source,target,weight`. Writing is deterministic:
// rows sorted by (source, target). Reading infers the node count as
// max endpoint + 1 and merges duplicate (source, target) rows.
DirectedMultigraph read_edge_csv(std::istream& in);
DirectedMultigraph read_edge_csv_file(const std::string& path);
void write_edge_csv(std::ostream& out, const DirectedMultigraph& graph);
void write_edge_csv_file(const DirectedMultigraph& graph, const std::string& path);

// Shortest round-trip decimal form, used for all CSV output so repeated runs
// are byte-identical.
std::string format_double(double value);

} // namespace opinet
