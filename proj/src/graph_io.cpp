#include "opinet/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "opinet/errors.hpp"

namespace opinet {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec; // 64 bytes always suffice for shortest form
    return std::string(buf, ptr);
}

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return line;
}

std::uint64_t parse_uint(const std::string& text, const char* what, std::size_t line_no) {
    std::uint64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw Error(ErrorCode::invalid_argument, std::string("bad ") + what + " on line " +
                                                     std::to_string(line_no) + ": '" + text + "'");
    return value;
}

} // namespace

DirectedMultigraph read_edge_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorCode::io_error, "empty edge csv");
    if (strip_cr(line) != "source,target,weight")
        throw Error(ErrorCode::invalid_argument,
                    "edge csv must start with header 'source,target,weight'");

    std::vector<Edge> edges;
    NodeId max_node = 0;
    bool any = false;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty())
            continue;
        std::string fields[3];
        std::size_t start = 0;
        for (int f = 0; f < 3; ++f) {
            const std::size_t comma = line.find(',', start);
            if (f < 2) {
                if (comma == std::string::npos)
                    throw Error(ErrorCode::invalid_argument,
                                "expected 3 fields on line " + std::to_string(line_no));
                fields[f] = line.substr(start, comma - start);
                start = comma + 1;
            } else {
                if (comma != std::string::npos)
                    throw Error(ErrorCode::invalid_argument,
                                "expected 3 fields on line " + std::to_string(line_no));
                fields[f] = line.substr(start);
            }
        }
        const std::uint64_t source = parse_uint(fields[0], "source", line_no);
        const std::uint64_t target = parse_uint(fields[1], "target", line_no);
        const std::uint64_t weight = parse_uint(fields[2], "weight", line_no);
        if (source > 0xFFFFFFFFull || target > 0xFFFFFFFFull)
            throw Error(ErrorCode::invalid_argument,
                        "node id too large on line " + std::to_string(line_no));
        if (weight == 0 || weight > 0xFFFFFFFFull)
            throw Error(ErrorCode::invalid_argument,
                        "weight out of range on line " + std::to_string(line_no));
        edges.push_back({static_cast<NodeId>(source), static_cast<NodeId>(target),
                         static_cast<std::uint32_t>(weight)});
        max_node = std::max({max_node, static_cast<NodeId>(source), static_cast<NodeId>(target)});
        any = true;
    }
    return DirectedMultigraph::from_edges(any ? max_node + 1 : 0, edges);
}

DirectedMultigraph read_edge_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::io_error, "cannot open " + path);
    return read_edge_csv(in);
}

void write_edge_csv(std::ostream& out, const DirectedMultigraph& graph) {
    out << "source,target,weight\n";
    for (const Edge& e : graph.edges())
        out << e.source << ',' << e.target << ',' << e.weight << '\n';
}

void write_edge_csv_file(const DirectedMultigraph& graph, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::io_error, "cannot open " + path + " for writing");
    write_edge_csv(out, graph);
    out.flush();
    if (!out)
        throw Error(ErrorCode::io_error, "failed writing " + path);
}

} // namespace opinet
