#ifndef ATMATCH_GRAPH_IO_HPP
#define ATMATCH_GRAPH_IO_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "atmatch/exponent.hpp"
#include "atmatch/plane_graph.hpp"

namespace atmatch {

struct GraphDocument {
    PlaneGraph graph;
    Signature signature;
};

// Line format:
//   v <name>                  declare a vertex (declaration order = vertex order)
//   rot <name>: <n1> <n2> ... counterclockwise neighbor cycle
//   outer <u> <v>             anchor dart, outer face on its left
//   sign <u> <v> <+1|-1>      edge sign, default +1
// `#` starts a comment.
GraphDocument parse_graph(std::string_view text);

// Canonical text: vertices in order, one rot line each, the anchor, then the
// -1 signs of edges present in `g`. Parsing it back gives an equal graph.
std::string serialize_graph(const PlaneGraph& g, const Signature& sigma = {});

// "fnv1a64:" followed by 16 hex digits of the canonical text.
std::string graph_digest(const PlaneGraph& g, const Signature& sigma);

VertexId parse_vertex(const PlaneGraph& g, std::string_view name);

// "u,v" (also accepts "u-v").
Edge parse_edge(const PlaneGraph& g, std::string_view spec);

// "v1=1,v3=2"; omitted vertices are 0; "-" or "" is the zero vector.
ExponentVector parse_eta(const PlaneGraph& g, std::string_view spec);

// Inverse of parse_eta: entries in vertex order, "-" when empty.
std::string format_eta(const PlaneGraph& g, const ExponentVector& eta);

using ListAssignment = std::map<VertexId, std::vector<int>>;

// One line per vertex: "name: c1 c2 ...".
ListAssignment parse_lists(const PlaneGraph& g, std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace atmatch

#endif
