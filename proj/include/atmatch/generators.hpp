#ifndef ATMATCH_GENERATORS_HPP
#define ATMATCH_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atmatch/exponent.hpp"
#include "atmatch/extractor.hpp"
#include "atmatch/plane_graph.hpp"

namespace atmatch {

struct CatalogEntry {
    std::string name;
    PlaneGraph graph;
    std::string note;
};

// k2, path3, c3, c4, c5, k4, w5, w6, octahedron, icosahedron, apollonian-<k>.
// Outer vertices are v1, v2, ... in boundary order with the anchor (v1, v2);
// wheel hubs are called h and come last.
CatalogEntry catalog(std::string_view name);

// Fixed-size catalog names (apollonian-0 .. apollonian-2 included).
std::vector<std::string> catalog_names();

// Stacked triangulation: a triangle, then n - 3 insertions of a vertex into a
// uniformly chosen inner face. The triangle v1 v2 v3 stays outer.
PlaneGraph random_apollonian(int n, std::uint64_t seed);

// Independent fair signs per edge (in edge order); all_plus forces +1.
Signature random_signature(const PlaneGraph& g, std::uint64_t seed, bool all_plus = false);

// DOT text. With a certificate: matching edges bold (oriented pairs point at
// their head), e dashed, labels "name:exponent" from eta_final.
std::string export_dot(const PlaneGraph& g, const std::optional<Certificate>& cert = std::nullopt);

// Smallest edge (by vertex order) on the outer face of the anchor component.
std::optional<Edge> default_boundary_edge(const PlaneGraph& g);

// All edges with a dart on the outer face of their component.
std::vector<Edge> boundary_edges(const PlaneGraph& g);

}  // namespace atmatch

#endif
