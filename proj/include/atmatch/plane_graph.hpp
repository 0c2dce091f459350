#ifndef ATMATCH_PLANE_GRAPH_HPP
#define ATMATCH_PLANE_GRAPH_HPP

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atmatch {

// Vertex ids are positions in the declaration order of the root graph. The
// same id names the same vertex in every subgraph derived from it, and the
// integer order of ids is the linear order used by graph polynomials.
using VertexId = int;

struct Edge {
    VertexId u = -1;
    VertexId v = -1;

    static Edge normalized(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    Edge sorted() const { return normalized(u, v); }
    bool touches(VertexId w) const { return u == w || v == w; }
    bool same_endpoints(const Edge& o) const { return sorted() == o.sorted(); }

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// A directed edge. The face on its left is traced by `PlaneGraph::trace_face`.
struct Dart {
    VertexId from = -1;
    VertexId to = -1;

    Dart reversed() const { return {to, from}; }
    Edge edge() const { return Edge::normalized(from, to); }

    friend auto operator<=>(const Dart&, const Dart&) = default;
    friend bool operator==(const Dart&, const Dart&) = default;
};

using NameTable = std::shared_ptr<const std::vector<std::string>>;

// Immutable plane graph given by a rotation system (counterclockwise neighbor
// cycles) and an anchor dart whose left face is the outer face.
class PlaneGraph {
public:
    PlaneGraph() = default;

    // Builds and validates a root graph. `rotation[i]` is the cyclic neighbor
    // list of vertex i (ids index into `names`). The anchor is required as
    // soon as the graph has an edge.
    static PlaneGraph build(std::vector<std::string> names, std::vector<std::vector<VertexId>> rotation,
                            std::optional<Dart> outer_anchor);

    // Builds a graph over a subset of the ids of `names`.
    static PlaneGraph build_subset(NameTable names, std::vector<VertexId> ids,
                                   std::vector<std::vector<VertexId>> rotation, std::optional<Dart> outer_anchor);

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::span<const VertexId> vertices() const { return ids_; }
    bool contains(VertexId v) const;
    const std::vector<VertexId>& rotation(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(rotation(v).size()); }
    bool has_edge(VertexId a, VertexId b) const;
    // All edges, normalized (u < v) and sorted lexicographically.
    std::vector<Edge> edges() const;

    const NameTable& names() const { return names_; }
    const std::string& name(VertexId v) const { return (*names_)[static_cast<std::size_t>(v)]; }
    std::optional<VertexId> find(std::string_view name) const;
    std::string edge_name(const Edge& e) const { return name(e.u) + "-" + name(e.v); }

    std::optional<Dart> outer_anchor() const { return anchor_; }
    PlaneGraph with_anchor(Dart anchor) const;

    // Counterclockwise successor / predecessor of neighbor `u` around `v`.
    VertexId rotation_next(VertexId v, VertexId u) const;
    VertexId rotation_prev(VertexId v, VertexId u) const;

    // Darts of the face on the left of `start`, in traversal order.
    std::vector<Dart> trace_face(Dart start) const;
    std::size_t face_count() const;

    std::vector<std::vector<VertexId>> components() const;
    bool is_connected() const { return components().size() <= 1; }

    // Rotation system restricted to `keep` (which must be a subset of this
    // graph's vertices). The anchor must be a dart of the subgraph.
    PlaneGraph induced_subgraph(std::span<const VertexId> keep, std::optional<Dart> anchor) const;

    // Inserts the edge xy, placing y right after `after_x` in the rotation of x
    // and x right after `after_y` in the rotation of y.
    PlaneGraph with_edge(VertexId x, VertexId after_x, VertexId y, VertexId after_y, Dart anchor) const;

    // Deletes the given edges (missing ones are an error). The anchor moves to
    // a surviving dart of the old outer face when its own edge goes.
    PlaneGraph without_edges(std::span<const Edge> removed) const;

    // Same graph with every rotation reversed and the anchor flipped; the
    // outer face is preserved as a vertex set.
    PlaneGraph mirrored() const;

    friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
        return a.ids_ == b.ids_ && a.rot_ == b.rot_ && a.anchor_ == b.anchor_;
    }

private:
    int local(VertexId v) const;
    void validate();

    NameTable names_ = std::make_shared<const std::vector<std::string>>();
    std::vector<VertexId> ids_;
    std::vector<int> local_;  // id -> index into ids_/rot_, -1 if absent
    std::vector<std::vector<VertexId>> rot_;
    std::optional<Dart> anchor_;
    std::size_t edge_count_ = 0;
};

struct BoundaryWalk {
    std::vector<VertexId> vertices;
    bool is_simple_cycle = false;
};

// A set of pairwise disjoint edges. When oriented, each pair is (head, tail),
// i.e. edge.u is the head x_i and edge.v the tail y_i.
struct Matching {
    std::vector<Edge> edges;
    bool oriented = false;

    bool covers(VertexId v) const;
    int degree(VertexId v) const { return covers(v) ? 1 : 0; }
    bool contains_edge(const Edge& e) const;
    std::vector<VertexId> heads() const;
    // Canonical form: unoriented pairs normalized, pairs sorted.
    Matching canonical() const;

    friend bool operator==(const Matching&, const Matching&) = default;
};

// Dart of `e` lying on the outer face, preferring e.u -> e.v.
std::optional<Dart> boundary_dart(const PlaneGraph& g, const Edge& e);

// Outer face of the component containing `v`. The anchor's component uses the
// anchor; any other component uses the face left of its smallest edge.
std::optional<Dart> component_outer_dart(const PlaneGraph& g, VertexId v);

// Vertices on the outer face of their component (isolated vertices included).
std::vector<VertexId> boundary_vertices(const PlaneGraph& g);

// Outer-face walk starting with the boundary dart of `e` when given,
// otherwise with the anchor.
BoundaryWalk boundary_walk(const PlaneGraph& g, std::optional<Edge> e = std::nullopt);

std::vector<Edge> find_chords(const PlaneGraph& g, const BoundaryWalk& walk);

struct ChordSplit {
    PlaneGraph with_edge;   // contains e
    PlaneGraph other_side;  // outer anchor on the chord
};
ChordSplit split_at_chord(const PlaneGraph& g, const Edge& chord, const Edge& e);

struct Fan {
    VertexId first = -1;           // v1
    std::vector<VertexId> inner;   // u1..uk
    VertexId last = -1;            // v_{n-1}
};

struct BoundaryDeletion {
    PlaneGraph remainder;  // G - v_n (possibly disconnected)
    VertexId removed = -1; // v_n
    Fan fan;
    BoundaryWalk walk;     // walk of the input graph
    // Connected components of the remainder, the one holding e first. Every
    // other piece is anchored on the face that contained v_n.
    std::vector<PlaneGraph> pieces;
};
BoundaryDeletion delete_boundary_vertex(const PlaneGraph& g, const Edge& e);

struct Augmentation {
    PlaneGraph graph;
    std::vector<Edge> added;  // in insertion order
};
Augmentation augment_to_simple_boundary(const PlaneGraph& g, const Edge& e);

struct MatchingCheck {
    bool valid = true;
    std::string reason;
    explicit operator bool() const { return valid; }
};
MatchingCheck validate_matching(const PlaneGraph& g, const Edge& e, const Matching& m);

}  // namespace atmatch

#endif
