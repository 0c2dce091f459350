#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "atmatch/error.hpp"
#include "atmatch/generators.hpp"
#include "atmatch/plane_graph.hpp"
#include "support.hpp"

using namespace atmatch;

namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

std::vector<VertexId> ids(std::initializer_list<int> one_based) {
    std::vector<VertexId> out;
    for (int i : one_based) out.push_back(i - 1);
    return out;
}

PlaneGraph triangle() { return PlaneGraph::build({"v1", "v2", "v3"}, {{1, 2}, {2, 0}, {0, 1}}, Dart{0, 1}); }

std::set<Edge> edge_set(const PlaneGraph& g) {
    auto e = g.edges();
    return {e.begin(), e.end()};
}

// Two triangles a b c and c d e glued at c.
PlaneGraph bowtie() {
    return oracle::from_coords({{-2, 1}, {-2, -1}, {0, 0}, {2, 1}, {2, -1}},
                               {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}, {0, 1, 2, 4, 3, 2},
                               {"a", "b", "c", "d", "e"});
}

void check_rotation_invariants(const PlaneGraph& g) {
    std::size_t total = 0;
    for (VertexId v : g.vertices()) total += g.rotation(v).size();
    CHECK(total == 2 * g.edge_count());
    std::multiset<Dart> seen;
    for (VertexId v : g.vertices())
        for (VertexId u : g.rotation(v)) {
            Dart d{v, u};
            if (seen.count(d)) continue;
            for (const Dart& f : g.trace_face(d)) seen.insert(f);
        }
    CHECK(seen.size() == 2 * g.edge_count());
    for (const Dart& d : seen) CHECK(seen.count(d) == 1);
}

}  // namespace

TEST_CASE("build: triangle, asymmetric rotation, K4 faces") {
    PlaneGraph t = triangle();
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);
    CHECK(t.face_count() == 2);

    CHECK(code_of([] { PlaneGraph::build({"v1", "v2", "v3"}, {{1, 2}, {2}, {0, 1}}, Dart{0, 1}); }) ==
          ErrorCode::AsymmetricRotation);
    CHECK(code_of([] { PlaneGraph::build({"v1", "v2"}, {{0, 1}, {0}}, Dart{0, 1}); }) == ErrorCode::LoopEdge);
    CHECK(code_of([] { PlaneGraph::build({"v1", "v2"}, {{1, 1}, {0, 0}}, Dart{0, 1}); }) == ErrorCode::ParallelEdge);
    CHECK(code_of([] { PlaneGraph::build({"v1", "v2"}, {{5}, {0}}, Dart{0, 1}); }).has_value());
    CHECK(code_of([] { PlaneGraph::build({"v1", "v2", "v3"}, {{1, 2}, {2, 0}, {0, 1}}, Dart{0, 0}); }) ==
          ErrorCode::InvalidAnchor);

    PlaneGraph k4 = catalog("k4").graph;
    CHECK(k4.vertex_count() - k4.edge_count() + k4.face_count() == 2);
    CHECK(k4.face_count() == 4);
}

TEST_CASE("build: a rotation system that is not planar fails the Euler check") {
    // K4 with one rotation flipped has 2 faces: V - E + F = 0.
    CHECK(code_of([] {
              PlaneGraph::build({"a", "b", "c", "d"}, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}, Dart{0, 1});
          }) == ErrorCode::EulerViolation);
}

TEST_CASE("rotation and face invariants on the catalog") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        check_rotation_invariants(catalog(name).graph);
    }
    check_rotation_invariants(bowtie());
}

TEST_CASE("boundary_walk") {
    auto w = boundary_walk(triangle());
    CHECK(w.vertices == ids({1, 2, 3}));
    CHECK(w.is_simple_cycle);

    auto p = boundary_walk(catalog("path3").graph);
    CHECK(p.vertices == ids({1, 2, 3, 2}));
    CHECK_FALSE(p.is_simple_cycle);

    auto k = boundary_walk(catalog("k4").graph);
    CHECK(k.vertices == ids({1, 2, 3}));
    CHECK(k.is_simple_cycle);

    auto c = boundary_walk(catalog("c4").graph, Edge{2, 3});
    CHECK(c.vertices == ids({3, 4, 1, 2}));
}

TEST_CASE("find_chords") {
    PlaneGraph c4 = oracle::polygon(4);
    CHECK(find_chords(c4, boundary_walk(c4)).empty());

    PlaneGraph c4c = oracle::polygon(4, {{0, 2}});
    CHECK(find_chords(c4c, boundary_walk(c4c)) == std::vector<Edge>{{0, 2}});

    PlaneGraph c5 = oracle::polygon(5, {{0, 2}, {0, 3}});
    CHECK(find_chords(c5, boundary_walk(c5)) == std::vector<Edge>{{0, 2}, {0, 3}});

    PlaneGraph k4 = catalog("k4").graph;
    CHECK(find_chords(k4, boundary_walk(k4)).empty());
}

TEST_CASE("split_at_chord") {
    PlaneGraph c4c = oracle::polygon(4, {{0, 2}});
    auto s = split_at_chord(c4c, {0, 2}, {0, 1});
    CHECK(std::vector<VertexId>(s.with_edge.vertices().begin(), s.with_edge.vertices().end()) == ids({1, 2, 3}));
    CHECK(std::vector<VertexId>(s.other_side.vertices().begin(), s.other_side.vertices().end()) == ids({1, 3, 4}));
    CHECK(s.with_edge.edge_count() == 3);
    CHECK(s.other_side.edge_count() == 3);
    CHECK(s.other_side.outer_anchor()->edge() == Edge{0, 2});

    PlaneGraph c5c = oracle::polygon(5, {{0, 2}});
    auto t = split_at_chord(c5c, {0, 2}, {3, 4});
    CHECK(std::vector<VertexId>(t.with_edge.vertices().begin(), t.with_edge.vertices().end()) == ids({1, 3, 4, 5}));
    CHECK(std::vector<VertexId>(t.other_side.vertices().begin(), t.other_side.vertices().end()) == ids({1, 2, 3}));

    CHECK(code_of([&] { split_at_chord(c5c, {0, 1}, {3, 4}); }) == ErrorCode::NotAChord);
}

TEST_CASE("split_at_chord partitions the edges and shares only the chord") {
    for (int seed = 1; seed <= 30; ++seed) {
        PlaneGraph g = random_apollonian(6 + seed % 5, static_cast<std::uint64_t>(seed));
        // Cut off the outer vertex v3 to expose chords.
        auto del = delete_boundary_vertex(g, {0, 1});
        PlaneGraph h = del.pieces.front();
        auto walk = boundary_walk(h, Edge{0, 1});
        if (!walk.is_simple_cycle) continue;
        for (const Edge& f : find_chords(h, walk)) {
            CAPTURE(seed);
            auto s = split_at_chord(h, f, {0, 1});
            auto e1 = edge_set(s.with_edge), e2 = edge_set(s.other_side), all = edge_set(h);
            std::set<Edge> uni, inter;
            std::set_union(e1.begin(), e1.end(), e2.begin(), e2.end(), std::inserter(uni, uni.end()));
            std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::inserter(inter, inter.end()));
            CHECK(uni == all);
            CHECK(inter == std::set<Edge>{f.sorted()});
            std::set<VertexId> v1(s.with_edge.vertices().begin(), s.with_edge.vertices().end());
            std::set<VertexId> common;
            for (VertexId v : s.other_side.vertices())
                if (v1.count(v)) common.insert(v);
            CHECK(common == std::set<VertexId>{f.u, f.v});
        }
    }
}

TEST_CASE("delete_boundary_vertex") {
    auto k4 = delete_boundary_vertex(catalog("k4").graph, {0, 1});
    CHECK(k4.removed == 2);
    CHECK(k4.fan.first == 0);
    CHECK(k4.fan.inner == std::vector<VertexId>{3});
    CHECK(k4.fan.last == 1);

    auto c4 = delete_boundary_vertex(catalog("c4").graph, {0, 1});
    CHECK(c4.removed == 3);
    CHECK(c4.fan.first == 0);
    CHECK(c4.fan.inner.empty());
    CHECK(c4.fan.last == 2);

    PlaneGraph w5 = catalog("w5").graph;
    auto w = delete_boundary_vertex(w5, {0, 1});
    CHECK(w.removed == 4);
    CHECK(w.fan.inner == std::vector<VertexId>{*w5.find("h")});
    CHECK(w.fan.last == 3);
    CHECK(w.remainder.vertex_count() == 5);

    CHECK(code_of([] { delete_boundary_vertex(oracle::polygon(4, {{0, 2}}), {0, 1}); }) == ErrorCode::HasChord);
    CHECK(code_of([] { delete_boundary_vertex(catalog("path3").graph, {0, 1}); }) == ErrorCode::BoundaryNotSimple);
}

TEST_CASE("delete_boundary_vertex: fan degree and interior fan") {
    for (const std::string name : {"k4", "w5", "w6", "octahedron", "icosahedron", "apollonian-2"}) {
        CAPTURE(name);
        PlaneGraph g = catalog(name).graph;
        auto d = delete_boundary_vertex(g, {0, 1});
        CHECK(g.degree(d.removed) == 2 + static_cast<int>(d.fan.inner.size()));
        for (VertexId u : d.fan.inner)
            CHECK(std::find(d.walk.vertices.begin(), d.walk.vertices.end(), u) == d.walk.vertices.end());
        CHECK(d.remainder.edge_count() + static_cast<std::size_t>(g.degree(d.removed)) == g.edge_count());
    }
}

TEST_CASE("augment_to_simple_boundary") {
    auto t = augment_to_simple_boundary(triangle(), {0, 1});
    CHECK(t.added.empty());
    CHECK(t.graph == triangle());

    auto p = augment_to_simple_boundary(catalog("path3").graph, {0, 1});
    CHECK(p.added == std::vector<Edge>{{0, 2}});
    auto pw = boundary_walk(p.graph, Edge{0, 1});
    CHECK(pw.is_simple_cycle);
    CHECK(pw.vertices == ids({1, 2, 3}));

    PlaneGraph b = bowtie();
    CHECK_FALSE(boundary_walk(b, Edge{0, 1}).is_simple_cycle);
    auto a = augment_to_simple_boundary(b, {0, 1});
    CHECK(a.added.size() == 1);
    CHECK(boundary_walk(a.graph, Edge{0, 1}).is_simple_cycle);
    // The added edge joins the two blocks.
    const Edge& x = a.added.front();
    CHECK((x.u <= 1) != (x.v <= 1));
    CHECK(a.graph.vertex_count() - a.graph.edge_count() + a.graph.face_count() == 2);
}

TEST_CASE("augment_to_simple_boundary keeps the embedding and is idempotent") {
    std::vector<PlaneGraph> inputs{catalog("path3").graph, catalog("k2").graph, bowtie()};
    // Star and a longer path.
    inputs.push_back(PlaneGraph::build({"c", "x", "y", "z"}, {{1, 2, 3}, {0}, {0}, {0}}, Dart{0, 1}));
    inputs.push_back(PlaneGraph::build({"p1", "p2", "p3", "p4", "p5"}, {{1}, {0, 2}, {1, 3}, {2, 4}, {3}}, Dart{0, 1}));
    for (const PlaneGraph& g : inputs) {
        const Edge e = g.outer_anchor()->edge();
        auto a = augment_to_simple_boundary(g, e);
        CHECK((boundary_walk(a.graph, e).is_simple_cycle || g.edge_count() == 1));
        for (const Edge& old : g.edges()) CHECK(a.graph.has_edge(old.u, old.v));
        CHECK(a.graph.edge_count() == g.edge_count() + a.added.size());
        // Restricting to the old edges gives back the old rotations.
        PlaneGraph back = a.graph.without_edges(a.added);
        for (VertexId v : g.vertices()) {
            auto r1 = g.rotation(v), r2 = back.rotation(v);
            REQUIRE(r1.size() == r2.size());
            if (r1.empty()) continue;
            auto it = std::find(r2.begin(), r2.end(), r1.front());
            std::rotate(r2.begin(), it, r2.end());
            CHECK(r1 == r2);
        }
        auto again = augment_to_simple_boundary(a.graph, e);
        CHECK(again.added.empty());
        CHECK(again.graph == a.graph);
    }
}

TEST_CASE("validate_matching") {
    PlaneGraph k4 = catalog("k4").graph;
    CHECK(validate_matching(k4, {0, 1}, Matching{}).valid);
    CHECK(validate_matching(k4, {0, 1}, Matching{{{2, 3}}, false}).valid);
    auto bad = validate_matching(k4, {0, 1}, Matching{{{0, 3}}, false});
    CHECK_FALSE(bad.valid);
    CHECK_FALSE(bad.reason.empty());
    CHECK_FALSE(validate_matching(catalog("c5").graph, {0, 1}, Matching{{{2, 3}, {3, 4}}, false}).valid);
    CHECK_FALSE(validate_matching(catalog("c5").graph, {0, 1}, Matching{{{2, 4}}, false}).valid);
}

TEST_CASE("operations leave their inputs untouched") {
    PlaneGraph g = catalog("icosahedron").graph;
    const PlaneGraph copy = g;
    (void)delete_boundary_vertex(g, {0, 1});
    (void)augment_to_simple_boundary(g, {0, 1});
    (void)g.mirrored();
    (void)g.without_edges(std::vector<Edge>{{0, 1}});
    CHECK(g == copy);
}

TEST_CASE("without_edges moves the anchor off a deleted edge") {
    PlaneGraph g = catalog("c4").graph;
    PlaneGraph h = g.without_edges(std::vector<Edge>{{0, 1}});
    REQUIRE(h.outer_anchor());
    CHECK(h.outer_anchor()->edge() != Edge{0, 1});
    CHECK(h.edge_count() == 3);
    CHECK(code_of([&] { g.without_edges(std::vector<Edge>{{0, 2}}); }) == ErrorCode::PreconditionViolated);
}
