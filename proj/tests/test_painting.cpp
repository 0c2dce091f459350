#include <doctest.h>

#include <random>

#include "atmatch/error.hpp"
#include "atmatch/generators.hpp"
#include "atmatch/oracles.hpp"
#include "atmatch/painting.hpp"
#include "atmatch/polynomial.hpp"
#include "support.hpp"

using namespace atmatch;

namespace {

ExponentVector constant(const PlaneGraph& g, int k) {
    ExponentVector t;
    for (VertexId v : g.vertices()) t.set(v, k);
    return t;
}

std::vector<int> as_vector(const PlaneGraph& g, const ExponentVector& t) {
    std::vector<int> out;
    for (VertexId v : g.vertices()) out.push_back(t[v]);
    return out;
}

std::vector<PlaneGraph> small_graphs() {
    std::vector<PlaneGraph> out;
    for (const std::string n : {"k2", "path3", "c3", "c4", "c5", "k4"}) out.push_back(catalog(n).graph);
    // Diamond: K4 minus an edge.
    out.push_back(catalog("k4").graph.without_edges(std::vector<Edge>{{0, 1}}));
    return out;
}

}  // namespace

TEST_CASE("painting: small exact results") {
    CHECK(paint_solve(catalog("k2").graph, constant(catalog("k2").graph, 2), 0).winner == Player::Painter);
    PlaneGraph c3 = catalog("c3").graph;
    CHECK(paint_solve(c3, constant(c3, 2), 0).winner == Player::Lister);
    CHECK(paint_solve(c3, constant(c3, 3), 0).winner == Player::Painter);
    CHECK(paint_solve(c3, constant(c3, 1), 1).winner == Player::Lister);
    CHECK(paint_solve(c3, constant(c3, 1), 2).winner == Player::Painter);
}

TEST_CASE("painting: principal variation is a legal line of play") {
    PlaneGraph c3 = catalog("c3").graph;
    auto r = paint_solve(c3, constant(c3, 2), 0);
    REQUIRE_FALSE(r.principal_variation.empty());
    CHECK(r.principal_variation.size() <= 10);
    CHECK(r.principal_variation.front().player == Player::Lister);
    for (std::size_t i = 0; i + 1 < r.principal_variation.size(); i += 2) {
        const auto& mark = r.principal_variation[i];
        const auto& paint = r.principal_variation[i + 1];
        CHECK(mark.player == Player::Lister);
        CHECK(paint.player == Player::Painter);
        for (VertexId v : paint.vertices)
            CHECK(std::find(mark.vertices.begin(), mark.vertices.end(), v) != mark.vertices.end());
    }
    CHECK(r.states > 0);
}

TEST_CASE("painting: solver agrees with the exhaustive game") {
    std::mt19937_64 rng(4);
    for (const PlaneGraph& g : small_graphs()) {
        for (int d : {0, 1}) {
            for (int trial = 0; trial < 6; ++trial) {
                ExponentVector t;
                for (VertexId v : g.vertices()) t.set(v, 1 + static_cast<int>(rng() % 3));
                const bool want = oracle::Painting(g, d).painter_wins(as_vector(g, t));
                CHECK((paint_solve(g, t, d).winner == Player::Painter) == want);
                PaintOptions full;
                full.maximal_replies = false;
                CHECK((paint_solve(g, t, d, full).winner == Player::Painter) == want);
            }
        }
    }
}

TEST_CASE("painting: more tokens never hurt Painter") {
    std::mt19937_64 rng(12);
    for (const PlaneGraph& g : small_graphs()) {
        for (int trial = 0; trial < 6; ++trial) {
            ExponentVector t;
            for (VertexId v : g.vertices()) t.set(v, 1 + static_cast<int>(rng() % 3));
            if (paint_solve(g, t, 0).winner != Player::Painter) continue;
            ExponentVector more = t;
            for (VertexId v : g.vertices())
                if (rng() % 2) more.add(v, 1);
            CHECK(paint_solve(g, more, 0).winner == Player::Painter);
        }
    }
}

TEST_CASE("paintable implies choosable on sampled lists") {
    std::mt19937_64 rng(21);
    for (const std::string name : {"c3", "c4", "c5", "k4", "w5"}) {
        PlaneGraph g = catalog(name).graph;
        int k = 1;
        while (paint_solve(g, constant(g, k), 0).winner != Player::Painter) ++k;
        for (int s = 0; s < 20; ++s) {
            ListAssignment lists;
            for (VertexId v : g.vertices()) {
                std::vector<int> all;
                for (int c = 0; c < 2 * k; ++c) all.push_back(c);
                std::shuffle(all.begin(), all.end(), rng);
                all.resize(static_cast<std::size_t>(k));
                lists[v] = all;
            }
            CAPTURE(name);
            CHECK(list_color(g, {}, lists, 0).has_value());
        }
    }
}

TEST_CASE("Alon-Tarsi bound implies paintability") {
    for (const std::string name : {"k2", "path3", "c3", "c4", "c5", "k4", "w5", "w6", "octahedron"}) {
        PlaneGraph g = catalog(name).graph;
        if (g.vertex_count() > 7) continue;
        const int k = at_number(g, {}).k;
        ExponentVector f = constant(g, k);
        REQUIRE(f_at_check(g, {}, f));
        CAPTURE(name);
        CHECK(paint_solve(g, f, 0).winner == Player::Painter);
    }
}

TEST_CASE("painting guards") {
    PlaneGraph ico = catalog("icosahedron").graph;
    CHECK_THROWS_AS(paint_solve(ico, constant(ico, 5), 0), Error);
    PaintOptions tiny;
    tiny.max_states = 3;
    PlaneGraph oct = catalog("octahedron").graph;
    CHECK_THROWS_AS(paint_solve(oct, constant(oct, 3), 0, tiny), Error);
    CHECK_THROWS_AS(paint_solve(oct, constant(oct, 2), -1), Error);
    // A vertex without tokens loses at once.
    CHECK(paint_solve(oct, ExponentVector{{0, 1}}, 0).winner == Player::Lister);
}
