#include "atmatch/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "atmatch/error.hpp"

namespace atmatch {

namespace {

using Rotation = std::vector<std::vector<VertexId>>;

std::vector<std::string> numbered(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

// Builds with anchor v1 -> v2; if the face on its left is not `outer`, the
// mirror image is used instead.
PlaneGraph orient(std::vector<std::string> names, Rotation rot, const std::vector<VertexId>& outer) {
    auto walk_of = [](const PlaneGraph& g) {
        std::vector<VertexId> w;
        for (const Dart& d : g.trace_face({0, 1})) w.push_back(d.from);
        return w;
    };
    PlaneGraph g = PlaneGraph::build(names, rot, Dart{0, 1});
    if (walk_of(g) == outer) return g;
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    g = PlaneGraph::build(std::move(names), std::move(rot), Dart{0, 1});
    if (walk_of(g) != outer) throw Error(ErrorCode::InternalProofViolation, "catalog embedding has the wrong outer face");
    return g;
}

struct P2 {
    double x, y;
};

Rotation rotation_2d(const std::vector<P2>& pos, const std::vector<Edge>& edges) {
    Rotation rot(pos.size());
    for (const Edge& e : edges) {
        rot[static_cast<std::size_t>(e.u)].push_back(e.v);
        rot[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (std::size_t v = 0; v < rot.size(); ++v) {
        auto angle = [&](VertexId u) {
            return std::atan2(pos[static_cast<std::size_t>(u)].y - pos[v].y, pos[static_cast<std::size_t>(u)].x - pos[v].x);
        };
        std::sort(rot[v].begin(), rot[v].end(), [&](VertexId a, VertexId b) { return angle(a) < angle(b); });
    }
    return rot;
}

using P3 = std::array<double, 3>;

double dot(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
P3 cross(const P3& a, const P3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

// Convex polyhedron centred at the origin: edges join vertices at distance
// `edge`, rotations go counterclockwise seen from outside.
Rotation rotation_3d(const std::vector<P3>& pts, double edge) {
    const std::size_t n = pts.size();
    Rotation rot(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
            P3 d = sub(pts[u], pts[v]);
            if (u != v && std::abs(std::sqrt(dot(d, d)) - edge) < 1e-6) rot[v].push_back(static_cast<VertexId>(u));
        }
        const P3& normal = pts[v];
        P3 helper = std::abs(normal[0]) < 0.9 ? P3{1, 0, 0} : P3{0, 1, 0};
        P3 t1 = cross(normal, helper);
        P3 t2 = cross(normal, t1);
        auto angle = [&](VertexId u) {
            P3 d = sub(pts[static_cast<std::size_t>(u)], pts[v]);
            return std::atan2(dot(d, t2), dot(d, t1));
        };
        std::sort(rot[v].begin(), rot[v].end(), [&](VertexId a, VertexId b) { return angle(a) < angle(b); });
    }
    return rot;
}

std::vector<VertexId> first_k(int k) {
    std::vector<VertexId> out;
    for (int i = 0; i < k; ++i) out.push_back(i);
    return out;
}

PlaneGraph cycle(int n, bool hub) {
    std::vector<P2> pos;
    std::vector<Edge> edges;
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) {
        double a = pi / 2 - 2 * pi * i / n;  // clockwise
        pos.push_back({std::cos(a), std::sin(a)});
        edges.push_back(Edge::normalized(i, (i + 1) % n));
        if (hub) edges.push_back({i, n});
    }
    auto names = numbered(n);
    if (hub) {
        pos.push_back({0, 0});
        names.push_back("h");
    }
    return orient(std::move(names), rotation_2d(pos, edges), first_k(n));
}

void insert_after(std::vector<VertexId>& r, VertexId after, VertexId w) {
    auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, w);
}

struct Stacker {
    std::vector<std::string> names = numbered(3);
    Rotation rot{{1, 2}, {2, 0}, {0, 1}};
    std::vector<std::array<VertexId, 3>> faces{{1, 0, 2}};  // inner face, left of 1 -> 0

    // Puts a new vertex into inner face `i` and returns the three new faces.
    std::array<std::array<VertexId, 3>, 3> insert(std::size_t i) {
        auto [a, b, c] = faces[i];
        const auto w = static_cast<VertexId>(names.size());
        names.push_back("v" + std::to_string(w + 1));
        insert_after(rot[static_cast<std::size_t>(a)], b, w);
        insert_after(rot[static_cast<std::size_t>(b)], c, w);
        insert_after(rot[static_cast<std::size_t>(c)], a, w);
        rot.push_back({a, b, c});
        return {{{a, b, w}, {b, c, w}, {c, a, w}}};
    }
    PlaneGraph graph() const { return PlaneGraph::build(names, rot, Dart{0, 1}); }
};

PlaneGraph apollonian_levels(int levels) {
    Stacker s;
    for (int level = 0; level < levels; ++level) {
        std::vector<std::array<VertexId, 3>> next;
        for (std::size_t i = 0; i < s.faces.size(); ++i)
            for (const auto& f : s.insert(i)) next.push_back(f);
        s.faces = std::move(next);
    }
    return s.graph();
}

}  // namespace

CatalogEntry catalog(std::string_view name) {
    const std::string n(name);
    if (n == "k2") return {n, orient(numbered(2), {{1}, {0}}, {0, 1}), "single edge"};
    if (n == "path3") return {n, orient(numbered(3), {{1}, {2, 0}, {1}}, {0, 1, 2, 1}), "path v1-v2-v3"};
    if (n == "c3") return {n, cycle(3, false), "triangle"};
    if (n == "c4") return {n, cycle(4, false), "4-cycle"};
    if (n == "c5") return {n, cycle(5, false), "5-cycle"};
    if (n == "k4") {
        std::vector<P2> pos{{0, 1}, {0.866, -0.5}, {-0.866, -0.5}, {0, 0}};
        std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        return {n, orient(numbered(4), rotation_2d(pos, edges), {0, 1, 2}), "outer triangle v1 v2 v3, hub v4"};
    }
    if (n == "w5") return {n, cycle(5, true), "wheel, rim v1..v5, hub h"};
    if (n == "w6") return {n, cycle(6, true), "wheel, rim v1..v6, hub h"};
    if (n == "octahedron") {
        std::vector<P3> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
        return {n, orient(numbered(6), rotation_3d(pts, std::sqrt(2.0)), {0, 1, 2}), "outer face v1 v2 v3"};
    }
    if (n == "icosahedron") {
        const double p = (1 + std::sqrt(5.0)) / 2;
        std::vector<P3> pts{{0, 1, p},  {0, -1, p},  {p, 0, 1},  {-p, 0, 1},  {1, p, 0},   {-1, p, 0},
                            {1, -p, 0}, {-1, -p, 0}, {p, 0, -1}, {-p, 0, -1}, {0, 1, -p}, {0, -1, -p}};
        return {n, orient(numbered(12), rotation_3d(pts, 2.0), {0, 1, 2}), "outer face v1 v2 v3"};
    }
    const std::string prefix = "apollonian-";
    if (n.rfind(prefix, 0) == 0 && n.size() > prefix.size() && n.size() <= prefix.size() + 1 &&
        std::isdigit(static_cast<unsigned char>(n.back()))) {
        int k = n.back() - '0';
        if (k <= 4) return {n, apollonian_levels(k), "stacked triangulation, " + std::to_string(k) + " levels"};
    }
    throw Error(ErrorCode::UnknownName, "no catalog graph named '" + n + "'");
}

std::vector<std::string> catalog_names() {
    return {"k2", "path3", "c3", "c4", "c5", "k4", "w5", "w6", "octahedron", "icosahedron",
            "apollonian-0", "apollonian-1", "apollonian-2"};
}

PlaneGraph random_apollonian(int n, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::PreconditionViolated, "an Apollonian network needs at least 3 vertices");
    std::mt19937_64 rng(seed);
    Stacker s;
    while (static_cast<int>(s.names.size()) < n) {
        const std::size_t i = static_cast<std::size_t>(rng() % s.faces.size());
        auto parts = s.insert(i);
        s.faces[i] = parts[0];
        s.faces.push_back(parts[1]);
        s.faces.push_back(parts[2]);
    }
    return s.graph();
}

Signature random_signature(const PlaneGraph& g, std::uint64_t seed, bool all_plus) {
    Signature sigma;
    if (all_plus) return sigma;
    std::mt19937_64 rng(seed);
    for (const Edge& e : g.edges())
        if (rng() % 2 == 1) sigma.set(e.u, e.v, -1);
    return sigma;
}

std::vector<Edge> boundary_edges(const PlaneGraph& g) {
    std::set<Edge> out;
    for (const auto& comp : g.components())
        if (auto d = component_outer_dart(g, comp.front()))
            for (const Dart& f : g.trace_face(*d)) out.insert(f.edge());
    return {out.begin(), out.end()};
}

std::optional<Edge> default_boundary_edge(const PlaneGraph& g) {
    auto anchor = g.outer_anchor();
    if (!anchor) return std::nullopt;
    std::optional<Edge> best;
    for (const Dart& d : g.trace_face(*anchor))
        if (!best || d.edge() < *best) best = d.edge();
    return best;
}

std::string export_dot(const PlaneGraph& g, const std::optional<Certificate>& cert) {
    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle];\n";
    for (VertexId v : g.vertices()) {
        out << "  \"" << g.name(v) << "\"";
        if (cert) out << " [label=\"" << g.name(v) << ":" << cert->eta_final[v] << "\"]";
        out << ";\n";
    }
    for (const Edge& e : g.edges()) {
        std::vector<std::string> attrs;
        Edge drawn = e;
        if (cert) {
            if (cert->e.same_endpoints(e)) attrs.push_back("style=dashed");
            for (const Edge& p : cert->matching.edges) {
                if (!p.same_endpoints(e)) continue;
                attrs.push_back("style=bold");
                if (cert->matching.oriented) {
                    drawn = {p.v, p.u};  // tail -- head, arrow at the head
                    attrs.push_back("dir=forward");
                }
            }
        }
        out << "  \"" << g.name(drawn.u) << "\" -- \"" << g.name(drawn.v) << "\"";
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
            out << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace atmatch
