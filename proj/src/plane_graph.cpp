#include "atmatch/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "atmatch/error.hpp"

namespace atmatch {

namespace {

std::string id_label(const NameTable& names, VertexId v) {
    if (v >= 0 && static_cast<std::size_t>(v) < names->size()) return (*names)[static_cast<std::size_t>(v)];
    return "#" + std::to_string(v);
}

}  // namespace

PlaneGraph PlaneGraph::build(std::vector<std::string> names, std::vector<std::vector<VertexId>> rotation,
                             std::optional<Dart> outer_anchor) {
    if (rotation.size() != names.size())
        throw Error(ErrorCode::ParseError, "rotation count differs from vertex count");
    std::vector<VertexId> ids(names.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<VertexId>(i);
    auto table = std::make_shared<const std::vector<std::string>>(std::move(names));
    return build_subset(std::move(table), std::move(ids), std::move(rotation), outer_anchor);
}

PlaneGraph PlaneGraph::build_subset(NameTable names, std::vector<VertexId> ids,
                                    std::vector<std::vector<VertexId>> rotation, std::optional<Dart> outer_anchor) {
    PlaneGraph g;
    g.names_ = std::move(names);
    g.local_.assign(g.names_->size(), -1);

    std::vector<std::size_t> order(ids.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
    for (std::size_t i : order) {
        VertexId v = ids[i];
        if (v < 0 || static_cast<std::size_t>(v) >= g.names_->size())
            throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(v) + " outside name table");
        if (g.local_[static_cast<std::size_t>(v)] != -1)
            throw Error(ErrorCode::ParseError, "vertex " + id_label(g.names_, v) + " declared twice");
        g.local_[static_cast<std::size_t>(v)] = static_cast<int>(g.ids_.size());
        g.ids_.push_back(v);
        g.rot_.push_back(std::move(rotation[i]));
    }
    g.anchor_ = outer_anchor;
    g.validate();
    return g;
}

int PlaneGraph::local(VertexId v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= local_.size()) return -1;
    return local_[static_cast<std::size_t>(v)];
}

bool PlaneGraph::contains(VertexId v) const { return local(v) >= 0; }

const std::vector<VertexId>& PlaneGraph::rotation(VertexId v) const {
    int i = local(v);
    if (i < 0) throw Error(ErrorCode::UnknownVertex, "vertex " + id_label(names_, v) + " not in graph");
    return rot_[static_cast<std::size_t>(i)];
}

bool PlaneGraph::has_edge(VertexId a, VertexId b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& r = rotation(a);
    return std::find(r.begin(), r.end(), b) != r.end();
}

std::vector<Edge> PlaneGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < ids_.size(); ++i)
        for (VertexId w : rot_[i])
            if (ids_[i] < w) out.push_back({ids_[i], w});
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<VertexId> PlaneGraph::find(std::string_view name) const {
    for (VertexId v : ids_)
        if ((*names_)[static_cast<std::size_t>(v)] == name) return v;
    return std::nullopt;
}

PlaneGraph PlaneGraph::with_anchor(Dart anchor) const {
    PlaneGraph g = *this;
    g.anchor_ = anchor;
    g.validate();
    return g;
}

VertexId PlaneGraph::rotation_next(VertexId v, VertexId u) const {
    const auto& r = rotation(v);
    auto it = std::find(r.begin(), r.end(), u);
    if (it == r.end())
        throw Error(ErrorCode::UnknownVertex, id_label(names_, u) + " is not a neighbor of " + id_label(names_, v));
    ++it;
    return it == r.end() ? r.front() : *it;
}

VertexId PlaneGraph::rotation_prev(VertexId v, VertexId u) const {
    const auto& r = rotation(v);
    auto it = std::find(r.begin(), r.end(), u);
    if (it == r.end())
        throw Error(ErrorCode::UnknownVertex, id_label(names_, u) + " is not a neighbor of " + id_label(names_, v));
    return it == r.begin() ? r.back() : *(it - 1);
}

std::vector<Dart> PlaneGraph::trace_face(Dart start) const {
    if (!has_edge(start.from, start.to))
        throw Error(ErrorCode::InvalidAnchor,
                    "dart " + id_label(names_, start.from) + "->" + id_label(names_, start.to) + " is not an edge");
    std::vector<Dart> face;
    Dart d = start;
    const std::size_t limit = 2 * edge_count_ + 1;
    do {
        face.push_back(d);
        d = Dart{d.to, rotation_prev(d.to, d.from)};
        if (face.size() > limit) throw Error(ErrorCode::EulerViolation, "face tracing does not close");
    } while (d != start);
    return face;
}

std::size_t PlaneGraph::face_count() const {
    std::set<Dart> seen;
    std::size_t faces = 0;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        for (VertexId w : rot_[i]) {
            Dart d{ids_[i], w};
            if (seen.count(d)) continue;
            ++faces;
            for (const Dart& f : trace_face(d)) seen.insert(f);
        }
    }
    return faces;
}

std::vector<std::vector<VertexId>> PlaneGraph::components() const {
    std::vector<std::vector<VertexId>> out;
    std::vector<char> seen(ids_.size(), 0);
    for (std::size_t s = 0; s < ids_.size(); ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            std::size_t i = q.front();
            q.pop();
            comp.push_back(ids_[i]);
            for (VertexId w : rot_[i]) {
                auto j = static_cast<std::size_t>(local(w));
                if (!seen[j]) {
                    seen[j] = 1;
                    q.push(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

PlaneGraph PlaneGraph::induced_subgraph(std::span<const VertexId> keep, std::optional<Dart> anchor) const {
    std::vector<char> in(names_->size(), 0);
    for (VertexId v : keep) {
        if (!contains(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + id_label(names_, v) + " not in graph");
        in[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<VertexId> ids;
    std::vector<std::vector<VertexId>> rot;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (!in[static_cast<std::size_t>(ids_[i])]) continue;
        ids.push_back(ids_[i]);
        std::vector<VertexId> r;
        for (VertexId w : rot_[i])
            if (in[static_cast<std::size_t>(w)]) r.push_back(w);
        rot.push_back(std::move(r));
    }
    bool has_edges = std::any_of(rot.begin(), rot.end(), [](const auto& r) { return !r.empty(); });
    return build_subset(names_, std::move(ids), std::move(rot), has_edges ? anchor : std::nullopt);
}

PlaneGraph PlaneGraph::with_edge(VertexId x, VertexId after_x, VertexId y, VertexId after_y, Dart anchor) const {
    if (x == y) throw Error(ErrorCode::LoopEdge, "loop at " + id_label(names_, x));
    if (has_edge(x, y))
        throw Error(ErrorCode::ParallelEdge, "edge " + id_label(names_, x) + "-" + id_label(names_, y) + " exists");
    auto rot = rot_;
    auto insert_after = [&](VertexId at, VertexId pivot, VertexId value) {
        auto& r = rot[static_cast<std::size_t>(local(at))];
        if (r.empty()) {
            r.push_back(value);
            return;
        }
        auto it = std::find(r.begin(), r.end(), pivot);
        if (it == r.end())
            throw Error(ErrorCode::UnknownVertex,
                        id_label(names_, pivot) + " is not a neighbor of " + id_label(names_, at));
        r.insert(it + 1, value);
    };
    insert_after(x, after_x, y);
    insert_after(y, after_y, x);
    return build_subset(names_, ids_, std::move(rot), anchor);
}

PlaneGraph PlaneGraph::without_edges(std::span<const Edge> removed) const {
    std::set<Edge> gone;
    for (const Edge& e : removed) {
        if (!has_edge(e.u, e.v)) throw Error(ErrorCode::PreconditionViolated, "removed pair is not an edge");
        gone.insert(e.sorted());
    }
    std::vector<std::vector<VertexId>> rot = rot_;
    for (std::size_t i = 0; i < ids_.size(); ++i)
        std::erase_if(rot[i], [&](VertexId u) { return gone.count(Edge::normalized(ids_[i], u)) > 0; });

    std::optional<Dart> anchor;
    if (anchor_) {
        for (const Dart& d : trace_face(*anchor_))
            if (!gone.count(d.edge())) {
                anchor = d;
                break;
            }
    }
    if (!anchor) {
        for (std::size_t i = 0; i < ids_.size() && !anchor; ++i)
            for (VertexId u : rot[i])
                if (ids_[i] < u && (!anchor || Dart{ids_[i], u} < *anchor)) anchor = Dart{ids_[i], u};
    }
    return build_subset(names_, ids_, std::move(rot), anchor);
}

PlaneGraph PlaneGraph::mirrored() const {
    auto rot = rot_;
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    std::optional<Dart> anchor;
    if (anchor_) anchor = anchor_->reversed();
    return build_subset(names_, ids_, std::move(rot), anchor);
}

void PlaneGraph::validate() {
    std::size_t half_edges = 0;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        VertexId v = ids_[i];
        std::set<VertexId> seen;
        for (VertexId w : rot_[i]) {
            if (w == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + id_label(names_, v));
            if (!contains(w))
                throw Error(ErrorCode::UnknownVertex,
                            "rotation of " + id_label(names_, v) + " lists unknown vertex " + id_label(names_, w));
            if (!seen.insert(w).second)
                throw Error(ErrorCode::ParallelEdge,
                            "parallel edge " + id_label(names_, v) + "-" + id_label(names_, w));
            const auto& back = rot_[static_cast<std::size_t>(local(w))];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw Error(ErrorCode::AsymmetricRotation, id_label(names_, w) + " lists no " + id_label(names_, v) +
                                                               " although " + id_label(names_, v) + " lists " +
                                                               id_label(names_, w));
        }
        half_edges += rot_[i].size();
    }
    edge_count_ = half_edges / 2;

    if (anchor_) {
        if (!has_edge(anchor_->from, anchor_->to))
            throw Error(ErrorCode::InvalidAnchor, "outer anchor " + id_label(names_, anchor_->from) + "->" +
                                                      id_label(names_, anchor_->to) + " is not an edge");
    } else if (edge_count_ > 0) {
        throw Error(ErrorCode::InvalidAnchor, "graph with edges needs an outer anchor");
    }

    // Euler's formula per component, with faces traced from the rotation.
    std::set<Dart> seen;
    for (const auto& comp : components()) {
        std::size_t v_count = comp.size(), e_count = 0, f_count = 0;
        for (VertexId v : comp) {
            e_count += rotation(v).size();
            for (VertexId w : rotation(v)) {
                Dart d{v, w};
                if (seen.count(d)) continue;
                ++f_count;
                for (const Dart& f : trace_face(d)) seen.insert(f);
            }
        }
        e_count /= 2;
        if (e_count == 0) continue;
        auto euler = static_cast<long>(v_count) - static_cast<long>(e_count) + static_cast<long>(f_count);
        if (euler != 2)
            throw Error(ErrorCode::EulerViolation, "component of " + id_label(names_, comp.front()) + ": V-E+F = " +
                                                       std::to_string(euler) + " (V=" + std::to_string(v_count) +
                                                       ", E=" + std::to_string(e_count) +
                                                       ", F=" + std::to_string(f_count) + ")");
    }
}

// ---------------------------------------------------------------------------

bool Matching::covers(VertexId v) const {
    return std::any_of(edges.begin(), edges.end(), [v](const Edge& e) { return e.touches(v); });
}

bool Matching::contains_edge(const Edge& e) const {
    return std::any_of(edges.begin(), edges.end(), [&](const Edge& m) { return m.same_endpoints(e); });
}

std::vector<VertexId> Matching::heads() const {
    std::vector<VertexId> out;
    if (!oriented) return out;
    for (const Edge& e : edges) out.push_back(e.u);
    std::sort(out.begin(), out.end());
    return out;
}

Matching Matching::canonical() const {
    Matching m = *this;
    if (!m.oriented)
        for (Edge& e : m.edges) e = e.sorted();
    std::sort(m.edges.begin(), m.edges.end(),
              [](const Edge& a, const Edge& b) { return a.sorted() < b.sorted(); });
    return m;
}

// ---------------------------------------------------------------------------

std::optional<Dart> component_outer_dart(const PlaneGraph& g, VertexId v) {
    for (const auto& comp : g.components()) {
        if (!std::binary_search(comp.begin(), comp.end(), v)) continue;
        auto anchor = g.outer_anchor();
        if (anchor && std::binary_search(comp.begin(), comp.end(), anchor->from)) return anchor;
        std::optional<Edge> best;
        for (VertexId a : comp)
            for (VertexId b : g.rotation(a))
                if (a < b && (!best || Edge{a, b} < *best)) best = Edge{a, b};
        if (best) return Dart{best->u, best->v};
        return std::nullopt;
    }
    throw Error(ErrorCode::UnknownVertex, "vertex not in graph");
}

std::optional<Dart> boundary_dart(const PlaneGraph& g, const Edge& e) {
    if (!g.has_edge(e.u, e.v)) return std::nullopt;
    auto outer = component_outer_dart(g, e.u);
    if (!outer) return std::nullopt;
    auto face = g.trace_face(*outer);
    Dart forward{e.u, e.v};
    if (std::find(face.begin(), face.end(), forward) != face.end()) return forward;
    if (std::find(face.begin(), face.end(), forward.reversed()) != face.end()) return forward.reversed();
    return std::nullopt;
}

std::vector<VertexId> boundary_vertices(const PlaneGraph& g) {
    std::set<VertexId> out;
    for (const auto& comp : g.components()) {
        auto outer = component_outer_dart(g, comp.front());
        if (!outer) {
            out.insert(comp.begin(), comp.end());
            continue;
        }
        for (const Dart& d : g.trace_face(*outer)) out.insert(d.from);
    }
    return {out.begin(), out.end()};
}

BoundaryWalk boundary_walk(const PlaneGraph& g, std::optional<Edge> e) {
    if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "boundary walk needs a connected graph");
    BoundaryWalk walk;
    if (g.edge_count() == 0) {
        if (g.vertex_count() == 1) walk.vertices.push_back(g.vertices().front());
        return walk;
    }
    Dart start = *g.outer_anchor();
    if (e) {
        auto d = boundary_dart(g, *e);
        if (!d) throw Error(ErrorCode::EdgeNotOnBoundary, g.edge_name(e->sorted()) + " is not a boundary edge");
        start = *d;
    }
    for (const Dart& d : g.trace_face(start)) walk.vertices.push_back(d.from);
    std::set<VertexId> distinct(walk.vertices.begin(), walk.vertices.end());
    walk.is_simple_cycle = walk.vertices.size() >= 3 && distinct.size() == walk.vertices.size();
    return walk;
}

std::vector<Edge> find_chords(const PlaneGraph& g, const BoundaryWalk& walk) {
    if (!walk.is_simple_cycle) throw Error(ErrorCode::NotSimpleBoundary, "chords need a simple boundary cycle");
    const std::size_t n = walk.vertices.size();
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[walk.vertices[i]] = i;
    std::vector<Edge> chords;
    for (const Edge& e : g.edges()) {
        auto a = pos.find(e.u), b = pos.find(e.v);
        if (a == pos.end() || b == pos.end()) continue;
        std::size_t d = a->second > b->second ? a->second - b->second : b->second - a->second;
        if (d != 1 && d != n - 1) chords.push_back(e);
    }
    return chords;
}

ChordSplit split_at_chord(const PlaneGraph& g, const Edge& chord, const Edge& e) {
    if (chord.same_endpoints(e)) throw Error(ErrorCode::EdgeOnChordSide, "boundary edge coincides with the chord");
    BoundaryWalk walk = boundary_walk(g, e);
    auto chords = find_chords(g, walk);
    if (std::find(chords.begin(), chords.end(), chord.sorted()) == chords.end())
        throw Error(ErrorCode::NotAChord, g.edge_name(chord.sorted()) + " is not a chord");

    const auto& w = walk.vertices;
    const std::size_t n = w.size();
    std::size_t i = static_cast<std::size_t>(std::find(w.begin(), w.end(), chord.u) - w.begin());
    std::size_t j = static_cast<std::size_t>(std::find(w.begin(), w.end(), chord.v) - w.begin());
    if (i > j) std::swap(i, j);
    const VertexId x = w[i], y = w[j];
    auto at = [&](std::size_t k) { return w[(k + n) % n]; };

    // Side A holds walk positions strictly between i and j, side B the rest.
    std::vector<int> side(g.names()->size(), -1);
    std::vector<VertexId> seeds[2];
    for (std::size_t k = i + 1; k < j; ++k) seeds[0].push_back(w[k]);
    for (std::size_t k = j + 1; k < n + i; ++k) seeds[1].push_back(at(k));

    // Interior neighbors of a chord endpoint split into the sector next to the
    // boundary predecessor and the one next to the boundary successor.
    auto classify = [&](VertexId c, VertexId other, VertexId before, VertexId after, int before_side) {
        VertexId cur = g.rotation_next(c, before);
        int s = before_side;
        while (cur != after) {
            if (cur == other)
                s = 1 - before_side;
            else
                seeds[s].push_back(cur);
            cur = g.rotation_next(c, cur);
        }
    };
    classify(x, y, at(i + n - 1), at(i + 1), 1);
    classify(y, x, at(j - 1), at(j + 1), 0);

    for (int s = 0; s < 2; ++s) {
        std::queue<VertexId> q;
        for (VertexId v : seeds[s]) {
            if (side[static_cast<std::size_t>(v)] == -1) {
                side[static_cast<std::size_t>(v)] = s;
                q.push(v);
            } else if (side[static_cast<std::size_t>(v)] != s) {
                throw Error(ErrorCode::InternalProofViolation, "chord sides overlap at " + g.name(v));
            }
        }
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId u : g.rotation(v)) {
                if (u == x || u == y) continue;
                int& su = side[static_cast<std::size_t>(u)];
                if (su == -1) {
                    su = s;
                    q.push(u);
                } else if (su != s) {
                    throw Error(ErrorCode::InternalProofViolation, "chord sides overlap at " + g.name(u));
                }
            }
        }
    }

    std::vector<VertexId> part[2];
    for (VertexId v : g.vertices()) {
        if (v == x || v == y) {
            part[0].push_back(v);
            part[1].push_back(v);
            continue;
        }
        int s = side[static_cast<std::size_t>(v)];
        if (s < 0) throw Error(ErrorCode::InternalProofViolation, g.name(v) + " lies on neither side of the chord");
        part[s].push_back(v);
    }

    const int e_side = i == 0 ? 0 : 1;
    Dart e_dart{w[0], w[1]};
    Dart chord_dart = e_side == 0 ? Dart{x, y} : Dart{y, x};
    ChordSplit out{g.induced_subgraph(part[e_side], e_dart), g.induced_subgraph(part[1 - e_side], chord_dart)};
    return out;
}

BoundaryDeletion delete_boundary_vertex(const PlaneGraph& g, const Edge& e) {
    BoundaryWalk walk = boundary_walk(g, e);
    if (!walk.is_simple_cycle) throw Error(ErrorCode::BoundaryNotSimple, "boundary is not a simple cycle");
    if (!find_chords(g, walk).empty()) throw Error(ErrorCode::HasChord, "graph has a chord");
    const auto& w = walk.vertices;
    const std::size_t n = w.size();

    BoundaryDeletion out;
    out.removed = w[n - 1];
    out.fan.first = w[0];
    out.fan.last = w[n - 2];
    for (VertexId cur = g.rotation_prev(out.removed, w[0]); cur != out.fan.last;
         cur = g.rotation_prev(out.removed, cur))
        out.fan.inner.push_back(cur);

    std::vector<VertexId> keep;
    for (VertexId v : g.vertices())
        if (v != out.removed) keep.push_back(v);
    out.remainder = g.induced_subgraph(keep, Dart{w[0], w[1]});

    for (const auto& comp : out.remainder.components()) {
        if (std::binary_search(comp.begin(), comp.end(), w[0])) {
            out.pieces.insert(out.pieces.begin(), out.remainder.induced_subgraph(comp, Dart{w[0], w[1]}));
            continue;
        }
        std::optional<Dart> anchor;
        for (VertexId u : g.rotation(out.removed)) {
            if (!std::binary_search(comp.begin(), comp.end(), u) || g.degree(u) < 2) continue;
            anchor = Dart{u, g.rotation_prev(u, out.removed)};
            break;
        }
        out.pieces.push_back(out.remainder.induced_subgraph(comp, anchor));
    }
    out.walk = std::move(walk);
    return out;
}

Augmentation augment_to_simple_boundary(const PlaneGraph& g, const Edge& e) {
    Augmentation out{g, {}};
    auto e_dart = boundary_dart(g, e);
    if (!e_dart) throw Error(ErrorCode::EdgeNotOnBoundary, g.edge_name(e.sorted()) + " is not a boundary edge");
    out.graph = g.with_anchor(*e_dart);
    for (;;) {
        BoundaryWalk walk = boundary_walk(out.graph, e);
        const auto& w = walk.vertices;
        const std::size_t n = w.size();
        std::map<VertexId, int> count;
        for (VertexId v : w) ++count[v];
        // Cut off the first repeated occurrence that does not touch the e dart.
        std::size_t p = 2;
        while (p < n && count[w[p]] < 2) ++p;
        if (p >= n) break;
        VertexId x = w[p - 1], y = w[(p + 1) % n];
        VertexId before_x = w[p];                // corner at x runs from c ...
        VertexId before_y = w[(p + 2) % n];      // corner at y runs from z ...
        if (x == y || out.graph.has_edge(x, y))
            throw Error(ErrorCode::InternalProofViolation, "cannot bridge the outer corner at " + g.name(w[p]));
        out.graph = out.graph.with_edge(x, before_x, y, before_y, *e_dart);
        out.added.push_back(Edge::normalized(x, y));
    }
    return out;
}

MatchingCheck validate_matching(const PlaneGraph& g, const Edge& e, const Matching& m) {
    std::set<VertexId> covered;
    for (const Edge& p : m.edges) {
        if (!g.has_edge(p.u, p.v)) {
            std::string label = g.contains(p.u) && g.contains(p.v) ? g.edge_name(p.sorted()) : "pair";
            return {false, "not-an-edge: " + label};
        }
        if (p.touches(e.u) || p.touches(e.v)) return {false, "covers-e: " + g.edge_name(p.sorted())};
        if (!covered.insert(p.u).second || !covered.insert(p.v).second)
            return {false, "not-disjoint: " + g.edge_name(p.sorted())};
    }
    return {};
}

}  // namespace atmatch
