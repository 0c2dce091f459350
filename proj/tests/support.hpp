#ifndef ATMATCH_TESTS_SUPPORT_HPP
#define ATMATCH_TESTS_SUPPORT_HPP

// Test-side oracles. Nothing here calls the library's coefficient engines,
// painting solver or DOT writer; they are recomputed from first principles.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "atmatch/exponent.hpp"
#include "atmatch/plane_graph.hpp"

namespace oracle {

using atmatch::Edge;
using atmatch::ExponentVector;
using atmatch::PlaneGraph;
using atmatch::Signature;
using atmatch::VertexId;

using Monomial = std::vector<int>;  // exponent per vertex id
using Expansion = std::map<Monomial, long long>;

// Full expansion of prod (x_v - s(uv) x_u) over the kept edges by running
// through all 2^m endpoint choices.
inline Expansion expand(const PlaneGraph& g, const std::vector<Edge>& removed = {}, const Signature& sigma = {}) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (std::none_of(removed.begin(), removed.end(), [&](const Edge& r) { return r.same_endpoints(e); }))
            edges.push_back(e);
    VertexId top = 0;
    for (VertexId v : g.vertices()) top = std::max(top, v + 1);
    Expansion out;
    const std::uint64_t total = std::uint64_t{1} << edges.size();
    for (std::uint64_t pick = 0; pick < total; ++pick) {
        Monomial m(static_cast<std::size_t>(top), 0);
        long long c = 1;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Edge& e = edges[i];
            if (pick >> i & 1) {
                ++m[static_cast<std::size_t>(e.u)];
                c *= -sigma.sign(e);
            } else {
                ++m[static_cast<std::size_t>(e.v)];
            }
        }
        out[m] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline Monomial monomial_of(const PlaneGraph& g, const ExponentVector& eta) {
    VertexId top = 0;
    for (VertexId v : g.vertices()) top = std::max(top, v + 1);
    Monomial m(static_cast<std::size_t>(top), 0);
    for (auto [v, x] : eta.entries())
        if (v < top) m[static_cast<std::size_t>(v)] = x;
    return m;
}

inline long long coefficient(const Expansion& p, const PlaneGraph& g, const ExponentVector& eta) {
    auto it = p.find(monomial_of(g, eta));
    return it == p.end() ? 0 : it->second;
}

inline long long coefficient(const PlaneGraph& g, const std::vector<Edge>& removed, const Signature& sigma,
                             const ExponentVector& eta) {
    return coefficient(expand(g, removed, sigma), g, eta);
}

// Least k such that a surviving monomial has every exponent below k.
inline int at_number(const PlaneGraph& g, const Signature& sigma = {}) {
    int best = 1 << 20;
    for (const auto& [m, c] : expand(g, {}, sigma)) best = std::min(best, *std::max_element(m.begin(), m.end()) + 1);
    if (g.edge_count() == 0) best = 1;
    return best;
}

// Plane graph from coordinates: rotations sorted counterclockwise by angle,
// mirrored if needed so that the face left of (outer[0], outer[1]) traces
// `outer`.
inline PlaneGraph from_coords(const std::vector<std::pair<double, double>>& pos, const std::vector<Edge>& edges,
                              const std::vector<VertexId>& outer, std::vector<std::string> names = {}) {
    const std::size_t n = pos.size();
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    std::vector<std::vector<VertexId>> rot(n);
    for (const Edge& e : edges) {
        rot[static_cast<std::size_t>(e.u)].push_back(e.v);
        rot[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(rot[v].begin(), rot[v].end(), [&](VertexId a, VertexId b) {
            auto ang = [&](VertexId u) {
                return std::atan2(pos[static_cast<std::size_t>(u)].second - pos[v].second,
                                  pos[static_cast<std::size_t>(u)].first - pos[v].first);
            };
            return ang(a) < ang(b);
        });
    atmatch::Dart anchor{outer[0], outer[1]};
    auto walk = [&](const PlaneGraph& g) {
        std::vector<VertexId> w;
        for (const auto& d : g.trace_face(anchor)) w.push_back(d.from);
        return w;
    };
    PlaneGraph g = PlaneGraph::build(names, rot, anchor);
    if (walk(g) == outer) return g;
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    g = PlaneGraph::build(names, rot, anchor);
    if (walk(g) != outer) throw std::runtime_error("from_coords: outer walk not realised");
    return g;
}

// Regular polygon, vertices placed clockwise, plus extra (chord) edges.
inline PlaneGraph polygon(int n, const std::vector<Edge>& extra = {}) {
    std::vector<std::pair<double, double>> pos;
    std::vector<Edge> edges;
    std::vector<VertexId> outer;
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) {
        pos.push_back({std::cos(pi / 2 - 2 * pi * i / n), std::sin(pi / 2 - 2 * pi * i / n)});
        edges.push_back(Edge::normalized(i, (i + 1) % n));
        outer.push_back(i);
    }
    for (const Edge& e : extra) edges.push_back(e.sorted());
    return from_coords(pos, edges, outer);
}

inline bool proper(const PlaneGraph& g, const Signature& sigma, const std::map<VertexId, int>& c, int d = 0) {
    for (VertexId v : g.vertices()) {
        if (!c.count(v)) return false;
        int bad = 0;
        for (VertexId u : g.rotation(v))
            if (c.at(v) == sigma.sign(u, v) * c.at(u)) ++bad;
        if (bad > d) return false;
    }
    return true;
}

// Painting game by plain recursion over every Lister mark and every Painter
// answer (the empty answer included). Only for a handful of vertices.
class Painting {
public:
    Painting(const PlaneGraph& g, int d) : d_(d) {
        for (VertexId v : g.vertices()) ids_.push_back(v);
        adj_.assign(ids_.size(), 0);
        for (std::size_t i = 0; i < ids_.size(); ++i)
            for (std::size_t j = 0; j < ids_.size(); ++j)
                if (g.has_edge(ids_[i], ids_[j])) adj_[i] |= 1u << j;
    }

    bool painter_wins(std::vector<int> tokens) { return win((1u << ids_.size()) - 1, tokens); }

private:
    bool admissible(unsigned x) const {
        for (std::size_t i = 0; i < ids_.size(); ++i)
            if (x >> i & 1 && std::popcount(adj_[i] & x) > d_) return false;
        return true;
    }
    bool win(unsigned left, const std::vector<int>& tokens) {
        if (left == 0) return true;
        auto key = std::make_pair(left, tokens);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool painter = true;
        for (unsigned a = left; a && painter; a = (a - 1) & left) {
            std::vector<int> t = tokens;
            bool dead = false;
            for (std::size_t i = 0; i < ids_.size(); ++i)
                if (a >> i & 1) dead |= --t[i] < 0;
            if (dead) {
                painter = false;
                break;
            }
            bool answer = false;
            for (unsigned x = a;; x = (x - 1) & a) {
                if (admissible(x)) {
                    unsigned rest = left & ~x;
                    bool stuck = false;
                    for (std::size_t i = 0; i < ids_.size(); ++i)
                        if (rest >> i & 1 && t[i] == 0) stuck = true;
                    if (!stuck && win(rest, t)) {
                        answer = true;
                        break;
                    }
                }
                if (x == 0) break;
            }
            painter = answer;
        }
        return memo_[key] = painter;
    }

    std::vector<VertexId> ids_;
    std::vector<unsigned> adj_;
    int d_;
    std::map<std::pair<unsigned, std::vector<int>>, bool> memo_;
};

// Minimal DOT reader for the subset the exporter is meant to produce:
//   graph <id> { node [k=v,...]; "a" [attrs]; "a" -- "b" [attrs]; }
struct DotGraph {
    std::string name;
    std::map<std::string, std::map<std::string, std::string>> nodes;
    std::vector<std::pair<std::pair<std::string, std::string>, std::map<std::string, std::string>>> edges;
};

class DotParser {
public:
    explicit DotParser(std::string text) : s_(std::move(text)) {}

    std::optional<DotGraph> parse() {
        DotGraph g;
        if (!keyword("graph")) return std::nullopt;
        auto id = ident();
        if (!id || !sym('{')) return std::nullopt;
        g.name = *id;
        while (true) {
            skip();
            if (sym('}')) break;
            if (keyword("node")) {
                if (!attrs() || !sym(';')) return std::nullopt;
                continue;
            }
            auto a = ident();
            if (!a) return std::nullopt;
            skip();
            if (s_.compare(i_, 2, "--") == 0) {
                i_ += 2;
                auto b = ident();
                auto at = attrs();
                if (!b || !at || !sym(';')) return std::nullopt;
                if (!g.nodes.count(*a) || !g.nodes.count(*b)) return std::nullopt;
                g.edges.push_back({{*a, *b}, *at});
            } else {
                auto at = attrs();
                if (!at || !sym(';')) return std::nullopt;
                g.nodes[*a] = *at;
            }
        }
        skip();
        if (i_ != s_.size()) return std::nullopt;
        return g;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool sym(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) return ++i_, true;
        return false;
    }
    bool keyword(const std::string& k) {
        skip();
        if (s_.compare(i_, k.size(), k) != 0) return false;
        i_ += k.size();
        return true;
    }
    std::optional<std::string> ident() {
        skip();
        std::string out;
        if (i_ < s_.size() && s_[i_] == '"') {
            for (++i_; i_ < s_.size() && s_[i_] != '"'; ++i_) out += s_[i_];
            if (i_ == s_.size()) return std::nullopt;
            ++i_;
            return out;
        }
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '.'))
            out += s_[i_++];
        if (out.empty()) return std::nullopt;
        return out;
    }
    std::optional<std::map<std::string, std::string>> attrs() {
        std::map<std::string, std::string> out;
        if (!sym('[')) return out;
        while (true) {
            auto k = ident();
            if (!k || !sym('=')) return std::nullopt;
            auto v = ident();
            if (!v) return std::nullopt;
            out[*k] = *v;
            if (sym(']')) return out;
            if (!sym(',')) return std::nullopt;
        }
    }

    std::string s_;
    std::size_t i_ = 0;
};

// Random exponent vector on g with the given total, each entry capped.
inline ExponentVector random_eta(const PlaneGraph& g, long total, int cap, std::mt19937_64& rng) {
    ExponentVector eta;
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    for (long i = 0; i < total && !vs.empty(); ++i) {
        VertexId v = vs[rng() % vs.size()];
        if (eta[v] < cap) eta.add(v, 1);
    }
    return eta;
}

}  // namespace oracle

#endif
