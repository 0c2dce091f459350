#include "atmatch/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <unordered_map>

#include "atmatch/error.hpp"

namespace atmatch {

namespace {

struct Factor {
    int lo;    // local index of the smaller endpoint
    int hi;
    int sign;  // sigma(lo hi)
};

struct Prepared {
    std::vector<Factor> factors;
    std::vector<int> target;
    bool zero = false;
};

Prepared prepare(const CoefficientQuery& q) {
    const PlaneGraph& g = q.graph;
    Prepared p;
    std::vector<int> local(g.names()->size(), -1);
    auto verts = g.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);

    p.target.assign(verts.size(), 0);
    for (const auto& [v, x] : q.eta.entries()) {
        if (v < 0 || static_cast<std::size_t>(v) >= local.size() || local[static_cast<std::size_t>(v)] < 0) {
            p.zero = true;
            return p;
        }
        p.target[static_cast<std::size_t>(local[static_cast<std::size_t>(v)])] = x;
    }

    std::set<Edge> removed;
    for (const Edge& e : q.removed) {
        if (!g.has_edge(e.u, e.v)) throw Error(ErrorCode::PreconditionViolated, "removed pair is not an edge");
        removed.insert(e.sorted());
    }
    for (const Edge& e : g.edges()) {
        if (removed.count(e)) continue;
        p.factors.push_back(
            {local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)], q.signature.sign(e)});
    }
    long total = 0;
    for (int t : p.target) total += t;
    if (total != static_cast<long>(p.factors.size())) p.zero = true;
    return p;
}

// Orders factors so that vertices enter and leave the DP frontier early:
// vertices are ranked by BFS from a minimum-degree vertex, edges by the later
// of their endpoints.
std::vector<Factor> frontier_order(const Prepared& p) {
    const std::size_t n = p.target.size();
    std::vector<std::vector<int>> adj(n);
    for (const Factor& f : p.factors) {
        adj[static_cast<std::size_t>(f.lo)].push_back(f.hi);
        adj[static_cast<std::size_t>(f.hi)].push_back(f.lo);
    }
    std::vector<int> rank(n, -1);
    int next = 0;
    for (;;) {
        int start = -1;
        for (std::size_t v = 0; v < n; ++v)
            if (rank[v] < 0 && (start < 0 || adj[v].size() < adj[static_cast<std::size_t>(start)].size()))
                start = static_cast<int>(v);
        if (start < 0) break;
        std::queue<int> q;
        q.push(start);
        rank[static_cast<std::size_t>(start)] = next++;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            auto nbrs = adj[static_cast<std::size_t>(v)];
            std::sort(nbrs.begin(), nbrs.end());
            for (int w : nbrs)
                if (rank[static_cast<std::size_t>(w)] < 0) {
                    rank[static_cast<std::size_t>(w)] = next++;
                    q.push(w);
                }
        }
    }
    std::vector<Factor> out = p.factors;
    std::stable_sort(out.begin(), out.end(), [&](const Factor& a, const Factor& b) {
        auto ka = std::minmax(rank[static_cast<std::size_t>(a.lo)], rank[static_cast<std::size_t>(a.hi)]);
        auto kb = std::minmax(rank[static_cast<std::size_t>(b.lo)], rank[static_cast<std::size_t>(b.hi)]);
        return std::pair(ka.second, ka.first) < std::pair(kb.second, kb.first);
    });
    return out;
}

// Exponent tallies packed into one machine word, bit_width(target) bits each.
struct PackedKeys {
    using Key = std::uint64_t;
    using Hash = std::hash<Key>;
    std::vector<int> shift;
    std::vector<std::uint64_t> mask;

    static std::optional<PackedKeys> make(const std::vector<int>& target) {
        PackedKeys k;
        int used = 0;
        for (int t : target) {
            int bits = std::bit_width(static_cast<unsigned>(t));
            k.shift.push_back(used);
            k.mask.push_back(bits == 0 ? 0 : ((std::uint64_t{1} << bits) - 1));
            used += bits;
            if (used > 64) return std::nullopt;
        }
        return k;
    }
    Key zero() const { return 0; }
    int get(Key key, int i) const {
        return static_cast<int>((key >> shift[static_cast<std::size_t>(i)]) & mask[static_cast<std::size_t>(i)]);
    }
    Key inc(Key key, int i) const { return key + (std::uint64_t{1} << shift[static_cast<std::size_t>(i)]); }
};

struct WideKeys {
    using Key = std::vector<std::uint16_t>;
    struct Hash {
        std::size_t operator()(const Key& k) const noexcept {
            std::size_t h = 1469598103934665603ull;
            for (auto x : k) h = (h ^ x) * 1099511628211ull;
            return h;
        }
    };
    std::size_t n = 0;
    Key zero() const { return Key(n, 0); }
    int get(const Key& key, int i) const { return key[static_cast<std::size_t>(i)]; }
    Key inc(Key key, int i) const {
        ++key[static_cast<std::size_t>(i)];
        return key;
    }
};

template <class Keys, class Acc>
Acc run_dp(const Keys& keys, const std::vector<Factor>& factors, const std::vector<int>& target) {
    std::vector<int> remaining(target.size(), 0);
    for (const Factor& f : factors) {
        ++remaining[static_cast<std::size_t>(f.lo)];
        ++remaining[static_cast<std::size_t>(f.hi)];
    }
    for (std::size_t v = 0; v < target.size(); ++v)
        if (remaining[v] < target[v]) return Acc(0);

    using Map = std::unordered_map<typename Keys::Key, Acc, typename Keys::Hash>;
    Map cur, nxt;
    cur.emplace(keys.zero(), Acc(1));
    for (const Factor& f : factors) {
        const auto lo = static_cast<std::size_t>(f.lo), hi = static_cast<std::size_t>(f.hi);
        --remaining[lo];
        --remaining[hi];
        nxt.clear();
        nxt.reserve(cur.size() * 2);
        for (const auto& [key, val] : cur) {
            const int tl = keys.get(key, f.lo), th = keys.get(key, f.hi);
            // pick x_hi: coefficient +1
            if (th + 1 <= target[hi] && tl + remaining[lo] >= target[lo]) nxt[keys.inc(key, f.hi)] += val;
            // pick x_lo: coefficient -sigma
            if (tl + 1 <= target[lo] && th + remaining[hi] >= target[hi]) {
                if (f.sign > 0)
                    nxt[keys.inc(key, f.lo)] -= val;
                else
                    nxt[keys.inc(key, f.lo)] += val;
            }
        }
        cur.clear();
        for (auto& [key, val] : nxt)
            if (val != 0) cur.emplace(key, std::move(val));
        if (cur.empty()) return Acc(0);
    }
    Acc total(0);
    for (const auto& [key, val] : cur) total += val;
    return total;
}

template <class Keys>
Integer dispatch_width(const Keys& keys, const std::vector<Factor>& factors, const std::vector<int>& target) {
    // |partial sums| <= 2^(edges processed), so 62 edges fit in int64.
    if (factors.size() <= 62) return Integer(run_dp<Keys, std::int64_t>(keys, factors, target));
    return run_dp<Keys, Integer>(keys, factors, target);
}

}  // namespace

Integer coeff_dp(const CoefficientQuery& q) {
    Prepared p = prepare(q);
    if (p.zero) return 0;
    if (p.factors.empty()) return 1;
    std::vector<Factor> factors = frontier_order(p);
    if (auto packed = PackedKeys::make(p.target)) return dispatch_width(*packed, factors, p.target);
    for (int t : p.target)
        if (t > std::numeric_limits<std::uint16_t>::max())
            throw Error(ErrorCode::SearchBudgetExceeded, "exponent too large for the coefficient engine");
    return dispatch_width(WideKeys{p.target.size()}, factors, p.target);
}

Integer coeff_select(const CoefficientQuery& q) {
    const PlaneGraph& g = q.graph;
    std::set<Edge> removed;
    for (const Edge& e : q.removed) {
        if (!g.has_edge(e.u, e.v)) throw Error(ErrorCode::PreconditionViolated, "removed pair is not an edge");
        removed.insert(e.sorted());
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!removed.count(e)) edges.push_back(e);

    const std::size_t ids = g.names()->size();
    std::vector<int> need(ids, 0), left(ids, 0);
    long total = 0;
    for (const auto& [v, x] : q.eta.entries()) {
        if (!g.contains(v)) return 0;
        need[static_cast<std::size_t>(v)] = x;
        total += x;
    }
    if (total != static_cast<long>(edges.size())) return 0;
    for (const Edge& e : edges) {
        ++left[static_cast<std::size_t>(e.u)];
        ++left[static_cast<std::size_t>(e.v)];
    }
    for (VertexId v : g.vertices())
        if (left[static_cast<std::size_t>(v)] < need[static_cast<std::size_t>(v)]) return 0;

    // need[v] counts how many more selections v must receive.
    std::uint64_t positive = 0, negative = 0;
    auto rec = [&](auto&& self, std::size_t i, bool sign_negative) -> void {
        if (i == edges.size()) {
            ++(sign_negative ? negative : positive);
            return;
        }
        const auto a = static_cast<std::size_t>(edges[i].u), b = static_cast<std::size_t>(edges[i].v);
        --left[a];
        --left[b];
        if (need[b] > 0 && left[a] >= need[a]) {
            --need[b];
            self(self, i + 1, sign_negative);
            ++need[b];
        }
        if (need[a] > 0 && left[b] >= need[b]) {
            --need[a];
            // choosing x_a contributes -sigma(ab)
            self(self, i + 1, q.signature.sign(edges[i]) > 0 ? !sign_negative : sign_negative);
            ++need[a];
        }
        ++left[a];
        ++left[b];
    };
    rec(rec, 0, false);
    return Integer(positive) - Integer(negative);
}

Restriction restrict_monomial(const PlaneGraph& g, const std::vector<Edge>& removed, const Signature& sigma,
                              const ExponentVector& eta, const Edge& f) {
    const Edge fs = f.sorted();
    if (!g.has_edge(fs.u, fs.v)) throw Error(ErrorCode::PreconditionViolated, "restricted edge is not in the graph");
    for (const Edge& r : removed)
        if (r.same_endpoints(fs)) throw Error(ErrorCode::PreconditionViolated, "restricted edge already removed");
    if (coeff_dp({g, removed, sigma, eta}) == 0)
        throw Error(ErrorCode::PreconditionViolated, "input monomial vanishes");

    std::vector<Edge> next = removed;
    next.push_back(fs);
    for (VertexId lowered : {fs.v, fs.u}) {
        if (eta[lowered] == 0) continue;
        ExponentVector candidate = eta.minus_unit(lowered);
        Integer c = coeff_dp({g, next, sigma, candidate});
        if (c != 0) return {std::move(candidate), std::move(c), lowered};
    }
    throw Error(ErrorCode::InternalProofViolation, "both restrictions of a non-vanishing monomial vanish");
}

namespace {

std::optional<ExponentVector> search_capped(const PlaneGraph& g, const Signature& sigma, const std::vector<int>& caps,
                                            const SearchLimits& limits, std::size_t& candidates) {
    if (g.edge_count() > limits.max_edges)
        throw Error(ErrorCode::SearchBudgetExceeded, std::to_string(g.edge_count()) + " edges exceed the limit of " +
                                                         std::to_string(limits.max_edges));
    std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
    std::vector<Edge> edges = g.edges();
    std::vector<int> bounded = caps;
    for (std::size_t i = 0; i < order.size(); ++i) bounded[i] = std::min(bounded[i], g.degree(order[i]));

    std::optional<ExponentVector> found;
    for_each_capped_composition(g, edges, order, bounded, static_cast<long>(edges.size()),
                                [&](const ExponentVector& eta) {
                                    if (++candidates > limits.max_candidates)
                                        throw Error(ErrorCode::SearchBudgetExceeded,
                                                    "more than " + std::to_string(limits.max_candidates) +
                                                        " candidate exponents");
                                    if (coeff_dp({g, {}, sigma, eta}) == 0) return false;
                                    found = eta;
                                    return true;
                                });
    return found;
}

}  // namespace

AtResult at_number(const PlaneGraph& g, const Signature& sigma, SearchLimits limits) {
    AtResult out;
    int max_degree = 0;
    for (VertexId v : g.vertices()) max_degree = std::max(max_degree, g.degree(v));
    for (int k = 1; k <= max_degree + 1; ++k) {
        if (limits.max_k > 0 && k > limits.max_k)
            throw Error(ErrorCode::SearchBudgetExceeded, "no witness with k <= " + std::to_string(limits.max_k));
        std::vector<int> caps(g.vertex_count(), k - 1);
        if (auto w = search_capped(g, sigma, caps, limits, out.candidates)) {
            out.k = k;
            out.witness = *w;
            return out;
        }
    }
    throw Error(ErrorCode::InternalProofViolation, "graph polynomial has no non-vanishing monomial");
}

std::optional<ExponentVector> f_at_check(const PlaneGraph& g, const Signature& sigma, const ExponentVector& f,
                                         SearchLimits limits) {
    std::vector<int> caps;
    for (VertexId v : g.vertices()) caps.push_back(f[v] - 1);
    std::size_t candidates = 0;
    return search_capped(g, sigma, caps, limits, candidates);
}

}  // namespace atmatch
