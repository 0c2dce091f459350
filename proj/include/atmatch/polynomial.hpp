#ifndef ATMATCH_POLYNOMIAL_HPP
#define ATMATCH_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "atmatch/exponent.hpp"
#include "atmatch/plane_graph.hpp"

namespace atmatch {

using Integer = boost::multiprecision::cpp_int;

// Coefficient of x^eta in prod over E(graph) \ removed of (x_v - sigma(uv) x_u),
// u < v in vertex order.
struct CoefficientQuery {
    const PlaneGraph& graph;
    std::vector<Edge> removed;
    Signature signature;
    ExponentVector eta;
};

// Edge-by-edge dynamic program over partial exponent vectors. States that
// exceed eta, or can no longer reach it with the remaining edges, are dropped.
Integer coeff_dp(const CoefficientQuery& q);

// Branch-and-bound enumeration of endpoint selections (one endpoint per edge).
// Shares no code with coeff_dp so each can check the other.
Integer coeff_select(const CoefficientQuery& q);

struct Restriction {
    ExponentVector eta;
    Integer coefficient;   // of eta once f is also removed
    VertexId lowered = -1; // endpoint of f whose exponent dropped
};

// Given a non-vanishing eta for the current edge set, removes f and returns
// eta - 1_b or eta - 1_a (f = ab, a < b), whichever stays non-vanishing; b is
// tried first.
Restriction restrict_monomial(const PlaneGraph& g, const std::vector<Edge>& removed, const Signature& sigma,
                              const ExponentVector& eta, const Edge& f);

struct SearchLimits {
    std::size_t max_edges = 40;
    std::size_t max_candidates = 2'000'000;
    int max_k = 0;  // at_number gives up above this k; 0 means no limit
};

struct AtResult {
    int k = 0;
    ExponentVector witness;
    std::size_t candidates = 0;  // exponent vectors whose coefficient was computed
};

// Smallest k admitting a non-vanishing eta with eta(v) <= k - 1 everywhere.
// Candidates run in lexicographic order (by vertex order); first hit wins.
AtResult at_number(const PlaneGraph& g, const Signature& sigma, SearchLimits limits = {});

// A non-vanishing eta with eta(v) <= f(v) - 1 for every vertex, or nothing.
std::optional<ExponentVector> f_at_check(const PlaneGraph& g, const Signature& sigma, const ExponentVector& f,
                                         SearchLimits limits = {});

// Enumerates, in lexicographic order over `order`, every exponent vector with
// eta(order[i]) <= caps[i] and total `total` that passes the orientation
// counting bound; stops when `visit` returns true. Returns candidates visited.
template <class Visit>
std::size_t for_each_capped_composition(const PlaneGraph& g, const std::vector<Edge>& edges,
                                        const std::vector<VertexId>& order, const std::vector<int>& caps,
                                        long total, Visit&& visit);

}  // namespace atmatch

#include "atmatch/detail/compositions.hpp"

#endif
