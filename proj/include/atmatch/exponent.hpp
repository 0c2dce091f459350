#ifndef ATMATCH_EXPONENT_HPP
#define ATMATCH_EXPONENT_HPP

#include <initializer_list>
#include <map>
#include <set>
#include <vector>

#include "atmatch/plane_graph.hpp"

namespace atmatch {

// Exponent of a monomial: vertex -> non-negative integer, zero when absent.
class ExponentVector {
public:
    ExponentVector() = default;
    ExponentVector(std::initializer_list<std::pair<const VertexId, int>> init);

    int operator[](VertexId v) const;
    void set(VertexId v, int value);
    // Adds `delta` at v; throws NegativeExponent if the result drops below 0.
    void add(VertexId v, int delta);
    ExponentVector plus_unit(VertexId v) const;
    ExponentVector minus_unit(VertexId v) const;

    long sum() const;
    int max() const;
    bool empty() const { return values_.empty(); }
    // Non-zero entries in vertex order.
    const std::map<VertexId, int>& entries() const { return values_; }

    bool leq(const ExponentVector& other) const;
    ExponentVector& operator+=(const ExponentVector& other);
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }

    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::map<VertexId, int> values_;
};

// Edge signs; every edge not listed carries +1.
class Signature {
public:
    Signature() = default;

    int sign(VertexId a, VertexId b) const;
    int sign(const Edge& e) const { return sign(e.u, e.v); }
    void set(VertexId a, VertexId b, int sign);
    bool all_plus() const { return negative_.empty(); }
    // Negative edges, normalized and sorted.
    std::vector<Edge> negative_edges() const { return {negative_.begin(), negative_.end()}; }
    // Signs restricted to the edges of `g`.
    Signature restricted_to(const PlaneGraph& g) const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::set<Edge> negative_;
};

}  // namespace atmatch

#endif
