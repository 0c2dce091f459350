#include "atmatch/exponent.hpp"

#include <algorithm>

#include "atmatch/error.hpp"

namespace atmatch {

ExponentVector::ExponentVector(std::initializer_list<std::pair<const VertexId, int>> init) {
    for (const auto& [v, x] : init) add(v, x);
}

int ExponentVector::operator[](VertexId v) const {
    auto it = values_.find(v);
    return it == values_.end() ? 0 : it->second;
}

void ExponentVector::set(VertexId v, int value) {
    if (value < 0) throw Error(ErrorCode::NegativeExponent, "exponent " + std::to_string(value));
    if (value == 0)
        values_.erase(v);
    else
        values_[v] = value;
}

void ExponentVector::add(VertexId v, int delta) { set(v, (*this)[v] + delta); }

ExponentVector ExponentVector::plus_unit(VertexId v) const {
    ExponentVector out = *this;
    out.add(v, 1);
    return out;
}

ExponentVector ExponentVector::minus_unit(VertexId v) const {
    ExponentVector out = *this;
    out.add(v, -1);
    return out;
}

long ExponentVector::sum() const {
    long s = 0;
    for (const auto& [v, x] : values_) s += x;
    return s;
}

int ExponentVector::max() const {
    int m = 0;
    for (const auto& [v, x] : values_) m = std::max(m, x);
    return m;
}

bool ExponentVector::leq(const ExponentVector& other) const {
    return std::all_of(values_.begin(), values_.end(), [&](const auto& kv) { return kv.second <= other[kv.first]; });
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
    for (const auto& [v, x] : other.values_) add(v, x);
    return *this;
}

int Signature::sign(VertexId a, VertexId b) const { return negative_.count(Edge::normalized(a, b)) ? -1 : 1; }

void Signature::set(VertexId a, VertexId b, int sign) {
    if (sign != 1 && sign != -1) throw Error(ErrorCode::ParseError, "edge sign must be +1 or -1");
    if (sign == -1)
        negative_.insert(Edge::normalized(a, b));
    else
        negative_.erase(Edge::normalized(a, b));
}

Signature Signature::restricted_to(const PlaneGraph& g) const {
    Signature out;
    for (const Edge& e : negative_)
        if (g.has_edge(e.u, e.v)) out.negative_.insert(e);
    return out;
}

}  // namespace atmatch
