#ifndef ATMATCH_DETAIL_COMPOSITIONS_HPP
#define ATMATCH_DETAIL_COMPOSITIONS_HPP

#include <algorithm>
#include <vector>

namespace atmatch {

template <class Visit>
std::size_t for_each_capped_composition(const PlaneGraph& g, const std::vector<Edge>& edges,
                                        const std::vector<VertexId>& order, const std::vector<int>& caps,
                                        long total, Visit&& visit) {
    const std::size_t n = order.size();
    std::vector<int> pos(g.names()->size(), -1);
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    // Any orientation realizing eta puts every edge of a vertex set on one of
    // its vertices, so a prefix must carry at least its inner edges and leave
    // enough for the inner edges of the suffix.
    std::vector<long> inner_prefix(n + 1, 0), inner_suffix(n + 1, 0), cap_suffix(n + 1, 0);
    for (const Edge& e : edges) {
        int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
        if (a < 0 || b < 0) continue;
        int hi = std::max(a, b), lo = std::min(a, b);
        for (int j = hi + 1; j <= static_cast<int>(n); ++j) ++inner_prefix[static_cast<std::size_t>(j)];
        for (int j = 0; j <= lo; ++j) ++inner_suffix[static_cast<std::size_t>(j)];
    }
    for (std::size_t j = n; j-- > 0;) cap_suffix[j] = cap_suffix[j + 1] + std::max(0, caps[j]);

    std::size_t visited = 0;
    bool stop = false;
    ExponentVector eta;
    auto rec = [&](auto&& self, std::size_t j, long prefix_sum) -> void {
        if (stop) return;
        if (prefix_sum < inner_prefix[j] || prefix_sum > total - inner_suffix[j]) return;
        if (total - prefix_sum > cap_suffix[j]) return;
        if (j == n) {
            if (prefix_sum != total) return;
            ++visited;
            if (visit(static_cast<const ExponentVector&>(eta))) stop = true;
            return;
        }
        for (int x = 0; x <= caps[j] && prefix_sum + x <= total; ++x) {
            eta.set(order[j], x);
            self(self, j + 1, prefix_sum + x);
            if (stop) break;
        }
        eta.set(order[j], 0);
    };
    if (std::all_of(caps.begin(), caps.end(), [](int c) { return c >= 0; })) rec(rec, 0, 0);
    return visited;
}

}  // namespace atmatch

#endif
