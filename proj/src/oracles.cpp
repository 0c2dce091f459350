#include "atmatch/oracles.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "atmatch/error.hpp"
#include "atmatch/graph_io.hpp"
#include "atmatch/polynomial.hpp"

namespace atmatch {

namespace {

bool in_sorted(const std::vector<VertexId>& vs, VertexId v) { return std::binary_search(vs.begin(), vs.end(), v); }

// Conditions (2)-(4) of a nice monomial.
CheckResult nice_caps(const PlaneGraph& g, const Edge& e, const Matching& m, const ExponentVector& eta) {
    if (eta[e.u] != 0 || eta[e.v] != 0)
        return {false, "condition 2: eta is positive at an endpoint of e"};
    const auto boundary = boundary_vertices(g);
    const auto heads = m.heads();
    for (const auto& [v, x] : eta.entries()) {
        if (!g.contains(v)) return {false, "eta names a vertex outside the graph"};
        if (in_sorted(boundary, v)) {
            if (x > 2 - m.degree(v))
                return {false, "condition 3: boundary vertex " + g.name(v) + " has exponent " + std::to_string(x)};
        } else if (x > (in_sorted(heads, v) ? 4 : 3)) {
            return {false, "condition 4: interior vertex " + g.name(v) + " has exponent " + std::to_string(x)};
        }
    }
    return {};
}

std::vector<Edge> removed_by(const Matching& m) {
    std::vector<Edge> out;
    if (!m.oriented)
        for (const Edge& p : m.edges) out.push_back(p.sorted());
    return out;
}

}  // namespace

CheckResult is_nice(const PlaneGraph& g, const Edge& e, const Matching& m, const ExponentVector& eta,
                    const Signature& sigma) {
    if (auto check = validate_matching(g, e, m); !check) return {false, "invalid matching: " + check.reason};
    if (auto caps = nice_caps(g, e, m, eta); !caps) return caps;
    std::vector<Edge> removed = removed_by(m);
    removed.push_back(e.sorted());
    if (coeff_select({g, removed, sigma, eta}) == 0) return {false, "condition 1: eta vanishes"};
    return {};
}

CheckResult is_special(const PlaneGraph& g_prime, const Edge& e, const Matching& m, const ExponentVector& tau,
                       const Fan& fan) {
    if (tau[e.u] != 0 || tau[e.v] != 0) return {false, "positive at an endpoint of e"};
    if (tau[fan.last] > 1 - m.degree(fan.last)) return {false, "v_{n-1} above 1 - d_M"};
    const auto boundary = boundary_vertices(g_prime);
    int raised = 0;
    for (const auto& [v, x] : tau.entries()) {
        if (!g_prime.contains(v)) return {false, "vertex outside the graph"};
        if (v == fan.last) continue;
        if (!in_sorted(boundary, v)) {
            if (x > 3) return {false, "interior vertex " + g_prime.name(v) + " above 3"};
            continue;
        }
        const bool on_fan = std::find(fan.inner.begin(), fan.inner.end(), v) != fan.inner.end();
        if (x <= 2 - m.degree(v)) continue;
        if (on_fan && x == 3 - m.degree(v) && ++raised == 1) continue;
        return {false, "boundary vertex " + g_prime.name(v) + " above its cap"};
    }
    return {};
}

bool VerificationReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
}

const ReportEntry* VerificationReport::find(std::string_view check) const {
    for (const ReportEntry& e : entries)
        if (e.check == check) return &e;
    return nullptr;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    for (const ReportEntry& e : entries) {
        out << (e.pass ? "pass " : "FAIL ") << e.check;
        if (!e.detail.empty()) out << ": " << e.detail;
        out << "\n";
    }
    out << (all_pass() ? "verdict pass" : "verdict FAIL") << "\n";
    return out.str();
}

VerificationReport verify_certificate(const PlaneGraph& g, const Signature& sigma, const Certificate& cert) {
    VerificationReport report;
    auto add = [&](std::string check, bool pass, std::string detail = {}) {
        report.entries.push_back({std::move(check), pass, std::move(detail)});
    };
    const Signature local = sigma.restricted_to(g);
    const bool oriented = cert.mode == Mode::Oriented;

    add("graph-digest", cert.graph_digest == graph_digest(g, local), cert.graph_digest);
    const bool mode_ok = oriented ? cert.matching.oriented
                                  : !cert.matching.oriented && (cert.mode == Mode::Signed) == !local.all_plus();
    add("mode", mode_ok, std::string(mode_name(cert.mode)));

    const bool edge_ok = g.contains(cert.e.u) && g.contains(cert.e.v) && g.has_edge(cert.e.u, cert.e.v) &&
                         boundary_dart(g, cert.e).has_value();
    add("edge-on-boundary", edge_ok);
    if (!edge_ok) return report;

    auto matching = validate_matching(g, cert.e, cert.matching);
    add("matching-valid", matching.valid, matching.reason);
    if (!matching.valid) return report;

    auto caps = nice_caps(g, cert.e, cert.matching, cert.eta);
    add("eta-caps", caps.ok, caps.reason);

    std::vector<Edge> removed_final = removed_by(cert.matching);
    std::vector<Edge> removed = removed_final;
    removed.push_back(cert.e.sorted());
    const long edges_left = static_cast<long>(g.edge_count()) - static_cast<long>(removed.size());
    add("eta-sum", cert.eta.sum() == edges_left,
        std::to_string(cert.eta.sum()) + " vs " + std::to_string(edges_left) + " edges");

    Integer c = coeff_select({g, removed, local, cert.eta});
    if (c == 0)
        add("coefficient", false, "eta vanishes");
    else if (c != cert.coefficient)
        add("coefficient", false, "coefficient-mismatch: recomputed " + c.str() + ", certificate says " +
                                      cert.coefficient.str());
    else
        add("coefficient", true, c.str());

    ExponentVector expected = cert.eta;
    expected.set(cert.e.u, 1);
    add("eta-final-shape", expected == cert.eta_final);
    add("eta-final-sum", cert.eta_final.sum() == edges_left + 1);
    Integer cf = coeff_select({g, removed_final, local, cert.eta_final});
    add("eta-final-nonvanishing", cf != 0, cf.str());

    const auto heads = cert.matching.heads();
    std::string over;
    for (const auto& [v, x] : cert.eta_final.entries())
        if (x > (in_sorted(heads, v) ? 4 : 3)) over += (over.empty() ? "" : ",") + g.name(v);
    add("eta-final-caps", over.empty(), over);

    if (oriented) {
        const std::size_t n = g.vertex_count();
        const bool bound = 2 * cert.matching.edges.size() <= n && 2 * heads.size() < n;
        add("head-bound", bound, std::to_string(heads.size()) + " heads, " + std::to_string(n) + " vertices");
    }
    return report;
}

bool is_proper_coloring(const PlaneGraph& g, const Signature& sigma, const Coloring& c, int d) {
    std::map<VertexId, int> conflicts;
    for (const Edge& e : g.edges()) {
        auto a = c.find(e.u), b = c.find(e.v);
        if (a == c.end() || b == c.end()) return false;
        if (a->second == sigma.sign(e) * b->second) {
            ++conflicts[e.u];
            ++conflicts[e.v];
        }
    }
    return std::all_of(conflicts.begin(), conflicts.end(), [&](const auto& kv) { return kv.second <= d; });
}

namespace {

// Backtracking over vertices in order; a vertex may collect at most d
// conflicting neighbours.
std::optional<Coloring> search_coloring(const PlaneGraph& g, const Signature& sigma, const ListAssignment& lists,
                                        int d, std::size_t max_nodes) {
    std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
    for (VertexId v : order)
        if (!lists.count(v) || lists.at(v).empty())
            throw Error(ErrorCode::PreconditionViolated, "no list for vertex " + g.name(v));
    const std::size_t ids = g.names()->size();
    std::vector<int> color(ids, 0), conflicts(ids, 0);
    std::vector<char> done(ids, 0);
    std::size_t nodes = 0;

    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == order.size()) return true;
        if (++nodes > max_nodes) throw Error(ErrorCode::SearchBudgetExceeded, "colouring search exceeded its budget");
        const VertexId v = order[i];
        const auto vi = static_cast<std::size_t>(v);
        for (int c : lists.at(v)) {
            std::vector<VertexId> hit;
            for (VertexId u : g.rotation(v))
                if (done[static_cast<std::size_t>(u)] && color[static_cast<std::size_t>(u)] == sigma.sign(u, v) * c)
                    hit.push_back(u);
            if (static_cast<int>(hit.size()) > d) continue;
            if (std::any_of(hit.begin(), hit.end(),
                            [&](VertexId u) { return conflicts[static_cast<std::size_t>(u)] + 1 > d; }))
                continue;
            for (VertexId u : hit) ++conflicts[static_cast<std::size_t>(u)];
            conflicts[vi] = static_cast<int>(hit.size());
            color[vi] = c;
            done[vi] = 1;
            if (self(self, i + 1)) return true;
            done[vi] = 0;
            conflicts[vi] = 0;
            for (VertexId u : hit) --conflicts[static_cast<std::size_t>(u)];
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    Coloring out;
    for (VertexId v : order) out[v] = color[static_cast<std::size_t>(v)];
    return out;
}

}  // namespace

std::optional<Coloring> cn_assign(const PlaneGraph& g, const Signature& sigma, const ExponentVector& eta,
                                  const ListAssignment& lists) {
    for (VertexId v : g.vertices()) {
        auto it = lists.find(v);
        const std::size_t size = it == lists.end() ? 0 : it->second.size();
        if (size < static_cast<std::size_t>(eta[v]) + 1)
            throw Error(ErrorCode::PreconditionViolated, "list of " + g.name(v) + " is shorter than eta + 1");
    }
    if (coeff_dp({g, {}, sigma, eta}) == 0) throw Error(ErrorCode::PreconditionViolated, "eta vanishes");
    // Only the first eta(v) + 1 colours of each list are needed.
    ListAssignment trimmed;
    for (VertexId v : g.vertices()) {
        const auto& l = lists.at(v);
        trimmed[v].assign(l.begin(), l.begin() + eta[v] + 1);
    }
    return search_coloring(g, sigma, trimmed, 0, 50'000'000);
}

std::optional<Coloring> list_color(const PlaneGraph& g, const Signature& sigma, const ListAssignment& lists, int d,
                                   std::size_t max_nodes) {
    if (d < 0) throw Error(ErrorCode::PreconditionViolated, "defect must be non-negative");
    return search_coloring(g, sigma, lists, d, max_nodes);
}

}  // namespace atmatch
