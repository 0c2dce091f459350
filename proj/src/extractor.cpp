#include "atmatch/extractor.hpp"

#include <algorithm>

#include "atmatch/error.hpp"
#include "atmatch/graph_io.hpp"

namespace atmatch {

std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::Plain: return "plain";
        case Mode::Oriented: return "oriented";
        case Mode::Signed: return "signed";
    }
    return "?";
}

std::string_view rule_name(Rule r) {
    switch (r) {
        case Rule::Base: return "Base";
        case Rule::Chord: return "Chord";
        case Rule::N3: return "N3";
        case Rule::Subcase2i: return "Subcase2i";
        case Rule::Subcase2ii: return "Subcase2ii";
        case Rule::Augment: return "Augment";
        case Rule::Restrict: return "Restrict";
        case Rule::Component: return "Component";
    }
    return "?";
}

std::vector<SpecialCandidate> special_candidates(const ExponentVector& eta_prime, const Fan& fan) {
    std::vector<SpecialCandidate> out;
    if (eta_prime[fan.last] < 1) return out;
    std::vector<VertexId> raised = fan.inner;
    std::sort(raised.begin(), raised.end());
    for (VertexId u : raised) {
        ExponentVector tau = eta_prime.minus_unit(fan.last);
        tau.add(u, 1);
        out.push_back({u, std::move(tau)});
    }
    return out;
}

namespace {

std::string names_of(const PlaneGraph& g, const std::vector<VertexId>& vs) {
    if (vs.empty()) return "-";
    std::string s;
    for (VertexId v : vs) s += (s.empty() ? "" : ",") + g.name(v);
    return s;
}

std::string edges_of(const PlaneGraph& g, const std::vector<Edge>& es) {
    if (es.empty()) return "-";
    std::string s;
    for (const Edge& e : es) s += (s.empty() ? "" : ",") + g.edge_name(e.sorted());
    return s;
}

Matching merge(Matching a, const Matching& b) {
    a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
    return a.canonical();
}

struct DepthGuard {
    int& depth;
    explicit DepthGuard(int& d) : depth(d) { ++depth; }
    ~DepthGuard() { --depth; }
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InternalProofViolation, what);
}

// Caps of a nice monomial for (g, e, m): 0 on e, 2 - d_M on the boundary,
// 3 inside (4 at oriented heads).
std::vector<int> nice_caps(const PlaneGraph& g, const Edge& e, const Matching& m) {
    auto boundary = boundary_vertices(g);
    auto heads = m.heads();
    std::vector<int> caps;
    for (VertexId v : g.vertices()) {
        int cap;
        if (e.touches(v))
            cap = 0;
        else if (std::binary_search(boundary.begin(), boundary.end(), v))
            cap = 2 - m.degree(v);
        else
            cap = std::binary_search(heads.begin(), heads.end(), v) ? 4 : 3;
        caps.push_back(cap);
    }
    return caps;
}

}  // namespace

Extractor::Extractor(Signature sigma, ExtractOptions options) : sigma_(std::move(sigma)), options_(options) {}

void Extractor::log(Rule rule, std::vector<std::pair<std::string, std::string>> params) {
    trace_.push_back({depth_, rule, std::move(params)});
}

std::vector<Edge> Extractor::removed_edges(const std::optional<Edge>& e, const Matching& m) const {
    std::vector<Edge> out;
    if (e) out.push_back(e->sorted());
    if (!options_.oriented)
        for (const Edge& p : m.edges) out.push_back(p.sorted());
    return out;
}

Integer Extractor::coefficient(const PlaneGraph& g, const std::optional<Edge>& e, const Matching& m,
                               const ExponentVector& eta) const {
    return coeff_dp({g, removed_edges(e, m), sigma_, eta});
}

NiceWitness Extractor::solve(const PlaneGraph& g, const Edge& e) {
    if (!g.has_edge(e.u, e.v)) throw Error(ErrorCode::PreconditionViolated, "e is not an edge of the graph");
    if (g.is_connected()) return solve_connected(g, e);

    auto e_dart = boundary_dart(g, e);
    if (!e_dart) throw Error(ErrorCode::EdgeNotOnBoundary, g.edge_name(e.sorted()) + " is not a boundary edge");
    NiceWitness out{Matching{{}, options_.oriented}, {}, 1};
    for (const auto& comp : g.components()) {
        NiceWitness part;
        if (std::binary_search(comp.begin(), comp.end(), e.u)) {
            part = solve_connected(g.induced_subgraph(comp, *e_dart), e);
        } else {
            part = solve_detached(g.induced_subgraph(comp, component_outer_dart(g, comp.front())));
        }
        out.matching = merge(out.matching, part.matching);
        out.eta += part.eta;
        out.coefficient *= part.coefficient;
    }
    if (options_.verify_steps)
        require(coefficient(g, e, out.matching, out.eta) == out.coefficient,
                "component product identity failed");
    return out;
}

NiceWitness Extractor::solve_connected(const PlaneGraph& g, const Edge& e) {
    const auto threshold = static_cast<std::size_t>(std::max(2, options_.base_threshold));
    if (g.vertex_count() <= threshold || g.edge_count() <= 1) return base_search(g, e);
    BoundaryWalk walk = boundary_walk(g, e);
    if (!walk.is_simple_cycle) return solve_augmented(g, e);
    auto chords = find_chords(g, walk);
    if (!chords.empty()) return case_chord(g, e, chords.front());
    return case_no_chord(g, e);
}

NiceWitness Extractor::solve_augmented(const PlaneGraph& g, const Edge& e) {
    Augmentation aug = augment_to_simple_boundary(g, e);
    log(Rule::Augment, {{"added", edges_of(g, aug.added)}});
    NiceWitness w;
    {
        DepthGuard guard(depth_);
        w = solve_connected(aug.graph, e);
    }
    for (const Edge& f : aug.added) {
        if (w.matching.contains_edge(f)) {
            // Cannot happen: matching edges end at interior vertices of G+,
            // added edges join boundary vertices. Kept as a safe fallback.
            log(Rule::Base, {{"fallback", g.edge_name(f)}});
            return base_search(g, e);
        }
    }
    std::vector<Edge> removed = removed_edges(e, w.matching);
    for (const Edge& f : aug.added) {
        Restriction r = restrict_monomial(aug.graph, removed, sigma_, w.eta, f);
        log(Rule::Restrict, {{"f", g.edge_name(f)}, {"lowered", g.name(r.lowered)}});
        w.eta = std::move(r.eta);
        w.coefficient = std::move(r.coefficient);
        removed.push_back(f);
    }
    return w;
}

NiceWitness Extractor::solve_detached(const PlaneGraph& piece) {
    if (piece.edge_count() == 0) return {Matching{{}, options_.oriented}, {}, 1};
    std::optional<Edge> own;
    for (const Dart& d : piece.trace_face(*piece.outer_anchor()))
        if (!own || d.edge() < *own) own = d.edge();
    log(Rule::Component, {{"e", piece.edge_name(*own)}, {"n", std::to_string(piece.vertex_count())}});
    NiceWitness w;
    {
        DepthGuard guard(depth_);
        w = solve(piece, *own);
    }
    // Restore the piece's own edge: its smaller endpoint takes exponent 1.
    w.eta.set(own->u, 1);
    w.coefficient = coefficient(piece, std::nullopt, w.matching, w.eta);
    require(w.coefficient != 0, "restoring the boundary edge of a detached piece vanished");
    return w;
}

NiceWitness Extractor::solve_pieces(const std::vector<PlaneGraph>& pieces, const Edge& e) {
    NiceWitness out;
    {
        DepthGuard guard(depth_);
        out = solve(pieces.front(), e);
    }
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        NiceWitness part = solve_detached(pieces[i]);
        out.matching = merge(out.matching, part.matching);
        out.eta += part.eta;
        out.coefficient *= part.coefficient;
    }
    return out;
}

NiceWitness Extractor::base_search(const PlaneGraph& g, const Edge& e) {
    if (g.edge_count() > options_.base_limits.max_edges)
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "base case with " + std::to_string(g.edge_count()) + " edges exceeds the search limit");
    std::vector<Edge> candidates;
    for (const Edge& f : g.edges())
        if (!f.touches(e.u) && !f.touches(e.v)) candidates.push_back(f);
    const std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
    std::size_t visited = 0;

    // Tries every orientation of `chosen` (oriented mode) or the plain matching.
    auto try_matching = [&](const std::vector<Edge>& chosen) -> std::optional<NiceWitness> {
        const std::size_t orientations = options_.oriented ? (std::size_t{1} << chosen.size()) : 1;
        for (std::size_t mask = 0; mask < orientations; ++mask) {
            Matching m{chosen, options_.oriented};
            for (std::size_t i = 0; i < chosen.size(); ++i)
                if (mask >> i & 1) m.edges[i] = {chosen[i].v, chosen[i].u};
            std::vector<Edge> removed = removed_edges(e, m);
            std::vector<Edge> remaining;
            std::vector<int> degree(g.names()->size(), 0);
            for (const Edge& f : g.edges()) {
                if (std::any_of(removed.begin(), removed.end(), [&](const Edge& r) { return r == f; })) continue;
                remaining.push_back(f);
                ++degree[static_cast<std::size_t>(f.u)];
                ++degree[static_cast<std::size_t>(f.v)];
            }
            std::vector<int> caps = nice_caps(g, e, m);
            for (std::size_t i = 0; i < order.size(); ++i)
                caps[i] = std::min(caps[i], degree[static_cast<std::size_t>(order[i])]);
            std::optional<NiceWitness> found;
            for_each_capped_composition(g, remaining, order, caps, static_cast<long>(remaining.size()),
                                        [&](const ExponentVector& eta) {
                                            if (++visited > options_.base_limits.max_candidates)
                                                throw Error(ErrorCode::SearchBudgetExceeded,
                                                            "base case search exceeded its candidate budget");
                                            Integer c = coeff_dp({g, removed, sigma_, eta});
                                            if (c == 0) return false;
                                            found = NiceWitness{m.canonical(), eta, std::move(c)};
                                            return true;
                                        });
            if (found) return found;
        }
        return std::nullopt;
    };

    // Matchings by size, each size in lexicographic order of edge positions.
    std::vector<Edge> chosen;
    std::vector<char> used(g.names()->size(), 0);
    std::optional<NiceWitness> result;
    auto rec = [&](auto&& self, std::size_t from, std::size_t size) -> void {
        if (result) return;
        if (chosen.size() == size) {
            result = try_matching(chosen);
            return;
        }
        for (std::size_t i = from; i < candidates.size() && !result; ++i) {
            const Edge& f = candidates[i];
            if (used[static_cast<std::size_t>(f.u)] || used[static_cast<std::size_t>(f.v)]) continue;
            used[static_cast<std::size_t>(f.u)] = used[static_cast<std::size_t>(f.v)] = 1;
            chosen.push_back(f);
            self(self, i + 1, size);
            chosen.pop_back();
            used[static_cast<std::size_t>(f.u)] = used[static_cast<std::size_t>(f.v)] = 0;
        }
    };
    for (std::size_t size = 0; size <= g.vertex_count() / 2 && !result; ++size) rec(rec, 0, size);
    require(result.has_value(), "no nice monomial found for a base case on " + std::to_string(g.vertex_count()) +
                                    " vertices");
    log(Rule::Base, {{"n", std::to_string(g.vertex_count())},
                     {"e", g.edge_name(e.sorted())},
                     {"matching", std::to_string(result->matching.edges.size())},
                     {"candidates", std::to_string(visited)}});
    return *std::move(result);
}

NiceWitness Extractor::case_chord(const PlaneGraph& g, const Edge& e, const Edge& chord) {
    ChordSplit split = split_at_chord(g, chord, e);
    log(Rule::Chord, {{"f", g.edge_name(chord.sorted())},
                      {"n1", std::to_string(split.with_edge.vertex_count())},
                      {"n2", std::to_string(split.other_side.vertex_count())}});
    NiceWitness w1, w2;
    {
        DepthGuard guard(depth_);
        w1 = solve(split.with_edge, e);
        w2 = solve(split.other_side, chord.sorted());
    }
    for (const Edge& p : w1.matching.edges)
        require(!w2.matching.covers(p.u) && !w2.matching.covers(p.v), "matchings of the chord sides overlap");
    NiceWitness out{merge(w1.matching, w2.matching), w1.eta + w2.eta, w1.coefficient * w2.coefficient};
    if (options_.verify_steps)
        require(coefficient(g, e, out.matching, out.eta) == out.coefficient, "chord product identity failed");
    return out;
}

NiceWitness Extractor::case_no_chord(const PlaneGraph& g, const Edge& e) {
    BoundaryDeletion del = delete_boundary_vertex(g, e);
    const std::size_t n = del.walk.vertices.size();
    const VertexId vn = del.removed;
    const Fan& fan = del.fan;
    const std::string fan_text = names_of(g, fan.inner);

    NiceWitness prime = solve_pieces(del.pieces, e);
    if (options_.verify_steps)
        require(coefficient(del.remainder, e, prime.matching, prime.eta) == prime.coefficient,
                "piece product identity failed");

    if (n >= 4) {
        std::string tested;
        for (const SpecialCandidate& cand : special_candidates(prime.eta, fan)) {
            Integer c = coefficient(del.remainder, e, prime.matching, cand.tau);
            tested += (tested.empty() ? "" : ",") + g.name(cand.raised) + (c != 0 ? ":1" : ":0");
            if (c != 0) return subcase_2i(g, e, prime.matching, cand, fan, vn, c, tested);
        }
        log(Rule::Subcase2ii, {{"vn", g.name(vn)}, {"fan", fan_text}, {"tested", tested.empty() ? "-" : tested}});
    } else {
        log(Rule::N3, {{"vn", g.name(vn)}, {"fan", fan_text}});
    }

    NiceWitness out{prime.matching, prime.eta, 0};
    for (VertexId u : fan.inner) out.eta.add(u, 1);
    out.eta.set(vn, 2);
    out.coefficient = coefficient(g, e, out.matching, out.eta);
    require(abs(out.coefficient) == abs(prime.coefficient) && out.coefficient != 0,
            "adding back " + g.name(vn) + " changed the coefficient magnitude");
    return out;
}

NiceWitness Extractor::subcase_2i(const PlaneGraph& g, const Edge& e, const Matching& m,
                                  const SpecialCandidate& cand, const Fan& fan, VertexId removed,
                                  const Integer& tau_coefficient, std::string tested) {
    std::optional<VertexId> saturated;
    for (VertexId u : fan.inner) {
        if (cand.tau[u] < 3) continue;
        require(!saturated && u == cand.raised, "more than one saturated fan vertex");
        saturated = u;
    }
    Matching next = m;
    ExponentVector eta = cand.tau;
    eta.add(fan.last, 1);
    for (VertexId u : fan.inner)
        if (u != saturated || options_.oriented) eta.add(u, 1);
    eta.set(removed, 1);
    if (saturated) {
        require(!m.covers(*saturated), "saturated vertex " + g.name(*saturated) + " is already matched");
        // Oriented pairs are stored (head, tail); the head keeps its raised exponent.
        next.edges.push_back(options_.oriented ? Edge{*saturated, removed} : Edge::normalized(*saturated, removed));
        next = next.canonical();
    }
    log(Rule::Subcase2i, {{"vn", g.name(removed)},
                          {"fan", names_of(g, fan.inner)},
                          {"tested", tested},
                          {"raised", g.name(cand.raised)},
                          {"saturated", saturated ? g.name(*saturated) : "-"}});
    NiceWitness out{std::move(next), std::move(eta), 0};
    out.coefficient = coefficient(g, e, out.matching, out.eta);
    require(out.coefficient != 0 && abs(out.coefficient) == abs(tau_coefficient),
            "special monomial lift changed the coefficient magnitude");
    return out;
}

Certificate finalize(const PlaneGraph& g, const Edge& e, const Signature& sigma, NiceWitness witness, Mode mode,
                     std::vector<TraceStep> trace) {
    const bool oriented = mode == Mode::Oriented;
    require(witness.eta[e.u] == 0 && witness.eta[e.v] == 0, "nice monomial is positive on e");
    Certificate cert;
    cert.mode = mode;
    cert.e = e;
    cert.matching = witness.matching.canonical();
    cert.eta = witness.eta;
    cert.eta_final = witness.eta;
    cert.eta_final.set(e.u, 1);

    std::vector<Edge> removed{e.sorted()};
    if (!oriented)
        for (const Edge& p : cert.matching.edges) removed.push_back(p.sorted());
    cert.coefficient = coeff_dp({g, removed, sigma, cert.eta});
    require(cert.coefficient != 0, "nice monomial vanishes");
    removed.erase(removed.begin());
    Integer restored = coeff_dp({g, removed, sigma, cert.eta_final});
    require(restored != 0 && abs(restored) == abs(cert.coefficient), "restoring e changed the coefficient");

    auto heads = cert.matching.heads();
    for (const auto& [v, x] : cert.eta_final.entries()) {
        const bool head = std::binary_search(heads.begin(), heads.end(), v);
        require(x <= (head ? 4 : 3), "final exponent above its cap at " + g.name(v));
    }
    cert.trace = std::move(trace);
    return cert;
}

Certificate extract(const PlaneGraph& g, const Edge& e, const Signature& sigma, ExtractOptions options) {
    if (!g.has_edge(e.u, e.v)) throw Error(ErrorCode::PreconditionViolated, "e is not an edge of the graph");
    if (!boundary_dart(g, e)) throw Error(ErrorCode::EdgeNotOnBoundary, g.edge_name(e.sorted()) + " is not a boundary edge");
    Signature local = sigma.restricted_to(g);
    Mode mode = options.oriented ? Mode::Oriented : (local.all_plus() ? Mode::Plain : Mode::Signed);
    Extractor ex(local, options);
    NiceWitness w = ex.solve(g, e);
    Certificate cert = finalize(g, e, local, std::move(w), mode, ex.take_trace());
    cert.graph_digest = graph_digest(g, local);
    return cert;
}

Certificate extract_oriented(const PlaneGraph& g, const Edge& e, const Signature& sigma, ExtractOptions options) {
    options.oriented = true;
    return extract(g, e, sigma, options);
}

}  // namespace atmatch
