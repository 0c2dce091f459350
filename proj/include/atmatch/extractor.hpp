#ifndef ATMATCH_EXTRACTOR_HPP
#define ATMATCH_EXTRACTOR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atmatch/exponent.hpp"
#include "atmatch/plane_graph.hpp"
#include "atmatch/polynomial.hpp"

namespace atmatch {

enum class Mode { Plain, Oriented, Signed };

std::string_view mode_name(Mode m);

enum class Rule { Base, Chord, N3, Subcase2i, Subcase2ii, Augment, Restrict, Component };

std::string_view rule_name(Rule r);

struct TraceStep {
    int depth = 0;
    Rule rule = Rule::Base;
    std::vector<std::pair<std::string, std::string>> params;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// Witness that AT(G - M) <= 4. `eta` is nice for (G, e, M); `eta_final` is
// eta with e.u raised to 1 and is non-vanishing for G - M. In oriented mode
// no edge is removed: `matching` holds (head, tail) pairs and heads may reach
// exponent 4.
struct Certificate {
    std::string graph_digest;
    Mode mode = Mode::Plain;
    Edge e;
    Matching matching;
    ExponentVector eta;
    ExponentVector eta_final;
    Integer coefficient;  // of eta in G - e - M (G - e in oriented mode)
    std::vector<TraceStep> trace;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct ExtractOptions {
    bool oriented = false;
    // Graphs with at most this many vertices are solved by exhaustive search.
    int base_threshold = 6;
    // Recompute the coefficient after every combination step and check the
    // identity that step relies on.
    bool verify_steps = true;
    SearchLimits base_limits{64, 5'000'000};
};

// Result of the induction for one (G, e) before e is restored.
struct NiceWitness {
    Matching matching;
    ExponentVector eta;
    Integer coefficient;
};

struct SpecialCandidate {
    VertexId raised = -1;  // u_i
    ExponentVector tau;
};

// tau_i = eta' - 1_{v_{n-1}} + 1_{u_i} for every fan vertex u_i, ordered by
// vertex order; empty when eta'(v_{n-1}) = 0.
std::vector<SpecialCandidate> special_candidates(const ExponentVector& eta_prime, const Fan& fan);

// Runs the inductive construction. One instance handles one top-level call;
// its trace accumulates across the recursion.
class Extractor {
public:
    Extractor(Signature sigma, ExtractOptions options);

    // (G, e) -> valid matching and nice monomial. Disconnected graphs are
    // handled per component.
    NiceWitness solve(const PlaneGraph& g, const Edge& e);

    NiceWitness base_search(const PlaneGraph& g, const Edge& e);
    NiceWitness case_chord(const PlaneGraph& g, const Edge& e, const Edge& chord);
    NiceWitness case_no_chord(const PlaneGraph& g, const Edge& e);
    NiceWitness subcase_2i(const PlaneGraph& g, const Edge& e, const Matching& m, const SpecialCandidate& cand,
                           const Fan& fan, VertexId removed, const Integer& tau_coefficient,
                           std::string tested = "-");

    const std::vector<TraceStep>& trace() const { return trace_; }
    std::vector<TraceStep> take_trace() { return std::move(trace_); }
    const Signature& signature() const { return sigma_; }
    const ExtractOptions& options() const { return options_; }

private:
    NiceWitness solve_connected(const PlaneGraph& g, const Edge& e);
    NiceWitness solve_augmented(const PlaneGraph& g, const Edge& e);
    // Solves a piece that does not contain e, restoring its own boundary edge.
    NiceWitness solve_detached(const PlaneGraph& piece);
    NiceWitness solve_pieces(const std::vector<PlaneGraph>& pieces, const Edge& e);
    std::vector<Edge> removed_edges(const std::optional<Edge>& e, const Matching& m) const;
    Integer coefficient(const PlaneGraph& g, const std::optional<Edge>& e, const Matching& m,
                        const ExponentVector& eta) const;
    void log(Rule rule, std::vector<std::pair<std::string, std::string>> params);

    Signature sigma_;
    ExtractOptions options_;
    std::vector<TraceStep> trace_;
    int depth_ = 0;
};

// Restores e: eta_final = eta with e.u set to 1, checked non-vanishing in G - M
// with every exponent within the final caps.
Certificate finalize(const PlaneGraph& g, const Edge& e, const Signature& sigma, NiceWitness witness, Mode mode,
                     std::vector<TraceStep> trace = {});

// Certificate for (G, e). Mode is Oriented when requested, otherwise Signed
// exactly when sigma has a negative edge in G.
Certificate extract(const PlaneGraph& g, const Edge& e, const Signature& sigma, ExtractOptions options = {});

Certificate extract_oriented(const PlaneGraph& g, const Edge& e, const Signature& sigma,
                             ExtractOptions options = {});

}  // namespace atmatch

#endif
