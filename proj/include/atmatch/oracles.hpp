#ifndef ATMATCH_ORACLES_HPP
#define ATMATCH_ORACLES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atmatch/exponent.hpp"
#include "atmatch/extractor.hpp"
#include "atmatch/graph_io.hpp"
#include "atmatch/plane_graph.hpp"

namespace atmatch {

struct CheckResult {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

// The four conditions of a nice monomial for (g, e, m): (1) non-vanishing in
// g - e - m (by coeff_select), (2) zero on e, (3) boundary cap 2 - d_M,
// (4) interior cap 3. The caps are checked first. An oriented `m` removes no
// edges and lifts the interior cap of its heads to 4.
CheckResult is_nice(const PlaneGraph& g, const Edge& e, const Matching& m, const ExponentVector& eta,
                    const Signature& sigma = {});

// Caps of a special monomial of g' - e - m for the fan around the deleted
// vertex: zero on e, v_{n-1} at most 1 - d_M, other boundary vertices at most
// 2 - d_M except one fan vertex may reach 3 - d_M, interior at most 3.
CheckResult is_special(const PlaneGraph& g_prime, const Edge& e, const Matching& m, const ExponentVector& tau,
                       const Fan& fan);

struct ReportEntry {
    std::string check;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<ReportEntry> entries;
    bool all_pass() const;
    const ReportEntry* find(std::string_view check) const;
    std::string to_text() const;
};

// Re-derives every certificate claim with coeff_select and direct cap checks.
VerificationReport verify_certificate(const PlaneGraph& g, const Signature& sigma, const Certificate& cert);

using Coloring = std::map<VertexId, int>;

// Searches lists(v) for a colouring on which the signed graph polynomial of g
// does not vanish. Requires |lists(v)| >= eta(v) + 1 and a non-vanishing eta.
std::optional<Coloring> cn_assign(const PlaneGraph& g, const Signature& sigma, const ExponentVector& eta,
                                  const ListAssignment& lists);

// d-defective L-colouring: u, v conflict when c(u) = sigma(uv) c(v), and every
// vertex may have at most d conflicting neighbours.
std::optional<Coloring> list_color(const PlaneGraph& g, const Signature& sigma, const ListAssignment& lists, int d,
                                   std::size_t max_nodes = 50'000'000);

bool is_proper_coloring(const PlaneGraph& g, const Signature& sigma, const Coloring& c, int d = 0);

}  // namespace atmatch

#endif
