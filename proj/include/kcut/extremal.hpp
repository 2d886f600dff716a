#ifndef KCUT_EXTREMAL_HPP
#define KCUT_EXTREMAL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "kcut/graph.hpp"
#include "kcut/solvers.hpp"

namespace kcut {

inline constexpr std::uint64_t default_clique_cap = 10'000'000;

// Exact clique number by branch and bound with a greedy-coloring upper
// bound, deterministic (vertices in index order). The cap limits branch
// node expansions; exceeding it is a budget refusal.
int clique_number(const Graph& g, std::uint64_t cap = default_clique_cap);

// The equality-forcing pattern product: G has one vertex (a, u) per
// block a in [chi] and vertex u of H, with (a, u) ~ (b, v) iff a != b and
// u ~ v in H. Vertex (a, u) gets index a * order(H) + u.
//
// Preconditions, each rejected by name: chi >= k >= 2; k divides chi; H is
// an unweighted t-regular graph with t >= 1; omega(H) >= chi; and strictly
// |mu_min(H)| < t / (chi - 1). Inputs within 1e-8 of the eigenvalue boundary
// are rejected as "within guard band" rather than trusted to float noise.
// The result is (chi-1)t-regular on chi * order(H) vertices.
Graph construct_equality_graph(int chi, int k, const Graph& h);

// Certification record for one (chi, k, H) instance.
struct EqualityReport {
    int chi = 0;
    int k = 0;
    int t = 0;           // regularity of H
    int n_g = 0;         // order of G
    double m_g = 0.0;    // total weight of G
    double mu_min_g = 0.0;
    double bound = 0.0;  // eigenvalue upper bound on mc_k(G)
    double pinch_cut = 0.0; // lifted ratio-cut weight through the chi classes
    std::optional<double> exact;
    std::string exact_reason; // set when enumeration was refused
    std::optional<int> clique_g;
    bool certified = false;
    std::string method; // "exact" or "pinch"
};

// Builds G, asserts mu_min(G) = -t (within 1e-8), evaluates the eigenvalue
// bound in exact arithmetic at mu_min = -t, certifies equality either by
// exhaustive enumeration (within budget) or by the pinch: the ratio cut
// through the chi natural classes must meet the upper bound exactly. Also
// recomputes omega(G) = chi when the clique search finishes within its cap.
EqualityReport verify_equality(int chi, int k, const Graph& h,
                               std::uint64_t budget = default_enumeration_budget);

} // namespace kcut

#endif
