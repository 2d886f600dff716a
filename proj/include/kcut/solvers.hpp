#ifndef KCUT_SOLVERS_HPP
#define KCUT_SOLVERS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

inline constexpr std::uint64_t default_enumeration_budget = 100'000'000;

// Globally optimal max k-cut by depth-first enumeration of restricted-growth
// strings (vertex 0 pinned to class 0, class j+1 may appear only after class
// j), which quotients out class-relabeling symmetry. Refuses to start when
// the upper estimate k^(n-1) on enumerated assignments exceeds the budget.
// The returned witness is the lexicographically smallest restricted-growth
// string attaining the optimum.
CutPartition exact_max_kcut(const Graph& g, int k,
                            std::uint64_t budget = default_enumeration_budget);

// Places vertices one at a time, each into the class carrying the least
// weight to its already-placed neighbors (ties to the lowest class index).
// The result is guaranteed to cut at least (1 - 1/k) of the total weight;
// that guarantee is asserted before returning.
CutPartition greedy_kcut(const Graph& g, int k, std::span<const int> order);
CutPartition greedy_kcut(const Graph& g, int k); // natural order 0..n-1

// First-improvement local search: repeatedly scans vertices in index order
// and classes in index order, applying the first single-vertex move that
// strictly lowers intra-class weight, until no move improves.
CutPartition local_search_refine(const Graph& g, const CutPartition& start);

// The constructive cut behind the r-partite ratio bound: contracts G to a
// weighted K_r, enumerates every partition of the r class-vertices into k
// balanced groups (sizes in {floor(r/k), ceil(r/k)}, exactly the k-partite
// subgraphs of K_r with t_k(r) edges), keeps the heaviest, and lifts it back
// to the vertices of G. Since the maximum is at least the mean, the result
// cuts at least t_k(r) m / C(r,2); asserted. Capped at r <= 14.
CutPartition rpartite_ratio_cut(const Graph& g,
                                const std::vector<std::vector<int>>& classes, int k);

// Residuals of the two exact identities behind the eigenvalue bound, checked
// at an arbitrary partition with cut value c. With y^(i) the vector that is
// -k+1 on class i and 1 elsewhere:
//   sum_i ||y^(i)||^2           = (k^2 - k) n
//   sum_i <A y^(i), y^(i)>      = 2k(k-1) m - 2k^2 c
// Both residuals must be at most 1e-9 * max(1, k^2 m), and every Rayleigh
// link mu_min ||y||^2 <= <A y, y> must hold within 1e-8; violations throw.
struct QuadraticFormReport {
    double sum_norm_sq = 0.0;
    double sum_quadratic_form = 0.0;
    double norm_residual = 0.0;
    double form_residual = 0.0;
    double rayleigh_min_slack = 0.0; // min_i of <A y, y> - mu_min ||y||^2
};

QuadraticFormReport quadratic_form_identity_check(const Graph& g, const CutPartition& partition);

} // namespace kcut

#endif
