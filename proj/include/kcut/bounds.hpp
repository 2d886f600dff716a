#ifndef KCUT_BOUNDS_HPP
#define KCUT_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/spectra.hpp"

namespace kcut {

// Maximum edge count of a k-partite graph on n vertices, computed exactly
// in integer arithmetic:  t_k(n) = ((k-1)/2k)(n^2 - s^2) + C(s,2)  with
// s = n mod k. For k >= n this is C(n,2).
std::int64_t turan_number(std::int64_t n, std::int64_t k);

// mc_k(G) <= ((k-1)/k) (m - mu_min * n / 2).
double upper_bound_eigmin(double m, int n, int k, double mu_min);

// mc_k(G) <= (n (k-1) / 2k) * lambda_max.
double upper_bound_laplacian(int n, int k, double lambda_max);

// For an r-partite graph of total weight m: mc_k(G) >= t_k(r) m / C(r,2).
double lower_bound_ratio(int r, int k, double m);

// chi(G) >= 1 + 2m / (n lambda_max - 2m). Returns the real-valued bound;
// callers take the ceiling for the integer chromatic bound. The edgeless
// case (m = 0, lambda = 0) returns 1 by convention; any other degenerate
// denominator is an error.
double chromatic_lower_bound(double m, int n, double lambda_max);

struct KPartiteCheck {
    double lhs = 0.0; // mu_max(H)
    double rhs = 0.0; // ((k-1)/k) lambda_max(H)
    double slack = 0.0;
    bool holds = false;
};

// Checks mu(H) <= ((k-1)/k) lambda(H) for a k-partite graph H. The caller
// asserts k-partiteness; when a witness partition is supplied it is checked
// for zero intra-class weight first.
KPartiteCheck kpartite_eigen_inequality_check(
    const Graph& h, int k, const SpectralSummary& summary,
    const std::vector<std::vector<int>>* witness = nullptr);

// Integer floors of the real-valued upper bounds, meaningful when all
// weights are integers (mc_k is then an integer). A 1e-9 guard keeps exact
// equality cases from flooring one short.
struct BoundFloors {
    std::int64_t eigmin = 0;
    std::int64_t laplacian = 0;
    std::int64_t trivial = 0;
};

struct BoundReport {
    int k = 0;
    double m = 0.0;
    double upper_eigmin = 0.0;
    double upper_laplacian = 0.0;
    double upper_trivial = 0.0;                // = m
    double lower_trivial = 0.0;                // = (1 - 1/k) m
    std::optional<double> lower_ratio;         // Theorem-2 value, needs an r-partition
    std::optional<double> exact;               // optimal mc_k when within budget
    std::string exact_reason;                  // set when exact was requested but refused
    double chromatic_lb = 0.0;
    std::optional<BoundFloors> floors;         // present iff all weights integral
    // min upper bound minus exact when known, else minus the best lower bound
    double gap = 0.0;
};

struct BoundOptions {
    std::optional<std::vector<std::vector<int>>> r_partition;
    bool compute_exact = false;
    std::uint64_t budget = 100'000'000;
};

BoundReport bound_report(const Graph& g, int k, const BoundOptions& options = {});

} // namespace kcut

#endif
