#include "kcut/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kcut/errors.hpp"
#include "kcut/solvers.hpp"

namespace kcut {

std::int64_t turan_number(std::int64_t n, std::int64_t k) {
    if (k < 1) throw input_error("turan_number needs k >= 1");
    if (n < 0) throw input_error("turan_number needs n >= 0");
    // With n = qk + s the formula reduces to (k-1) q (qk + 2s) / 2 + C(s,2);
    // the first product is always even, so this stays in integers.
    const std::int64_t q = n / k, s = n % k;
    return (k - 1) * q * (q * k + 2 * s) / 2 + s * (s - 1) / 2;
}

double upper_bound_eigmin(double m, int n, int k, double mu_min) {
    if (k < 2) throw input_error("upper_bound_eigmin needs k >= 2");
    if (n < 1) throw input_error("upper_bound_eigmin needs n >= 1");
    return (static_cast<double>(k - 1) / k) * (m - mu_min * n / 2.0);
}

double upper_bound_laplacian(int n, int k, double lambda_max) {
    if (k < 2) throw input_error("upper_bound_laplacian needs k >= 2");
    if (n < 1) throw input_error("upper_bound_laplacian needs n >= 1");
    return (n * static_cast<double>(k - 1) / (2.0 * k)) * lambda_max;
}

double lower_bound_ratio(int r, int k, double m) {
    if (k < 2) throw input_error("lower_bound_ratio needs k >= 2");
    if (r < k) throw input_error("lower_bound_ratio needs r >= k");
    const double pairs = static_cast<double>(r) * (r - 1) / 2.0;
    return static_cast<double>(turan_number(r, k)) * m / pairs;
}

double chromatic_lower_bound(double m, int n, double lambda_max) {
    if (n < 1) throw input_error("chromatic_lower_bound needs n >= 1");
    const double denom = n * lambda_max - 2.0 * m;
    if (denom <= 1e-12) {
        if (m == 0.0) return 1.0; // edgeless graph, chromatic number 1
        throw input_error("chromatic lower bound degenerate: n*lambda - 2m is not positive");
    }
    return 1.0 + 2.0 * m / denom;
}

KPartiteCheck kpartite_eigen_inequality_check(const Graph& h, int k,
                                              const SpectralSummary& summary,
                                              const std::vector<std::vector<int>>* witness) {
    if (k < 2) throw input_error("kpartite_eigen_inequality_check needs k >= 2");
    if (witness) {
        // contract_partition errors out on any intra-class weight.
        contract_partition(h, *witness);
        if (static_cast<int>(witness->size()) > k)
            throw input_error("witness has more than k classes");
    }
    KPartiteCheck c;
    c.lhs = summary.mu_max;
    c.rhs = (static_cast<double>(k - 1) / k) * summary.lambda_max;
    c.slack = c.rhs - c.lhs;
    c.holds = c.lhs <= c.rhs + 1e-9;
    return c;
}

BoundReport bound_report(const Graph& g, int k, const BoundOptions& options) {
    if (k < 2) throw input_error("bound_report needs k >= 2");

    BoundReport r;
    r.k = k;
    r.m = g.total_weight();

    const SpectralSummary s = spectral_summary(g);
    r.upper_eigmin = upper_bound_eigmin(r.m, g.order(), k, s.mu_min);
    r.upper_laplacian = upper_bound_laplacian(g.order(), k, s.lambda_max);
    r.upper_trivial = r.m;
    r.lower_trivial = (1.0 - 1.0 / k) * r.m;
    r.chromatic_lb = chromatic_lower_bound(r.m, g.order(), s.lambda_max);

    if (options.r_partition) {
        const int rr = static_cast<int>(options.r_partition->size());
        contract_partition(g, *options.r_partition); // validates the witness
        r.lower_ratio = lower_bound_ratio(rr, k, r.m);
    }

    if (options.compute_exact) {
        try {
            r.exact = exact_max_kcut(g, k, options.budget).cut_weight;
        } catch (const budget_error& e) {
            r.exact_reason = e.what();
        }
    }

    if (g.integral_weights()) {
        BoundFloors f;
        f.eigmin = static_cast<std::int64_t>(std::floor(r.upper_eigmin + 1e-9));
        f.laplacian = static_cast<std::int64_t>(std::floor(r.upper_laplacian + 1e-9));
        f.trivial = static_cast<std::int64_t>(std::floor(r.upper_trivial + 1e-9));
        r.floors = f;
    }

    const double best_upper = std::min({r.upper_eigmin, r.upper_laplacian, r.upper_trivial});
    double best_lower = r.lower_trivial;
    if (r.lower_ratio) best_lower = std::max(best_lower, *r.lower_ratio);
    r.gap = best_upper - (r.exact ? *r.exact : best_lower);
    return r;
}

} // namespace kcut
