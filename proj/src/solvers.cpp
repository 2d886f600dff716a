#include "kcut/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kcut/bounds.hpp"
#include "kcut/errors.hpp"
#include "kcut/spectra.hpp"

namespace kcut {

namespace {

// Saturating k^(n-1), the upper estimate on enumerated assignments.
std::uint64_t enumeration_estimate(int n, int k) {
    std::uint64_t est = 1;
    const auto kk = static_cast<std::uint64_t>(k);
    for (int i = 0; i < n - 1; ++i) {
        if (est > std::numeric_limits<std::uint64_t>::max() / kk)
            return std::numeric_limits<std::uint64_t>::max();
        est *= kk;
    }
    return est;
}

struct BackEdge {
    int u;
    double w;
};

// Edges from each vertex to lower-indexed vertices; the DFS places vertices
// in index order, so these are exactly the edges whose cut status is decided
// when a vertex is assigned.
std::vector<std::vector<BackEdge>> back_edges(const Graph& g) {
    std::vector<std::vector<BackEdge>> back(g.order());
    for (const Edge& e : g.edges()) back[e.v].push_back(BackEdge{e.u, e.w});
    return back;
}

void validate_partition(const Graph& g, const CutPartition& p) {
    const double recomputed = cut_weight(g, p.assignment, p.k);
    const double slack = 1e-12 * std::max(1.0, g.total_weight());
    if (std::abs(recomputed - p.cut_weight) > slack)
        throw input_error("stored cut weight does not match its assignment");
}

} // namespace

CutPartition exact_max_kcut(const Graph& g, int k, std::uint64_t budget) {
    if (k < 1) throw input_error("exact_max_kcut needs k >= 1");
    const int n = g.order();

    const std::uint64_t estimate = enumeration_estimate(n, k);
    if (estimate > budget)
        throw budget_error("exact enumeration estimate " + std::to_string(estimate) +
                               " exceeds budget " + std::to_string(budget),
                           estimate, budget);

    const auto back = back_edges(g);
    std::vector<int> assignment(n, 0);
    std::vector<int> best_assignment(n, 0);
    double best = -1.0;
    // Per-depth scratch for class-weight sums.
    std::vector<std::vector<double>> sums(n, std::vector<double>(k, 0.0));

    auto dfs = [&](auto&& self, int v, int used, double cut) -> void {
        if (v == n) {
            // Strict improvement only: the DFS visits restricted-growth
            // strings in lexicographic order, so ties keep the smallest.
            if (cut > best) {
                best = cut;
                best_assignment = assignment;
            }
            return;
        }
        double total = 0.0;
        auto& s = sums[v];
        const int limit = std::min(used, k - 1);
        std::fill(s.begin(), s.begin() + limit + 1, 0.0);
        for (const BackEdge& e : back[v]) {
            total += e.w;
            if (assignment[e.u] <= limit) s[assignment[e.u]] += e.w;
        }
        for (int c = 0; c <= limit; ++c) {
            assignment[v] = c;
            self(self, v + 1, std::max(used, c + 1), cut + total - s[c]);
        }
        assignment[v] = 0;
    };

    if (n == 1) {
        best = 0.0;
    } else {
        dfs(dfs, 1, 1, 0.0);
    }
    return CutPartition{k, std::move(best_assignment), std::max(best, 0.0)};
}

CutPartition greedy_kcut(const Graph& g, int k, std::span<const int> order) {
    if (k < 2) throw input_error("greedy_kcut needs k >= 2");
    const int n = g.order();
    if (static_cast<int>(order.size()) != n)
        throw input_error("vertex order has wrong length");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) throw input_error("vertex order is not a permutation");
        seen[v] = 1;
    }

    std::vector<std::vector<BackEdge>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(BackEdge{e.v, e.w});
        adj[e.v].push_back(BackEdge{e.u, e.w});
    }

    std::vector<int> assignment(n, 0);
    std::vector<char> placed(n, 0);
    std::vector<double> sums(k);
    for (int v : order) {
        std::fill(sums.begin(), sums.end(), 0.0);
        for (const BackEdge& e : adj[v])
            if (placed[e.u]) sums[assignment[e.u]] += e.w;
        int cls = 0;
        for (int c = 1; c < k; ++c)
            if (sums[c] < sums[cls]) cls = c; // ties keep the lowest index
        assignment[v] = cls;
        placed[v] = 1;
    }

    CutPartition cut = make_cut_partition(g, k, std::move(assignment));
    const double m = g.total_weight();
    const double guarantee = (1.0 - 1.0 / k) * m;
    if (cut.cut_weight < guarantee - 1e-9 * std::max(1.0, m))
        throw numeric_error("greedy cut fell below its (1 - 1/k) m guarantee");
    return cut;
}

CutPartition greedy_kcut(const Graph& g, int k) {
    std::vector<int> order(g.order());
    for (int i = 0; i < g.order(); ++i) order[i] = i;
    return greedy_kcut(g, k, order);
}

CutPartition local_search_refine(const Graph& g, const CutPartition& start) {
    validate_partition(g, start);
    const int n = g.order();
    const int k = start.k;

    std::vector<std::vector<BackEdge>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(BackEdge{e.v, e.w});
        adj[e.v].push_back(BackEdge{e.u, e.w});
    }

    std::vector<int> assignment = start.assignment;
    std::vector<double> sums(k);
    // Apply the first strictly improving (vertex, class) move in
    // lexicographic order, then rescan from the top. Terminates because the
    // cut weight strictly increases and assignments are finite.
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v = 0; v < n && !improved; ++v) {
            std::fill(sums.begin(), sums.end(), 0.0);
            for (const BackEdge& e : adj[v]) sums[assignment[e.u]] += e.w;
            const double current = sums[assignment[v]];
            for (int c = 0; c < k; ++c) {
                if (sums[c] < current) {
                    assignment[v] = c;
                    improved = true;
                    break;
                }
            }
        }
    }

    CutPartition refined = make_cut_partition(g, k, std::move(assignment));
    if (refined.cut_weight < start.cut_weight)
        throw numeric_error("local search decreased the cut weight");
    return refined;
}

CutPartition rpartite_ratio_cut(const Graph& g, const std::vector<std::vector<int>>& classes,
                                int k) {
    const int r = static_cast<int>(classes.size());
    if (k < 2) throw input_error("rpartite_ratio_cut needs k >= 2");
    if (r < k) throw input_error("rpartite_ratio_cut needs r >= k");
    if (r > 14) throw input_error("rpartite_ratio_cut is capped at r <= 14, got r = " +
                                  std::to_string(r));

    // Validates the witness: partition structure and zero intra-class weight.
    const Graph contracted = contract_partition(g, classes);
    std::vector<double> w(static_cast<std::size_t>(r) * r, 0.0);
    for (const Edge& e : contracted.edges()) {
        w[static_cast<std::size_t>(e.u) * r + e.v] = e.w;
        w[static_cast<std::size_t>(e.v) * r + e.u] = e.w;
    }

    // Balanced group sizes: hi groups of size ceil(r/k), the rest floor(r/k).
    // Exactly these partitions induce k-partite subgraphs of K_r with t_k(r)
    // edges, the maximum possible.
    const int lo = r / k, hi_count = r % k;
    const int cap = lo + (hi_count > 0 ? 1 : 0);

    std::vector<int> group(r, 0);
    std::vector<int> size(k, 0);
    std::vector<int> best_group;
    double best = -1.0;

    auto dfs = [&](auto&& self, int i, int used, double cut) -> void {
        if (i == r) {
            int over = 0;
            for (int c = 0; c < used; ++c)
                if (size[c] > lo) ++over;
            if (used == k && over == hi_count && cut > best) {
                best = cut;
                best_group = group;
            }
            return;
        }
        // Feasibility: the remaining elements must be able to fill every
        // group (opened or not) up to the floor size.
        const int remaining = r - i;
        int deficit = (k - used) * lo;
        for (int c = 0; c < used; ++c) deficit += std::max(0, lo - size[c]);
        if (remaining < deficit) return;

        const int limit = std::min(used, k - 1);
        for (int c = 0; c <= limit; ++c) {
            if (size[c] >= cap) continue;
            double gain = 0.0;
            for (int j = 0; j < i; ++j)
                if (group[j] != c) gain += w[static_cast<std::size_t>(j) * r + i];
            group[i] = c;
            ++size[c];
            self(self, i + 1, std::max(used, c + 1), cut + gain);
            --size[c];
        }
        group[i] = 0;
    };
    dfs(dfs, 0, 0, 0.0);

    if (best < 0.0) throw numeric_error("no balanced grouping found"); // unreachable for r >= k

    // Lift the group assignment of the class-vertices back to G.
    std::vector<int> assignment(g.order(), 0);
    for (int c = 0; c < r; ++c)
        for (int v : classes[c]) assignment[v] = best_group[c];
    CutPartition cut = make_cut_partition(g, k, std::move(assignment));

    // Max over balanced groupings is at least their mean, the ratio bound.
    const double bound = lower_bound_ratio(r, k, g.total_weight());
    if (cut.cut_weight < bound - 1e-9 * std::max(1.0, g.total_weight()))
        throw numeric_error("ratio cut fell below t_k(r) m / C(r,2)");
    return cut;
}

QuadraticFormReport quadratic_form_identity_check(const Graph& g, const CutPartition& partition) {
    const int k = partition.k;
    if (k < 2) throw input_error("quadratic_form_identity_check needs k >= 2");
    validate_partition(g, partition);

    const int n = g.order();
    const double m = g.total_weight();
    const double c = partition.cut_weight;
    const std::vector<int>& a = partition.assignment;

    std::vector<std::int64_t> class_size(k, 0);
    for (int v = 0; v < n; ++v) ++class_size[a[v]];

    const double mu_min = spectral_summary(g).mu_min;

    QuadraticFormReport rep;
    rep.rayleigh_min_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i) {
        // y is -k+1 on class i and 1 elsewhere.
        const double on = 1.0 - k, off = 1.0;
        const double norm_sq = static_cast<double>(k - 1) * (k - 1) * class_size[i] +
                               static_cast<double>(n - class_size[i]);
        double form = 0.0;
        for (const Edge& e : g.edges()) {
            const double yu = (a[e.u] == i) ? on : off;
            const double yv = (a[e.v] == i) ? on : off;
            form += 2.0 * e.w * yu * yv;
        }
        rep.sum_norm_sq += norm_sq;
        rep.sum_quadratic_form += form;
        rep.rayleigh_min_slack = std::min(rep.rayleigh_min_slack, form - mu_min * norm_sq);
    }

    const double expected_norm = static_cast<double>(k) * (k - 1) * n;
    const double expected_form = 2.0 * k * (k - 1) * m - 2.0 * k * k * c;
    rep.norm_residual = std::abs(rep.sum_norm_sq - expected_norm);
    rep.form_residual = std::abs(rep.sum_quadratic_form - expected_form);

    const double tol = 1e-9 * std::max(1.0, static_cast<double>(k) * k * m);
    if (rep.norm_residual > tol)
        throw numeric_error("norm identity residual " + std::to_string(rep.norm_residual) +
                            " exceeds tolerance");
    if (rep.form_residual > tol)
        throw numeric_error("quadratic form identity residual " +
                            std::to_string(rep.form_residual) + " exceeds tolerance");
    if (rep.rayleigh_min_slack < -1e-8)
        throw numeric_error("Rayleigh inequality violated by " +
                            std::to_string(-rep.rayleigh_min_slack));
    return rep;
}

} // namespace kcut
