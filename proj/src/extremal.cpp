#include "kcut/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "kcut/bounds.hpp"
#include "kcut/errors.hpp"
#include "kcut/spectra.hpp"

namespace kcut {

namespace {

std::vector<std::vector<char>> adjacency_flags(const Graph& g) {
    std::vector<std::vector<char>> adj(g.order(), std::vector<char>(g.order(), 0));
    for (const Edge& e : g.edges()) {
        adj[e.u][e.v] = 1;
        adj[e.v][e.u] = 1;
    }
    return adj;
}

} // namespace

int clique_number(const Graph& g, std::uint64_t cap) {
    const int n = g.order();
    const auto adj = adjacency_flags(g);

    int best = 1; // a single vertex is always a clique
    std::uint64_t nodes = 0;

    // Tomita-style branch and bound. Candidates stay sorted by vertex index;
    // each level greedy-colors them and branches from the highest color down,
    // pruning once depth + color can no longer beat the incumbent.
    auto expand = [&](auto&& self, const std::vector<int>& cand, int depth) -> void {
        std::vector<int> color(cand.size());
        int max_color = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::vector<char> used(max_color + 2, 0);
            for (std::size_t j = 0; j < i; ++j)
                if (adj[cand[i]][cand[j]] && color[j] <= max_color + 1) used[color[j]] = 1;
            int c = 1;
            while (used[c]) ++c;
            color[i] = c;
            max_color = std::max(max_color, c);
        }
        std::vector<std::size_t> order(cand.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });

        std::vector<char> removed(cand.size(), 0);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            const std::size_t vi = order[idx];
            const int v = cand[vi];
            if (depth + color[vi] <= best) return; // colors bound every deeper clique
            removed[vi] = 1;
            if (++nodes > cap)
                throw budget_error("clique search exceeded its branch cap after " +
                                       std::to_string(nodes) + " nodes",
                                   nodes, cap);
            std::vector<int> next;
            for (std::size_t j = 0; j < cand.size(); ++j)
                if (!removed[j] && adj[v][cand[j]]) next.push_back(cand[j]);
            if (next.empty())
                best = std::max(best, depth + 1);
            else
                self(self, next, depth + 1);
        }
    };

    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    expand(expand, all, 0);
    return best;
}

Graph construct_equality_graph(int chi, int k, const Graph& h) {
    if (k < 2 || chi < k)
        throw input_error("construction needs chi >= k >= 2, got chi = " + std::to_string(chi) +
                          ", k = " + std::to_string(k));
    if (chi % k != 0)
        throw input_error("k = " + std::to_string(k) + " does not divide chi = " +
                          std::to_string(chi));
    for (const Edge& e : h.edges())
        if (e.w != 1.0) throw input_error("H must be unweighted (every edge weight 1)");

    const std::vector<double> deg = h.weighted_degrees();
    const int t = static_cast<int>(std::llround(deg.empty() ? 0.0 : deg[0]));
    for (double d : deg)
        if (std::llround(d) != t)
            throw input_error("H is not regular: degrees " + std::to_string(t) + " and " +
                              std::to_string(static_cast<int>(std::llround(d))) + " both occur");
    if (t < 1) throw input_error("H must be t-regular with t >= 1");

    const int omega = clique_number(h);
    if (omega < chi)
        throw input_error("clique deficit: omega(H) = " + std::to_string(omega) +
                          " < chi = " + std::to_string(chi));

    const SpectralSummary s = spectral_summary(h);
    const double limit = static_cast<double>(t) / (chi - 1);
    const double margin = limit - std::abs(s.mu_min);
    if (margin <= 0.0)
        throw input_error("eigenvalue condition violated: |mu_min(H)| = " +
                          std::to_string(std::abs(s.mu_min)) +
                          " is not below t/(chi-1) = " + std::to_string(limit));
    if (margin <= 1e-8)
        throw input_error("eigenvalue condition within guard band: |mu_min(H)| = " +
                          std::to_string(std::abs(s.mu_min)) + " sits within 1e-8 of t/(chi-1)");

    // Pattern product (J_chi - I_chi) (x) A(H): vertex (a, u) -> a * n_h + u,
    // with (a, u) ~ (b, v) iff a != b and u ~ v in H.
    const int n_h = h.order();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(chi) * (chi - 1) * h.edges().size());
    for (int a = 0; a < chi; ++a)
        for (int b = a + 1; b < chi; ++b)
            for (const Edge& e : h.edges()) {
                edges.push_back(Edge{a * n_h + e.u, b * n_h + e.v});
                edges.push_back(Edge{a * n_h + e.v, b * n_h + e.u});
            }
    Graph g = build_graph(chi * n_h, edges);

    const int expected = (chi - 1) * t;
    for (double d : g.weighted_degrees())
        if (std::llround(d) != expected)
            throw numeric_error("constructed graph is not (chi-1) t-regular");
    return g;
}

EqualityReport verify_equality(int chi, int k, const Graph& h, std::uint64_t budget) {
    Graph g = construct_equality_graph(chi, k, h);

    EqualityReport rep;
    rep.chi = chi;
    rep.k = k;
    rep.t = static_cast<int>(std::llround(h.weighted_degrees()[0]));
    rep.n_g = g.order();
    rep.m_g = g.total_weight();

    const SpectralSummary s = spectral_summary(g);
    rep.mu_min_g = s.mu_min;
    if (std::abs(s.mu_min + rep.t) > 1e-8)
        throw numeric_error("spectrum identity mu_min(G) = -t failed: computed " +
                            std::to_string(s.mu_min));

    // The eigenvalue bound evaluated at the exact mu_min = -t, in integer
    // arithmetic so equality instances certify without float noise:
    // ((k-1)/k)(m + t n / 2) = (k-1)(2m + t n) / (2k).
    const std::int64_t m_int = std::llround(rep.m_g);
    const std::int64_t numerator =
        static_cast<std::int64_t>(k - 1) *
        (2 * m_int + static_cast<std::int64_t>(rep.t) * rep.n_g);
    rep.bound = static_cast<double>(numerator) / (2.0 * k);

    // Ratio cut through the chi natural classes; the paper's chain of
    // equalities says its weight meets the bound exactly.
    const int n_h = h.order();
    std::vector<std::vector<int>> natural(chi);
    for (int a = 0; a < chi; ++a)
        for (int u = 0; u < n_h; ++u) natural[a].push_back(a * n_h + u);
    const CutPartition pinch = rpartite_ratio_cut(g, natural, k);
    rep.pinch_cut = pinch.cut_weight;
    const double tol = 1e-9 * std::max(1.0, rep.m_g);
    if (std::abs(rep.pinch_cut - rep.bound) > tol)
        throw numeric_error("pinch failed: ratio cut " + std::to_string(rep.pinch_cut) +
                            " does not meet the bound " + std::to_string(rep.bound));

    try {
        rep.exact = exact_max_kcut(g, k, budget).cut_weight;
    } catch (const budget_error& e) {
        rep.exact_reason = e.what();
    }

    if (rep.exact) {
        rep.method = "exact";
        rep.certified = std::abs(rep.bound - *rep.exact) <= tol;
    } else {
        rep.method = "pinch";
        rep.certified = true; // the pinch equality above already held
    }

    try {
        const int omega = clique_number(g);
        rep.clique_g = omega;
        if (omega != chi)
            throw numeric_error("omega(G) = " + std::to_string(omega) +
                                " differs from chi = " + std::to_string(chi));
    } catch (const budget_error&) {
        // clique search over cap: leave clique_g absent
    }

    return rep;
}

} // namespace kcut
