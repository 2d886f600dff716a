#include "kcut/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kcut/errors.hpp"

namespace kcut {

std::vector<double> Graph::weighted_degrees() const {
    std::vector<double> deg(n_, 0.0);
    for (const Edge& e : edges_) {
        deg[e.u] += e.w;
        deg[e.v] += e.w;
    }
    return deg;
}

bool Graph::integral_weights() const {
    for (const Edge& e : edges_)
        if (e.w != std::floor(e.w)) return false;
    return true;
}

Graph build_graph(int n, const std::vector<Edge>& raw_edges) {
    if (n < 1) throw input_error("graph order must be at least 1, got " + std::to_string(n));

    Graph g;
    g.n_ = n;
    g.edges_.reserve(raw_edges.size());
    for (const Edge& e : raw_edges) {
        if (e.u == e.v)
            throw input_error("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw input_error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") out of range for order " + std::to_string(n));
        if (!std::isfinite(e.w) || e.w <= 0.0)
            throw input_error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") has non-positive or non-finite weight");
        Edge c = e;
        if (c.u > c.v) std::swap(c.u, c.v);
        g.edges_.push_back(c);
    }
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge& a, const Edge& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
    for (std::size_t i = 1; i < g.edges_.size(); ++i)
        if (g.edges_[i - 1].u == g.edges_[i].u && g.edges_[i - 1].v == g.edges_[i].v)
            throw input_error("duplicate edge (" + std::to_string(g.edges_[i].u) + ", " +
                              std::to_string(g.edges_[i].v) + ")");
    for (const Edge& e : g.edges_) g.total_weight_ += e.w;
    return g;
}

namespace {

void check_assignment(const Graph& g, std::span<const int> assignment, int k) {
    if (static_cast<int>(assignment.size()) != g.order())
        throw input_error("assignment length " + std::to_string(assignment.size()) +
                          " does not match graph order " + std::to_string(g.order()));
    if (k < 1) throw input_error("class count must be at least 1");
    for (int a : assignment)
        if (a < 0 || a >= k)
            throw input_error("class index " + std::to_string(a) + " outside [0, " +
                              std::to_string(k) + ")");
}

} // namespace

double cut_weight(const Graph& g, std::span<const int> assignment, int k) {
    check_assignment(g, assignment, k);
    double w = 0.0;
    for (const Edge& e : g.edges())
        if (assignment[e.u] != assignment[e.v]) w += e.w;
    return w;
}

double intra_class_weight(const Graph& g, std::span<const int> assignment, int k) {
    check_assignment(g, assignment, k);
    double w = 0.0;
    for (const Edge& e : g.edges())
        if (assignment[e.u] == assignment[e.v]) w += e.w;
    return w;
}

CutPartition make_cut_partition(const Graph& g, int k, std::vector<int> assignment) {
    double w = cut_weight(g, assignment, k);
    return CutPartition{k, std::move(assignment), w};
}

Graph contract_partition(const Graph& g, const std::vector<std::vector<int>>& classes) {
    const int n = g.order();
    const int r = static_cast<int>(classes.size());
    if (r < 1) throw input_error("partition has no classes");

    std::vector<int> owner(n, -1);
    for (int i = 0; i < r; ++i) {
        if (classes[i].empty())
            throw input_error("partition class " + std::to_string(i) + " is empty");
        for (int v : classes[i]) {
            if (v < 0 || v >= n)
                throw input_error("partition vertex " + std::to_string(v) + " out of range");
            if (owner[v] != -1)
                throw input_error("vertex " + std::to_string(v) + " appears in two classes");
            owner[v] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1)
            throw input_error("vertex " + std::to_string(v) + " missing from the partition");

    // r-partite hypothesis: no weight may sit inside a class.
    std::vector<double> cross(static_cast<std::size_t>(r) * r, 0.0);
    for (const Edge& e : g.edges()) {
        int a = owner[e.u], b = owner[e.v];
        if (a == b)
            throw input_error("intra-class edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + "): input is not r-partite for this partition");
        cross[static_cast<std::size_t>(std::min(a, b)) * r + std::max(a, b)] += e.w;
    }

    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            double w = cross[static_cast<std::size_t>(i) * r + j];
            if (w > 0.0) edges.push_back(Edge{i, j, w});
        }
    return build_graph(r, edges);
}

std::vector<std::vector<int>> classes_from_labels(std::span<const int> labels) {
    int r = 0;
    for (int a : labels) {
        if (a < 0) throw input_error("negative class label");
        r = std::max(r, a + 1);
    }
    if (labels.empty()) throw input_error("empty label vector");
    std::vector<std::vector<int>> classes(r);
    for (int v = 0; v < static_cast<int>(labels.size()); ++v)
        classes[labels[v]].push_back(v);
    for (int i = 0; i < r; ++i)
        if (classes[i].empty())
            throw input_error("class label " + std::to_string(i) + " is unused");
    return classes;
}

} // namespace kcut
