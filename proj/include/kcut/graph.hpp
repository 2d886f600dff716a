#ifndef KCUT_GRAPH_HPP
#define KCUT_GRAPH_HPP

#include <span>
#include <vector>

namespace kcut {

// One weighted edge in canonical orientation: u < v, w > 0.
// A default-initialized weight of 1 makes unweighted edge lists terse.
struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

// Weighted undirected simple graph. Vertices are 0-based indices 0..n-1.
// Immutable after construction; edges are stored sorted by (u, v) with
// u < v, no self-loops, no duplicates, every weight finite and positive.
class Graph {
public:
    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    double total_weight() const { return total_weight_; }

    // Weighted degree of every vertex.
    std::vector<double> weighted_degrees() const;

    // True when every edge weight is an exact integer.
    bool integral_weights() const;

    friend Graph build_graph(int n, const std::vector<Edge>& raw_edges);

private:
    Graph() = default;
    int n_ = 0;
    std::vector<Edge> edges_;
    double total_weight_ = 0.0;
};

// Validates and canonicalizes raw edges. Rejects n < 1, self-loops,
// out-of-range indices, duplicate pairs, and weights that are not
// finite positive reals.
Graph build_graph(int n, const std::vector<Edge>& raw_edges);

// A k-cut witness: an assignment of every vertex to one of k classes
// together with its cut weight. Classes may be empty.
struct CutPartition {
    int k = 0;
    std::vector<int> assignment;
    double cut_weight = 0.0;
};

// Sum of weights over edges whose endpoints lie in distinct classes.
// Rejects assignments of the wrong length or with values outside [0, k).
double cut_weight(const Graph& g, std::span<const int> assignment, int k);

// Sum of weights over edges whose endpoints share a class. Complements
// cut_weight: the two always add up to total_weight(g).
double intra_class_weight(const Graph& g, std::span<const int> assignment, int k);

// Validates the assignment and evaluates its cut weight.
CutPartition make_cut_partition(const Graph& g, int k, std::vector<int> assignment);

// Contracts each class to a single vertex. The input must be a partition of
// the vertex set into nonempty classes carrying zero intra-class weight
// (the r-partite hypothesis); violating edges are an error, never dropped.
// The result is a weighted graph on r vertices where the weight of {i, j}
// is the total weight crossing classes i and j; zero pairs are omitted.
Graph contract_partition(const Graph& g, const std::vector<std::vector<int>>& classes);

// Groups vertices by label. Labels must be 0..r-1 with every class nonempty.
std::vector<std::vector<int>> classes_from_labels(std::span<const int> labels);

} // namespace kcut

#endif
