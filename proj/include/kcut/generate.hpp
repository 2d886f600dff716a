#ifndef KCUT_GENERATE_HPP
#define KCUT_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

Graph complete_graph(int n);
Graph cycle_graph(int n); // n >= 3
Graph path_graph(int n);
Graph star_graph(int n); // K_{1,n-1}: vertex 0 is the center
Graph complete_multipartite_graph(const std::vector<int>& sizes);
Graph turan_graph(int n, int k); // balanced complete multipartite
Graph petersen_graph();          // Kneser(5,2)

// G(n,p) with a fixed counter-based generator so the same seed yields the
// same edge set on every platform. Edge {u,v}, u < v, is present iff
//   to_unit(splitmix64(seed ^ splitmix64(rank(u,v) + 1))) < p
// where rank is the lexicographic index of the pair and to_unit maps the
// top 53 bits into [0,1).
Graph gnp_graph(int n, double p, std::uint64_t seed);

// Parses a family spec such as "complete(4)", "turan(5,3)", "petersen",
// "complete_multipartite(2,2,2)" or "gnp(10,0.5,42)". A gnp spec may omit
// the seed, in which case default_seed (or 0) is used.
Graph generate(const std::string& family_spec,
               std::optional<std::uint64_t> default_seed = std::nullopt);

} // namespace kcut

#endif
