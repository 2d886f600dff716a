#ifndef KCUT_EDGE_LIST_HPP
#define KCUT_EDGE_LIST_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

// Edge-list text format:
//   line 1:  n m
//   then m lines:  u v [w]     (weight omitted means 1)
// Lines starting with '#' are comments; blank lines are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Partition file: n whitespace-separated class labels, one per vertex in
// index order. Labels must be 0..r-1 with no empty class. '#' comments and
// blank lines are ignored.
std::vector<std::vector<int>> parse_partition(std::istream& in, int n);
std::vector<std::vector<int>> read_partition_file(const std::string& path, int n);

} // namespace kcut

#endif
