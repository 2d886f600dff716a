#include "kcut/edge_list.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "kcut/errors.hpp"

namespace kcut {

namespace {

bool content_line(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(ch))) return true;
    }
    return false;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;

    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!content_line(line)) continue;
        std::istringstream header(strip_comment(line));
        std::string extra;
        if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0)
            throw input_error("line " + std::to_string(lineno) + ": expected header 'n m', got '" +
                              line + "'");
        break;
    }
    if (n < 0) throw input_error("empty edge list: missing 'n m' header");

    std::vector<Edge> edges;
    long long found = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!content_line(line)) continue;
        if (found == m)
            throw input_error("line " + std::to_string(lineno) + ": declared " +
                              std::to_string(m) + " edges, found more");
        std::istringstream row(strip_comment(line));
        Edge e;
        std::string extra;
        if (!(row >> e.u >> e.v))
            throw input_error("line " + std::to_string(lineno) + ": malformed edge line '" + line +
                              "'");
        if (!(row >> e.w)) {
            e.w = 1.0;
        } else if (row >> extra) {
            throw input_error("line " + std::to_string(lineno) + ": trailing tokens on edge line '" +
                              line + "'");
        }
        edges.push_back(e);
        ++found;
    }
    if (found != m)
        throw input_error("declared " + std::to_string(m) + " edges, found " +
                          std::to_string(found));
    return build_graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edges().size() << '\n';
    char buf[40];
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (e.w != 1.0) {
            std::snprintf(buf, sizeof buf, "%.17g", e.w);
            out << ' ' << buf;
        }
        out << '\n';
    }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open output file: " + path);
    write_edge_list(out, g);
}

std::vector<std::vector<int>> parse_partition(std::istream& in, int n) {
    std::vector<int> labels;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(strip_comment(line));
        int label;
        while (row >> label) labels.push_back(label);
        if (!row.eof()) {
            row.clear();
            std::string bad;
            row >> bad;
            throw input_error("partition line " + std::to_string(lineno) + ": bad token '" + bad +
                              "'");
        }
    }
    if (static_cast<int>(labels.size()) != n)
        throw input_error("partition has " + std::to_string(labels.size()) +
                          " labels for a graph of order " + std::to_string(n));
    return classes_from_labels(labels);
}

std::vector<std::vector<int>> read_partition_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open partition file: " + path);
    return parse_partition(in, n);
}

} // namespace kcut
