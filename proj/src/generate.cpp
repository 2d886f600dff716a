#include "kcut/generate.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>

#include "kcut/errors.hpp"

namespace kcut {

Graph complete_graph(int n) {
    if (n < 1) throw input_error("complete(n) needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
    return build_graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle(n) needs n >= 3");
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.push_back(Edge{u, u + 1});
    edges.push_back(Edge{0, n - 1});
    return build_graph(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw input_error("path(n) needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.push_back(Edge{u, u + 1});
    return build_graph(n, edges);
}

Graph star_graph(int n) {
    if (n < 1) throw input_error("star(n) needs n >= 1");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back(Edge{0, v});
    return build_graph(n, edges);
}

Graph complete_multipartite_graph(const std::vector<int>& sizes) {
    if (sizes.empty()) throw input_error("complete_multipartite needs at least one part");
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw input_error("complete_multipartite part sizes must be >= 1");
        n += s;
    }
    std::vector<int> part_of(n);
    int base = 0, part = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i) part_of[base + i] = part;
        base += s;
        ++part;
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.push_back(Edge{u, v});
    return build_graph(n, edges);
}

Graph turan_graph(int n, int k) {
    if (n < 1) throw input_error("turan(n,k) needs n >= 1");
    if (k < 1) throw input_error("turan(n,k) needs k >= 1");
    int parts = std::min(n, k);
    int q = n / parts, s = n % parts;
    std::vector<int> sizes;
    for (int i = 0; i < parts; ++i) sizes.push_back(i < s ? q + 1 : q);
    return complete_multipartite_graph(sizes);
}

Graph petersen_graph() {
    // Kneser(5,2): vertices are 2-subsets of {0..4} in lexicographic order,
    // adjacent iff disjoint.
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    std::vector<Edge> edges;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) edges.push_back(Edge{i, j});
        }
    return build_graph(10, edges);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

} // namespace

Graph gnp_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw input_error("gnp(n,p) needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw input_error("gnp probability must lie in [0, 1]");
    std::vector<Edge> edges;
    std::uint64_t rank = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++rank)
            if (to_unit(splitmix64(seed ^ splitmix64(rank + 1))) < p)
                edges.push_back(Edge{u, v});
    return build_graph(n, edges);
}

namespace {

struct FamilySpec {
    std::string name;
    std::vector<std::string> args;
};

FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    std::size_t i = 0;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        spec.name += text[i++];
    if (spec.name.empty()) throw input_error("empty family spec");
    if (i == text.size()) return spec;
    if (text[i] != '(' || text.back() != ')')
        throw input_error("malformed family spec: " + text);
    std::string arg;
    for (++i; i + 1 < text.size(); ++i) {
        if (text[i] == ',') {
            spec.args.push_back(arg);
            arg.clear();
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            arg += text[i];
        }
    }
    spec.args.push_back(arg);
    return spec;
}

int arg_int(const FamilySpec& s, std::size_t i) {
    int value = 0;
    const std::string& a = s.args.at(i);
    auto [p, ec] = std::from_chars(a.data(), a.data() + a.size(), value);
    if (ec != std::errc{} || p != a.data() + a.size())
        throw input_error("family " + s.name + ": bad integer argument '" + a + "'");
    return value;
}

double arg_real(const FamilySpec& s, std::size_t i) {
    const std::string& a = s.args.at(i);
    try {
        std::size_t pos = 0;
        double value = std::stod(a, &pos);
        if (pos != a.size()) throw std::invalid_argument(a);
        return value;
    } catch (const std::exception&) {
        throw input_error("family " + s.name + ": bad real argument '" + a + "'");
    }
}

void need_args(const FamilySpec& s, std::size_t lo, std::size_t hi) {
    if (s.args.size() < lo || s.args.size() > hi)
        throw input_error("family " + s.name + ": wrong number of arguments");
}

} // namespace

Graph generate(const std::string& family_spec, std::optional<std::uint64_t> default_seed) {
    FamilySpec s = parse_family_spec(family_spec);
    if (s.name == "complete") {
        need_args(s, 1, 1);
        return complete_graph(arg_int(s, 0));
    }
    if (s.name == "cycle") {
        need_args(s, 1, 1);
        return cycle_graph(arg_int(s, 0));
    }
    if (s.name == "path") {
        need_args(s, 1, 1);
        return path_graph(arg_int(s, 0));
    }
    if (s.name == "star") {
        need_args(s, 1, 1);
        return star_graph(arg_int(s, 0));
    }
    if (s.name == "complete_multipartite") {
        need_args(s, 1, 64);
        std::vector<int> sizes;
        for (std::size_t i = 0; i < s.args.size(); ++i) sizes.push_back(arg_int(s, i));
        return complete_multipartite_graph(sizes);
    }
    if (s.name == "turan") {
        need_args(s, 2, 2);
        return turan_graph(arg_int(s, 0), arg_int(s, 1));
    }
    if (s.name == "petersen") {
        need_args(s, 0, 0);
        return petersen_graph();
    }
    if (s.name == "gnp") {
        need_args(s, 2, 3);
        std::uint64_t seed = default_seed.value_or(0);
        if (s.args.size() == 3) seed = static_cast<std::uint64_t>(arg_int(s, 2));
        return gnp_graph(arg_int(s, 0), arg_real(s, 1), seed);
    }
    throw input_error("unknown graph family: " + s.name);
}

} // namespace kcut
