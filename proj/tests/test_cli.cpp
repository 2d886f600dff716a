#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "kcut/cli.hpp"
#include "kcut/edge_list.hpp"
#include "kcut/errors.hpp"
#include "kcut/generate.hpp"
#include "kcut/graph.hpp"

using namespace kcut;
using nlohmann::json;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("kcut_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        const std::string full = (path / name).string();
        std::ofstream out(full);
        out << content;
        return full;
    }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = kcut::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("edge list parsing") {
    Graph tri = parse_edge_list("3 3\n0 1\n1 2\n0 2\n");
    CHECK(tri.order() == 3);
    CHECK(tri.edges().size() == 3);

    Graph weighted = parse_edge_list("2 1\n0 1 2.5\n");
    CHECK(weighted.total_weight() == 2.5);

    // comments and blank lines
    Graph commented = parse_edge_list("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n0 2 # tail\n");
    CHECK(commented.edges().size() == 3);

    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n"), doctest::Contains("declared 2"),
                         input_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 1\n1 2\n"), doctest::Contains("found more"),
                         input_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 1\nzap\n"), doctest::Contains("line 2"), input_error);
    CHECK_THROWS_AS(parse_edge_list(""), input_error);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), input_error); // self-loop via build_graph
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1 2.5 9\n"), input_error);
}

TEST_CASE("edge list round trip") {
    Graph g = build_graph(4, {{0, 1, 0.125}, {2, 3}, {1, 3, 7.0}});
    std::ostringstream out;
    write_edge_list(out, g);
    Graph back = parse_edge_list(out.str());
    REQUIRE(back.edges().size() == g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        CHECK(back.edges()[i].u == g.edges()[i].u);
        CHECK(back.edges()[i].v == g.edges()[i].v);
        CHECK(back.edges()[i].w == g.edges()[i].w); // %.17g round-trips doubles
    }
}

TEST_CASE("partition file parsing") {
    std::istringstream good("0 0 1 1 2 2\n");
    auto classes = parse_partition(good, 6);
    REQUIRE(classes.size() == 3);
    CHECK(classes[2] == std::vector<int>{4, 5});

    std::istringstream short_file("0 1\n");
    CHECK_THROWS_AS(parse_partition(short_file, 3), input_error);
    std::istringstream gap("0 2 2\n");
    CHECK_THROWS_AS(parse_partition(gap, 3), input_error);
    std::istringstream junk("0 1 x\n");
    CHECK_THROWS_AS(parse_partition(junk, 3), input_error);
}

TEST_CASE("cli verify emits a certificate") {
    RunResult r = run_cli({"verify", "--chi", "2", "--k", "2", "--h-complete", "3"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["command"] == "verify");
    CHECK(doc["input_digest"].get<std::string>().size() == 16);
    CHECK(doc["payload"]["bound"] == 6.0);
    CHECK(doc["payload"]["exact"] == 6.0);
    CHECK(doc["payload"]["certified"] == true);
    CHECK(doc["payload"]["method"] == "exact");
    CHECK(doc["payload"]["n_g"] == 6);
}

TEST_CASE("cli bound on petersen") {
    TempDir tmp;
    RunResult gen = run_cli({"gen", "--family", "petersen", "--out",
                             (tmp.path / "petersen.el").string()});
    REQUIRE(gen.code == 0);

    RunResult r = run_cli({"bound", "--graph", (tmp.path / "petersen.el").string(), "--k", "2",
                           "--exact"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["payload"]["upper_eigmin"].get<double>() == doctest::Approx(12.5));
    CHECK(doc["payload"]["upper_laplacian"].get<double>() == doctest::Approx(12.5));
    CHECK(doc["payload"]["exact"] == 12.0);
    CHECK(doc["payload"]["floors"]["eigmin"] == 12);
    // integer fields round-trip losslessly
    CHECK(doc["payload"]["k"].get<std::int64_t>() == 2);
}

TEST_CASE("cli bound on an edgeless graph") {
    TempDir tmp;
    const std::string f = tmp.file("empty5.el", "5 0\n");
    RunResult r = run_cli({"bound", "--graph", f, "--k", "3"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["payload"]["upper_eigmin"] == 0.0);
    CHECK(doc["payload"]["upper_laplacian"] == 0.0);
    CHECK(doc["payload"]["upper_trivial"] == 0.0);
    CHECK(doc["payload"]["lower_trivial"] == 0.0);
    CHECK(doc["payload"]["chromatic_lb"] == 1.0);
}

TEST_CASE("cli determinism: same argv, same bytes") {
    TempDir tmp;
    const std::string f = tmp.file("k6.el", [] {
        std::ostringstream s;
        write_edge_list(s, complete_graph(6));
        return s.str();
    }());
    std::vector<std::string> argv{"bound", "--graph", f, "--k", "3", "--exact"};
    RunResult a = run_cli(argv);
    RunResult b = run_cli(argv);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    RunResult s1 = run_cli({"spectrum", "--graph", f});
    RunResult s2 = run_cli({"spectrum", "--graph", f});
    CHECK(s1.out == s2.out);
}

TEST_CASE("cli cut subcommand variants") {
    TempDir tmp;
    std::ostringstream s;
    write_edge_list(s, complete_multipartite_graph({2, 2, 2}));
    const std::string graph = tmp.file("k222.el", s.str());
    const std::string part = tmp.file("classes.txt", "0 0 1 1 2 2\n");

    RunResult exact = run_cli({"cut", "--graph", graph, "--k", "2", "--exact"});
    REQUIRE(exact.code == 0);
    json doc = json::parse(exact.out);
    CHECK(doc["payload"]["method"] == "exact");
    CHECK(doc["payload"]["cut_weight"] == 8.0); // mc_2(K_{2,2,2}) = t_2-like split: 4+4

    RunResult ratio =
        run_cli({"cut", "--graph", graph, "--k", "2", "--ratio", "--r-partition", part});
    REQUIRE(ratio.code == 0);
    json rdoc = json::parse(ratio.out);
    CHECK(rdoc["payload"]["method"] == "ratio");
    CHECK(rdoc["payload"]["cut_weight"] == 8.0);

    RunResult greedy = run_cli({"cut", "--graph", graph, "--k", "2", "--greedy", "--refine"});
    REQUIRE(greedy.code == 0);
    json gdoc = json::parse(greedy.out);
    CHECK(gdoc["payload"]["method"] == "greedy+refine");
    CHECK(gdoc["payload"]["cut_weight"].get<double>() >= 6.0);

    RunResult none = run_cli({"cut", "--graph", graph, "--k", "2"});
    CHECK(none.code == 2);

    RunResult bnd =
        run_cli({"bound", "--graph", graph, "--k", "2", "--r-partition", part});
    REQUIRE(bnd.code == 0);
    json bdoc = json::parse(bnd.out);
    CHECK(bdoc["payload"]["lower_ratio"] == 8.0); // t_2(3)/C(3,2) * 12
}

TEST_CASE("cli gen seeds gnp specs") {
    RunResult a = run_cli({"gen", "--family", "gnp(10,0.5)", "--seed", "42"});
    RunResult b = run_cli({"gen", "--family", "gnp(10,0.5,42)"});
    REQUIRE(a.code == 0);
    json da = json::parse(a.out), db = json::parse(b.out);
    CHECK(da["payload"]["graph"]["edges"] == db["payload"]["graph"]["edges"]);
}

TEST_CASE("cli spectrum payload") {
    TempDir tmp;
    std::ostringstream s;
    write_edge_list(s, complete_graph(4));
    const std::string f = tmp.file("k4.el", s.str());
    RunResult r = run_cli({"spectrum", "--graph", f});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    auto adj = doc["payload"]["adjacency"];
    REQUIRE(adj.size() == 4);
    CHECK(adj[0].get<double>() == doctest::Approx(-1.0));
    CHECK(adj[3].get<double>() == doctest::Approx(3.0));
    CHECK(doc["payload"]["lambda_max"].get<double>() == doctest::Approx(4.0));
    CHECK(doc["payload"]["tol"].get<double>() <= 1e-10);
}

TEST_CASE("cli gen and construct write edge-list files") {
    TempDir tmp;
    const std::string out = (tmp.path / "t53.el").string();
    RunResult gen = run_cli({"gen", "--family", "turan(5,3)", "--out", out});
    REQUIRE(gen.code == 0);
    Graph back = read_edge_list_file(out);
    CHECK(back.order() == 5);
    CHECK(back.edges().size() == 8);

    const std::string gout = (tmp.path / "g.el").string();
    RunResult cons = run_cli({"construct", "--chi", "2", "--k", "2", "--h-complete", "3",
                              "--out", gout});
    REQUIRE(cons.code == 0);
    json doc = json::parse(cons.out);
    CHECK(doc["payload"]["t"] == 2);
    CHECK(doc["payload"]["graph"]["n"] == 6);
    Graph g = read_edge_list_file(gout);
    CHECK(g.edges().size() == 6);

    // without --out the edges are inlined
    RunResult inl = run_cli({"gen", "--family", "complete(3)"});
    json idoc = json::parse(inl.out);
    REQUIRE(idoc["payload"]["graph"]["edges"].size() == 3);
}

TEST_CASE("cli exit codes") {
    TempDir tmp;
    RunResult unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(!unknown.err.empty());

    RunResult badflag = run_cli({"bound", "--graph", "x.el", "--k", "2", "--wat"});
    CHECK(badflag.code == 2);

    RunResult missing = run_cli({"bound", "--graph", (tmp.path / "nope.el").string(), "--k", "2"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    std::ostringstream s;
    write_edge_list(s, complete_graph(12));
    const std::string f = tmp.file("k12.el", s.str());
    RunResult refused = run_cli({"cut", "--graph", f, "--k", "2", "--exact", "--budget", "10"});
    CHECK(refused.code == 3);
    CHECK(refused.err.find("budget") != std::string::npos);

    RunResult badk = run_cli({"bound", "--graph", f, "--k", "1"});
    CHECK(badk.code == 2);

    // verify propagates construction failures as input errors
    RunResult badchi = run_cli({"verify", "--chi", "3", "--k", "2", "--h-complete", "4"});
    CHECK(badchi.code == 2);
}
