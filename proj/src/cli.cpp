#include "kcut/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "kcut/bounds.hpp"
#include "kcut/edge_list.hpp"
#include "kcut/errors.hpp"
#include "kcut/extremal.hpp"
#include "kcut/generate.hpp"
#include "kcut/graph.hpp"
#include "kcut/report.hpp"
#include "kcut/solvers.hpp"
#include "kcut/spectra.hpp"

namespace kcut {

namespace {

void emit(std::ostream& out, const std::string& command, const Graph& subject,
          JsonValue payload) {
    make_report(command, graph_digest(subject), std::move(payload)).dump(out);
    out << '\n';
}

struct CommonArgs {
    std::string graph_file;
    int k = 2;
    std::uint64_t budget = default_enumeration_budget;
    std::string r_partition_file;
    bool exact = false;
    bool greedy = false;
    bool ratio = false;
    bool refine = false;
    std::string family;
    std::uint64_t seed = 0;
    std::string out_file;
    int chi = 2;
    std::string h_file;
    int h_complete = 0;
    bool json = true;
};

Graph load_h(const CommonArgs& a) {
    if (!a.h_file.empty()) return read_edge_list_file(a.h_file);
    return complete_graph(a.h_complete);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral bounds, exact solvers and equality certificates for max k-cut"};
    app.require_subcommand(1);
    CommonArgs a;

    auto* bound = app.add_subcommand("bound", "Upper and lower bounds for one (graph, k) query");
    bound->add_option("--graph", a.graph_file, "edge-list file")->required();
    bound->add_option("--k", a.k, "number of classes")->required();
    bound->add_flag("--exact", a.exact, "also solve exactly when within budget");
    bound->add_option("--budget", a.budget, "max assignments to enumerate");
    bound->add_option("--r-partition", a.r_partition_file,
                      "r-partition witness file enabling the ratio lower bound");
    bound->add_flag("--json", a.json, "JSON output (the default and only mode)");

    auto* cut = app.add_subcommand("cut", "Produce a k-cut witness");
    cut->add_option("--graph", a.graph_file, "edge-list file")->required();
    cut->add_option("--k", a.k, "number of classes")->required();
    auto* cut_exact = cut->add_flag("--exact", a.exact, "exact enumeration");
    auto* cut_greedy = cut->add_flag("--greedy", a.greedy, "guaranteed greedy placement");
    auto* cut_ratio = cut->add_flag("--ratio", a.ratio, "balanced ratio cut via an r-partition");
    cut_exact->excludes(cut_greedy, cut_ratio);
    cut_greedy->excludes(cut_ratio);
    cut->add_option("--r-partition", a.r_partition_file, "r-partition witness file");
    cut->add_flag("--refine", a.refine, "polish the cut by local search");
    cut->add_option("--budget", a.budget, "max assignments to enumerate");
    cut->add_flag("--json", a.json, "JSON output (the default and only mode)");

    auto* spectrum = app.add_subcommand("spectrum", "Adjacency and Laplacian spectra");
    spectrum->add_option("--graph", a.graph_file, "edge-list file")->required();
    spectrum->add_flag("--json", a.json, "JSON output (the default and only mode)");

    auto* construct = app.add_subcommand("construct", "Build an equality-forcing graph");
    construct->add_option("--chi", a.chi, "clique/chromatic parameter")->required();
    construct->add_option("--k", a.k, "number of classes")->required();
    auto* hf = construct->add_option("--h-file", a.h_file, "edge-list file for H");
    auto* hc = construct->add_option("--h-complete", a.h_complete, "use H = K_N");
    hf->excludes(hc);
    construct->add_option("--out", a.out_file, "write the constructed graph here");
    construct->add_flag("--json", a.json, "JSON output (the default and only mode)");

    auto* verify = app.add_subcommand("verify", "Certify equality in the eigenvalue bound");
    verify->add_option("--chi", a.chi, "clique/chromatic parameter")->required();
    verify->add_option("--k", a.k, "number of classes")->required();
    auto* vhf = verify->add_option("--h-file", a.h_file, "edge-list file for H");
    auto* vhc = verify->add_option("--h-complete", a.h_complete, "use H = K_N");
    vhf->excludes(vhc);
    verify->add_option("--budget", a.budget, "max assignments to enumerate");
    verify->add_flag("--json", a.json, "JSON output (the default and only mode)");

    auto* gen = app.add_subcommand("gen", "Generate a named-family graph");
    gen->add_option("--family", a.family, "family spec, e.g. turan(5,3) or gnp(10,0.5)")
        ->required();
    gen->add_option("--seed", a.seed, "seed for gnp specs without one");
    gen->add_option("--out", a.out_file, "write the graph here");
    gen->add_flag("--json", a.json, "JSON output (the default and only mode)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (bound->parsed()) {
            Graph g = read_edge_list_file(a.graph_file);
            BoundOptions options;
            options.compute_exact = a.exact;
            options.budget = a.budget;
            if (!a.r_partition_file.empty())
                options.r_partition = read_partition_file(a.r_partition_file, g.order());
            emit(out, "bound", g, bound_report_json(bound_report(g, a.k, options)));
        } else if (cut->parsed()) {
            if (!a.exact && !a.greedy && !a.ratio)
                throw input_error("cut needs one of --exact, --greedy, --ratio");
            Graph g = read_edge_list_file(a.graph_file);
            CutPartition p;
            std::string method;
            if (a.exact) {
                p = exact_max_kcut(g, a.k, a.budget);
                method = "exact";
            } else if (a.greedy) {
                p = greedy_kcut(g, a.k);
                method = "greedy";
            } else {
                if (a.r_partition_file.empty())
                    throw input_error("--ratio needs --r-partition");
                auto classes = read_partition_file(a.r_partition_file, g.order());
                p = rpartite_ratio_cut(g, classes, a.k);
                method = "ratio";
            }
            if (a.refine) {
                p = local_search_refine(g, p);
                method += "+refine";
            }
            emit(out, "cut", g, cut_json(p, method));
        } else if (spectrum->parsed()) {
            Graph g = read_edge_list_file(a.graph_file);
            emit(out, "spectrum", g, spectrum_json(g));
        } else if (construct->parsed()) {
            if (a.h_file.empty() && a.h_complete == 0)
                throw input_error("construct needs --h-file or --h-complete");
            Graph h = load_h(a);
            Graph g = construct_equality_graph(a.chi, a.k, h);
            JsonValue payload = JsonValue::object();
            payload.set("chi", a.chi);
            payload.set("k", a.k);
            payload.set("t", static_cast<std::int64_t>(std::llround(h.weighted_degrees()[0])));
            if (!a.out_file.empty()) {
                write_edge_list_file(a.out_file, g);
                payload.set("out", a.out_file);
            }
            payload.set("graph", graph_json(g, a.out_file.empty()));
            emit(out, "construct", h, std::move(payload));
        } else if (verify->parsed()) {
            if (a.h_file.empty() && a.h_complete == 0)
                throw input_error("verify needs --h-file or --h-complete");
            Graph h = load_h(a);
            EqualityReport rep = verify_equality(a.chi, a.k, h, a.budget);
            emit(out, "verify", h, equality_report_json(rep));
        } else if (gen->parsed()) {
            Graph g = generate(a.family, a.seed);
            JsonValue payload = JsonValue::object();
            payload.set("family", a.family);
            if (!a.out_file.empty()) {
                write_edge_list_file(a.out_file, g);
                payload.set("out", a.out_file);
            }
            payload.set("graph", graph_json(g, a.out_file.empty()));
            emit(out, "gen", g, std::move(payload));
        }
    } catch (const budget_error& e) {
        err << "budget refusal: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace kcut
