// Command-line workbench: family generators, wcol evaluation, exact
// parameters, minor search, verification suites, and benchmarks.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wcolib/bench.hpp"
#include "wcolib/embedding.hpp"
#include "wcolib/graph_io.hpp"
#include "wcolib/json_io.hpp"
#include "wcolib/suites.hpp"

namespace {

using namespace wcolib;

VertexSet read_vertex_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    VertexSet out;
    Vertex v;
    while (in >> v) out.push_back(v);
    return out;
}

std::vector<Vertex> read_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::vector<Vertex> out;
    Vertex v;
    while (in >> v) out.push_back(v);
    return out;
}

void emit_graph(const Graph& g, const std::string& out_path, const Json& recipe) {
    if (out_path.empty()) {
        std::cout << write_graph(g);
        std::cout << "c recipe " << recipe.dump() << "\n";
    } else {
        save_graph_file(g, out_path);
        std::ofstream side(out_path + ".json");
        side << recipe.dump(2) << "\n";
        std::cout << out_path << "\n";
    }
}

int cmd_gen(const std::string& family, const std::vector<long long>& params,
            long long d_override, const std::string& base_path, const std::string& out) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw BadParams(family + " expects " + std::to_string(k) + " parameter(s)");
    };
    Json recipe;
    recipe["family"] = family;
    Graph g;
    if (family == "kn") {
        need(1);
        g = complete_graph(static_cast<int>(params[0]));
        recipe["params"] = {{"n", params[0]}};
    } else if (family == "kst") {
        need(2);
        g = complete_bipartite(static_cast<int>(params[0]), static_cast<int>(params[1]));
        recipe["params"] = {{"s", params[0]}, {"t", params[1]}};
    } else if (family == "path") {
        need(1);
        g = path_graph(static_cast<int>(params[0]));
        recipe["params"] = {{"n", params[0]}};
    } else if (family == "cycle") {
        need(1);
        g = cycle_graph(static_cast<int>(params[0]));
        recipe["params"] = {{"n", params[0]}};
    } else if (family == "star") {
        need(1);
        auto rooted = star_graph(static_cast<int>(params[0]));
        g = rooted.graph;
        recipe["params"] = {{"leaves", params[0]}};
        recipe["root"] = rooted.root;
    } else if (family == "ladder") {
        need(1);
        g = ladder_graph(static_cast<int>(params[0]));
        recipe["params"] = {{"k", params[0]}};
    } else if (family == "grid") {
        need(2);
        g = grid_graph(static_cast<int>(params[0]), static_cast<int>(params[1]));
        recipe["params"] = {{"rows", params[0]}, {"cols", params[1]}};
    } else if (family == "ternary") {
        need(1);
        auto rooted = ternary_tree(static_cast<int>(params[0]));
        g = rooted.graph;
        recipe["params"] = {{"h", params[0]}};
        recipe["root"] = rooted.root;
    } else if (family == "dary") {
        need(2);
        auto rooted = dary_tree(static_cast<int>(params[0]), static_cast<int>(params[1]));
        g = rooted.graph;
        recipe["params"] = {{"h", params[0]}, {"d", params[1]}};
        recipe["root"] = rooted.root;
    } else if (family == "grohe") {
        need(2);
        auto built = grohe_graph(static_cast<int>(params[0]), static_cast<int>(params[1]),
                                 d_override);
        g = built.graph;
        recipe["params"] = {{"r", params[0]}, {"t", params[1]}};
        if (d_override > 0) {
            recipe["params"]["d_override"] = d_override;
            recipe["scaled"] = true;
        }
    } else if (family == "hkl") {
        need(2);
        auto built = gadget_hkl(static_cast<int>(params[0]), static_cast<int>(params[1]));
        g = built.graph;
        recipe["params"] = {{"k", params[0]}, {"l", params[1]}};
        recipe["markers"] = {{"u", built.u}, {"v", built.v}};
    } else if (family == "tower" || family == "dtower") {
        need(2);
        if (base_path.empty()) throw BadParams(family + " needs --base");
        Graph base = load_graph_file(base_path);
        if (family == "tower") {
            auto rooted = tower(base, static_cast<int>(params[0]), static_cast<int>(params[1]));
            g = rooted.graph;
            recipe["root"] = rooted.root;
        } else {
            auto dt = double_tower(base, static_cast<int>(params[0]), static_cast<int>(params[1]));
            g = dt.graph;
            recipe["root"] = dt.root;
        }
        recipe["params"] = {{"h", params[0]}, {"d", params[1]}};
    } else if (family == "apex") {
        need(0);
        if (base_path.empty()) throw BadParams("apex needs --base");
        auto rooted = apex_join(load_graph_file(base_path));
        g = rooted.graph;
        recipe["root"] = rooted.root;
        recipe["params"] = Json::object();
    } else if (family == "copies") {
        need(1);
        if (base_path.empty()) throw BadParams("copies needs --base");
        g = disjoint_copies(static_cast<int>(params[0]), load_graph_file(base_path));
        recipe["params"] = {{"k", params[0]}};
    } else {
        throw BadParams("unknown family " + family);
    }
    recipe["n"] = g.num_vertices();
    recipe["m"] = g.num_edges();
    emit_graph(g, out, recipe);
    return 0;
}

int cmd_wcol(const std::string& file, int r, bool exact, const std::string& scheme,
             const std::string& ordering_file, const std::string& scope_file, int root,
             long long budget, int dyadic_s) {
    Graph g = load_graph_file(file);
    VertexSet scope = scope_file.empty() ? all_vertices(g) : sorted_unique(read_vertex_list(scope_file));
    WcolCertificate cert;
    if (exact) {
        cert = wcol_exact(g, scope, r, budget);
    } else if (!ordering_file.empty()) {
        Ordering sigma = Ordering::of(read_sequence(ordering_file));
        cert = wcol_of_ordering(g, scope, sigma, r);
    } else if (scheme == "elimination") {
        cert = wcol_of_ordering(g, elimination_ordering(g, root), r);
    } else if (scheme == "dyadic") {
        cert = wcol_of_ordering(g, dyadic_path_ordering(g, r, dyadic_s), r);
    } else if (scheme == "pathwidth") {
        auto pw = treewidth_pathwidth_exact(g, WidthKind::pw);
        cert = wcol_of_ordering(g, pathwidth_ordering(g, std::get<PathDecomposition>(pw.witness), r), r);
    } else {
        throw BadParams("pick one of --exact, --scheme, --ordering");
    }
    std::cout << to_json(cert).dump(2) << "\n";
    return 0;
}

int cmd_params(const std::string& file, const std::string& which) {
    Graph g = load_graph_file(file);
    ParamMemo memo;
    Json out = Json::array();
    std::istringstream ss(which);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name == "td")
            out.push_back(to_json(treedepth(g, &memo)));
        else if (name == "td2")
            out.push_back(to_json(twodepth(g, &memo)));
        else if (name == "rtd2")
            out.push_back(to_json(rooted_twodepth(g, &memo)));
        else if (name == "vc")
            out.push_back(to_json(vertex_cover_number(g)));
        else if (name == "tw")
            out.push_back(to_json(treewidth_pathwidth_exact(g, WidthKind::tw)));
        else if (name == "pw")
            out.push_back(to_json(treewidth_pathwidth_exact(g, WidthKind::pw)));
        else
            throw BadParams("unknown parameter " + name);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_minor(const std::string& pattern_file, const std::string& host_file, long long budget) {
    Graph pattern = load_graph_file(pattern_file);
    Graph host = load_graph_file(host_file);
    auto res = find_model(pattern, host, budget);
    Json j;
    j["nodes"] = res.nodes;
    if (res.status == SearchStatus::found) {
        j["status"] = "found";
        j["model"] = to_json(*res.value);
    } else {
        j["status"] = res.status == SearchStatus::absent ? "absent" : "budget_exhausted";
    }
    std::cout << j.dump(2) << "\n";
    return res.status == SearchStatus::budget_exhausted ? 2 : 0;
}

int cmd_richmodel(const std::string& pattern_file, const std::string& host_file,
                  const std::string& family_file, long long budget) {
    Graph pattern = load_graph_file(pattern_file);
    Graph host = load_graph_file(host_file);
    std::ifstream in(family_file);
    if (!in) throw Error("cannot open " + family_file);
    Json fj = Json::parse(in);
    SubgraphFamily fam = family_from_json(fj);
    if (!validate_family(host, fam)) throw Error("family members must induce connected subgraphs");
    auto res = find_rich_model(pattern, host, fam, budget);
    Json j;
    j["nodes"] = res.nodes;
    if (res.status == SearchStatus::found) {
        j["status"] = "found";
        j["model"] = to_json(*res.value);
    } else {
        j["status"] = res.status == SearchStatus::absent ? "absent" : "budget_exhausted";
    }
    std::cout << j.dump(2) << "\n";
    return res.status == SearchStatus::budget_exhausted ? 2 : 0;
}

Json report_to_json(const SuiteReport& rep) {
    Json j;
    j["suite"] = rep.suite;
    j["seed"] = rep.seed;
    j["cases"] = Json::array();
    for (const auto& c : rep.cases) {
        Json cj;
        cj["description"] = c.description;
        cj["expected"] = c.expected;
        cj["observed"] = c.observed;
        cj["status"] = c.status;
        if (!c.repro.empty()) cj["repro"] = c.repro;
        j["cases"].push_back(cj);
    }
    j["summary"] = {{"pass", rep.count("pass")},
                    {"fail", rep.count("fail")},
                    {"inconclusive", rep.count("inconclusive")}};
    return j;
}

void print_report_table(const SuiteReport& rep) {
    std::cout << "suite " << rep.suite << " (seed " << rep.seed << ")\n";
    for (const auto& c : rep.cases) {
        std::cout << "  [" << c.status << "] " << c.description << " | expected " << c.expected
                  << " | observed " << c.observed << "\n";
    }
    std::cout << "  summary: " << rep.count("pass") << " pass, " << rep.count("fail") << " fail, "
              << rep.count("inconclusive") << " inconclusive\n";
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& json_out,
               bool stretch) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.stretch = stretch;
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);
    Json all = Json::array();
    int fails = 0, inconclusive = 0;
    for (const auto& name : names) {
        SuiteReport rep = run_suite(name, cfg);
        print_report_table(rep);
        all.push_back(report_to_json(rep));
        fails += rep.count("fail");
        inconclusive += rep.count("inconclusive");
        for (const auto& c : rep.cases) {
            if (c.status == "fail" && !c.repro.empty()) {
                std::string path = "repro_" + name + ".txt";
                std::ofstream out(path);
                out << c.repro;
                std::cout << "  counterexample written to " << path << "\n";
            }
        }
    }
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << all.dump(2) << "\n";
    }
    if (fails > 0) return 1;
    if (inconclusive > 0) return 2;
    return 0;
}

int cmd_bench(const std::string& target) {
    auto rep = bench(target);
    Json j;
    j["target"] = rep.target;
    j["cases"] = Json::array();
    std::cout << "bench " << rep.target << "\n";
    for (const auto& c : rep.cases) {
        std::cout << "  " << c.name << ": " << c.outcome << " (" << c.ms << " ms";
        if (c.nodes > 0) std::cout << ", " << c.nodes << " nodes";
        std::cout << ")\n";
        j["cases"].push_back({{"name", c.name}, {"ms", c.ms}, {"nodes", c.nodes}, {"outcome", c.outcome}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_embed(const std::string& file, int r_budget) {
    Graph g = load_graph_file(file);
    auto probe = rtd2_by_embedding(g, r_budget);
    Json j;
    j["t"] = probe.t;
    j["status"] = probe.status;
    j["r"] = probe.found_r;
    j["embedding"] = probe.embedding;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak coloring number and depth-parameter workbench"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    std::string gen_family, gen_out, gen_base;
    std::vector<long long> gen_params;
    long long gen_doverride = 0;
    gen->add_option("family", gen_family)->required();
    gen->add_option("params", gen_params, "integer family parameters");
    gen->add_option("-o,--out", gen_out, "output graph file (sidecar <out>.json recipe)");
    gen->add_option("--base", gen_base, "base graph file for tower/dtower/apex/copies");
    gen->add_option("--d-override", gen_doverride, "scaled-down multiplicity for grohe");

    // wcol
    auto* wc = app.add_subcommand("wcol", "evaluate or search weak coloring numbers");
    std::string wc_file, wc_scheme, wc_ordering, wc_scope;
    int wc_r = 1, wc_root = 0, wc_dyadic_s = -1;
    bool wc_exact = false;
    long long wc_budget = 50'000'000;
    wc->add_option("file", wc_file)->required();
    wc->add_option("-r,--radius", wc_r)->required();
    wc->add_flag("--exact", wc_exact, "branch-and-bound exact search");
    wc->add_option("--scheme", wc_scheme, "elimination | dyadic | pathwidth");
    wc->add_option("--ordering", wc_ordering, "file with a whitespace-separated vertex order");
    wc->add_option("-S,--scope", wc_scope, "file with the ordered scope S");
    wc->add_option("--root", wc_root, "root for the elimination scheme");
    wc->add_option("--budget", wc_budget, "search node budget");
    wc->add_option("--dyadic-s", wc_dyadic_s, "override the dyadic level count");

    // params
    auto* pr = app.add_subcommand("params", "exact graph parameters with witnesses");
    std::string pr_file, pr_which = "td,td2,rtd2,vc,tw,pw";
    pr->add_option("file", pr_file)->required();
    pr->add_option("--which", pr_which, "comma list from td,td2,rtd2,vc,tw,pw");

    // minor
    auto* mn = app.add_subcommand("minor", "search a minor model of pattern in host");
    std::string mn_pattern, mn_host;
    long long mn_budget = 20'000'000;
    mn->add_option("pattern", mn_pattern)->required();
    mn->add_option("host", mn_host)->required();
    mn->add_option("--budget", mn_budget);

    // richmodel
    auto* rm = app.add_subcommand("richmodel", "search an F-rich model");
    std::string rm_pattern, rm_host, rm_family;
    long long rm_budget = 20'000'000;
    rm->add_option("pattern", rm_pattern)->required();
    rm->add_option("host", rm_host)->required();
    rm->add_option("family", rm_family, "JSON array of vertex arrays")->required();
    rm->add_option("--budget", rm_budget);

    // verify
    auto* vf = app.add_subcommand("verify", "run a named verification suite");
    std::string vf_suite, vf_json;
    std::uint64_t vf_seed = 1;
    bool vf_stretch = false;
    vf->add_option("suite", vf_suite, "suite name or 'all'")->required();
    vf->add_option("--seed", vf_seed);
    vf->add_option("--json", vf_json, "write the JSON report here");
    vf->add_flag("--stretch", vf_stretch, "include non-gating large instances");

    // bench
    auto* bn = app.add_subcommand("bench", "timing and node-count statistics");
    std::string bn_target;
    bn->add_option("target", bn_target, "wcol-exact | rtd2 | find-model")->required();

    // embed
    auto* em = app.add_subcommand("embed", "probe rtd2 via subgraph embeddings into G_{r,t}");
    std::string em_file;
    int em_rbudget = 4;
    em->add_option("file", em_file)->required();
    em->add_option("--r-budget", em_rbudget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_family, gen_params, gen_doverride, gen_base, gen_out);
        if (wc->parsed())
            return cmd_wcol(wc_file, wc_r, wc_exact, wc_scheme, wc_ordering, wc_scope, wc_root,
                            wc_budget, wc_dyadic_s);
        if (pr->parsed()) return cmd_params(pr_file, pr_which);
        if (mn->parsed()) return cmd_minor(mn_pattern, mn_host, mn_budget);
        if (rm->parsed()) return cmd_richmodel(rm_pattern, rm_host, rm_family, rm_budget);
        if (vf->parsed()) return cmd_verify(vf_suite, vf_seed, vf_json, vf_stretch);
        if (bn->parsed()) return cmd_bench(bn_target);
        if (em->parsed()) return cmd_embed(em_file, em_rbudget);
    } catch (const BadParams& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const UnknownSuite& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const UnknownTarget& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 3;
}
