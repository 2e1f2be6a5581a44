// cdsenum: enumerate minimal connected dominating sets, generate the
// lower-bound and hardness families, and reproduce the branching analysis.
//
// Exit codes: 0 success, 2 bad input or parse failure, 3 disconnected
// input graph, 4 resource budget exceeded.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cds/analysis.hpp"
#include "cds/engine.hpp"
#include "cds/generators.hpp"
#include "cds/graph_io.hpp"
#include "cds/measure.hpp"
#include "cds/oracle.hpp"

using json = nlohmann::json;

namespace {

struct RunReport {
    std::string command;
    std::string input;
    json parameters = json::object();
    std::uint64_t solution_count = 0;
    double elapsed_ms = 0.0;
    std::uint64_t nodes = 0;
    json rule_counters = json::object();
    bool listing = false;

    void print(bool as_json) const {
        if (as_json) {
            json j{{"schema", "cdsenum-report/1"},
                   {"command", command},
                   {"input", input},
                   {"parameters", parameters},
                   {"solutions", solution_count},
                   {"elapsed_ms", elapsed_ms},
                   {"nodes", nodes},
                   {"rules", rule_counters},
                   {"listing", listing}};
            std::cerr << j.dump() << "\n";
            return;
        }
        std::cerr << "command: " << command << "\n";
        if (!input.empty()) std::cerr << "input: " << input << "\n";
        for (auto& [k, v] : parameters.items())
            std::cerr << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        std::cerr << "solutions: " << solution_count << "\n";
        std::cerr << "nodes: " << nodes << "\n";
        if (!rule_counters.empty()) {
            std::cerr << "rules:";
            for (auto& [k, v] : rule_counters.items()) std::cerr << ' ' << k << '=' << v.dump();
            std::cerr << "\n";
        }
        std::cerr << std::fixed << std::setprecision(2) << "elapsed_ms: " << elapsed_ms << "\n";
    }
};

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

cds::DimacsGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cds::input_error("cannot open '" + path + "'");
    return cds::read_dimacs(in);
}

void emit_solutions(std::vector<cds::VertexSet> sols) {
    std::sort(sols.begin(), sols.end());
    for (const auto& s : sols) {
        bool first = true;
        for (int v : s) {
            if (!first) std::cout << ' ';
            std::cout << v + 1;
            first = false;
        }
        std::cout << '\n';
    }
}

json rule_counters_json(const cds::SearchStats& st) {
    json j = json::object();
    for (int r = 0; r < cds::kRuleCount; ++r)
        if (st.rule_applications[r] > 0)
            j[cds::rule_name(static_cast<cds::Rule>(r))] = st.rule_applications[r];
    j["leaves"] = st.leaves;
    j["prunes"] = st.prunes;
    return j;
}

int run_enumerate(const std::string& path, const std::string& engine, bool list, bool as_json) {
    Timer timer;
    auto [graph, u] = load_graph(path);
    RunReport rep;
    rep.command = list ? "enumerate" : "count";
    rep.input = path;
    rep.parameters["engine"] = engine;
    rep.parameters["n"] = graph.order();
    rep.parameters["m"] = graph.edge_count();
    rep.listing = list;
    std::vector<cds::VertexSet> sols;
    if (engine == "branching") {
        cds::SearchStats st;
        cds::EnumerateOptions opts;
        opts.stats = &st;
        sols = cds::enumerate_collect(graph, opts);
        rep.nodes = st.nodes;
        rep.rule_counters = rule_counters_json(st);
    } else {
        sols = cds::enumerate_bruteforce(graph);
        rep.nodes = std::uint64_t{1} << graph.order();
    }
    rep.solution_count = sols.size();
    if (list) emit_solutions(std::move(sols));
    rep.elapsed_ms = timer.ms();
    rep.print(as_json);
    return 0;
}

int run_extend(const std::string& path, std::vector<int> u_ids, bool u_given,
               std::uint64_t budget, bool as_json) {
    Timer timer;
    auto [graph, file_u] = load_graph(path);
    cds::VertexSet u;
    if (u_given) {
        for (int& v : u_ids) v -= 1; // wire format is 1-based
        u = cds::VertexSet(std::move(u_ids));
    } else if (file_u) {
        u = *file_u;
    }
    cds::check_vertex_set(graph, u);
    RunReport rep;
    rep.command = "extend";
    rep.input = path;
    rep.parameters["u_size"] = u.size();
    rep.parameters["budget"] = budget;
    cds::VertexSet witness;
    bool yes;
    try {
        yes = cds::extension_exists(graph, u, budget, &witness);
    } catch (const cds::budget_error&) {
        std::cout << "unknown\n";
        throw;
    }
    std::cout << (yes ? "yes" : "no") << '\n';
    if (yes) emit_solutions({witness});
    rep.solution_count = yes ? 1 : 0;
    rep.elapsed_ms = timer.ms();
    rep.print(as_json);
    return 0;
}

void write_graph_output(const cds::Graph& g, const std::optional<cds::VertexSet>& u,
                        const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        cds::write_dimacs(std::cout, g, u);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw cds::input_error("cannot open '" + out_path + "' for writing");
    cds::write_dimacs(out, g, u);
}

int run_analyze(const std::string& mode_name, double alpha, double beta, double delta,
                bool optimize, bool as_json) {
    Timer timer;
    using namespace cds;
    AnalysisMode mode = mode_name == "2deg" ? AnalysisMode::TwoDegenerate : AnalysisMode::General;
    WeightSet w{alpha, mode == AnalysisMode::TwoDegenerate ? 1.0 : beta, delta};
    auto rows = mode == AnalysisMode::TwoDegenerate ? catalog_2degenerate(w) : catalog_general(w);

    json jrows = json::array();
    double worst = 1.0;
    bool all_ok = true;
    std::ostringstream table;
    table << std::left << std::setw(38) << "rule" << std::setw(46) << "vector"
          << std::setw(12) << "number" << std::setw(10) << "bound" << "status\n";
    for (const auto& row : rows) {
        double num = row.number();
        if (row.in_max) worst = std::max(worst, num);
        bool ok = row.holds();
        all_ok &= ok;
        std::ostringstream vec;
        vec << '(' << std::setprecision(6);
        for (std::size_t i = 0; i < row.vec.decreases.size(); ++i)
            vec << (i ? ", " : "") << row.vec.decreases[i];
        vec << ')';
        table << std::left << std::setw(38) << row.vec.label << std::setw(46) << vec.str()
              << std::setw(12) << std::setprecision(8) << num << std::setw(10)
              << std::setprecision(6) << row.bound << (ok ? "pass" : "FAIL") << "\n";
        jrows.push_back({{"rule", row.vec.label},
                         {"vector", row.vec.decreases},
                         {"number", num},
                         {"bound", row.bound},
                         {"kind", row.kind == BoundKind::Less ? "<" : "="},
                         {"pass", ok}});
    }
    json jout{{"schema", "cdsenum-analyze/1"},
              {"mode", mode_name},
              {"weights", {{"alpha", w.alpha}, {"beta", w.beta}, {"delta", w.delta}}},
              {"rows", jrows},
              {"max", worst},
              {"all_bounds_hold", all_ok}};
    if (optimize) {
        OptimizeResult opt = optimize_weights(mode);
        jout["optimum"] = {{"alpha", opt.weights.alpha},
                           {"beta", opt.weights.beta},
                           {"delta", opt.weights.delta},
                           {"value", opt.value}};
        table << std::setprecision(8) << "optimized: value " << opt.value << " at alpha="
              << opt.weights.alpha << " beta=" << opt.weights.beta
              << " delta=" << opt.weights.delta << "\n";
    }
    table << std::setprecision(8) << "catalog max: " << worst
          << (all_ok ? "  (all bounds hold)" : "  (BOUND VIOLATION)") << "\n";
    if (as_json)
        std::cout << jout.dump(2) << "\n";
    else
        std::cout << table.str();
    RunReport rep;
    rep.command = "analyze";
    rep.parameters = {{"mode", mode_name}, {"alpha", w.alpha}, {"beta", w.beta}, {"delta", w.delta}};
    rep.elapsed_ms = timer.ms();
    rep.print(as_json);
    return all_ok ? 0 : 1;
}

// Fast subset of the acceptance checks.
int run_verify() {
    using namespace cds;
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        bool ok = true;
        for (int i = 0; i < 40 && ok; ++i) {
            Graph g = gen_random_degenerate(8 + (i % 4), 1 + (i % 4), 77 + i);
            auto a = enumerate_collect(g);
            std::sort(a.begin(), a.end());
            ok = a == enumerate_bruteforce(g);
        }
        report("branching enumerator matches brute force on 40 random graphs", ok);
    }
    {
        auto g = gen_base_gt(2, true);
        auto all = enumerate_bruteforce(g);
        int xhit = 0;
        for (const auto& s : all) {
            bool hit = false;
            for (int v : s) hit |= v < 2;
            xhit += hit;
        }
        report("base block t=2 has 4 X-hitting minimal CDS", xhit == 4);
        auto [g22, hub] = gen_gtk(2, 2);
        report("composed family (2,2) has 16 minimal CDS", enumerate_collect(g22).size() == 16);
    }
    {
        Formula f{3, {{{1, 2, 3}}}};
        auto [g, u] = gen_sat_gadget(f);
        bool ok = g.order() == 19 && g.edge_count() == 26 && degeneracy(g).degeneracy <= 2;
        report("satisfiability gadget sizes and degeneracy", ok);
        report("satisfiable formula admits an extension", extension_exists(g, u));
    }
    {
        std::vector<VertexSet> sets{{0, 1, 2}, {0, 1}, {1, 2}, {2}};
        auto hs = minimal_hitting_sets(3, sets, {});
        auto [g, u] = gen_hs_split(3, sets, {});
        auto sols = enumerate_bruteforce(g);
        report("split graph solutions equal minimal hitting sets", sols == hs.sets);
    }
    {
        bool ok = true;
        for (const auto& row : catalog_2degenerate(kWeights2Degenerate)) ok &= row.holds();
        for (const auto& row : catalog_general(kWeightsGeneral)) ok &= row.holds();
        ok &= catalog_max(AnalysisMode::TwoDegenerate, kWeights2Degenerate) < 1.9767;
        ok &= catalog_max(AnalysisMode::General, kWeightsGeneral) < 1.9896;
        report("branching-vector catalogs meet their bounds", ok);
    }
    std::cout << (failures ? "verify: FAILED\n" : "verify: ok\n");
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal connected dominating set toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // let subcommands hand --json up to the app
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable reports");

    std::string path, engine = "branching";
    auto* cmd_enum = app.add_subcommand("enumerate", "list all minimal CDS of a DIMACS graph");
    cmd_enum->add_option("graph", path, "DIMACS edge file")->required();
    cmd_enum->add_option("--engine", engine, "branching|bruteforce")
        ->check(CLI::IsMember({"branching", "bruteforce"}));

    std::string cpath;
    std::string cengine = "branching";
    auto* cmd_count = app.add_subcommand("count", "count minimal CDS without listing");
    cmd_count->add_option("graph", cpath, "DIMACS edge file")->required();
    cmd_count->add_option("--engine", cengine, "branching|bruteforce")
        ->check(CLI::IsMember({"branching", "bruteforce"}));

    std::string epath;
    std::vector<int> u_ids;
    std::uint64_t budget = cds::kDefaultBudget;
    auto* cmd_extend = app.add_subcommand("extend", "does a minimal CDS extend U?");
    cmd_extend->add_option("graph", epath, "DIMACS edge file")->required();
    auto* u_opt = cmd_extend->add_option("--u", u_ids, "1-based required vertices (default: c U line)");
    cmd_extend->add_option("--budget", budget, "work budget before giving up");

    auto* cmd_gen = app.add_subcommand("generate", "write a generated DIMACS graph");
    cmd_gen->require_subcommand(1);
    std::string out_path;
    int gt_t = 4, gtk_t = 4, gtk_k = 2, rnd_n = 30, rnd_d = 2;
    bool no_clique = false;
    std::uint64_t rnd_seed = 1;
    std::string cnf_path, hs_path;
    std::vector<int> hs_u;
    auto* gen_gt = cmd_gen->add_subcommand("gt", "base lower-bound block");
    gen_gt->add_option("--t", gt_t, "layer size")->required();
    gen_gt->add_flag("--no-clique-x", no_clique, "leave the X layer independent");
    gen_gt->add_option("-o,--output", out_path, "output path (default stdout)");
    auto* gen_gtk_cmd = cmd_gen->add_subcommand("gtk", "composed lower-bound family");
    gen_gtk_cmd->add_option("--t", gtk_t, "layer size")->required();
    gen_gtk_cmd->add_option("--k", gtk_k, "number of copies")->required();
    gen_gtk_cmd->add_option("-o,--output", out_path, "output path (default stdout)");
    auto* gen_sat = cmd_gen->add_subcommand("sat", "extension gadget from a DIMACS cnf");
    gen_sat->add_option("--cnf", cnf_path, "DIMACS cnf file")->required();
    gen_sat->add_option("-o,--output", out_path, "output path (default stdout)");
    auto* gen_hs = cmd_gen->add_subcommand("hssplit", "split graph of a hypergraph");
    gen_hs->add_option("--hs", hs_path, "hypergraph file (h <ground> <m> header)")->required();
    gen_hs->add_option("--u", hs_u, "0-based extension elements (hypergraph id space)");
    gen_hs->add_option("-o,--output", out_path, "output path (default stdout)");
    auto* gen_rnd = cmd_gen->add_subcommand("random", "random connected low-degeneracy graph");
    gen_rnd->add_option("--n", rnd_n, "vertices")->required();
    gen_rnd->add_option("--d", rnd_d, "degeneracy bound")->required();
    gen_rnd->add_option("--seed", rnd_seed, "rng seed")->required();
    gen_rnd->add_option("-o,--output", out_path, "output path (default stdout)");

    std::string mode = "general";
    double alpha = -1, beta = -1, delta = -1;
    bool optimize = false;
    auto* cmd_analyze = app.add_subcommand("analyze", "branching-vector catalog and weights");
    cmd_analyze->add_option("--mode", mode, "2deg|general")
        ->check(CLI::IsMember({"2deg", "general"}));
    cmd_analyze->add_option("--alpha", alpha, "weight of undominated discarded vertices");
    cmd_analyze->add_option("--beta", beta, "weight of dominated undecided vertices");
    cmd_analyze->add_option("--delta", delta, "weight per solution component");
    cmd_analyze->add_flag("--optimize", optimize, "search for minimizing weights");

    auto* cmd_verify = app.add_subcommand("verify", "run the fast self-checks");

    try {
        app.parse(argc, argv);

        if (*cmd_enum) return run_enumerate(path, engine, true, as_json);
        if (*cmd_count) return run_enumerate(cpath, cengine, false, as_json);
        if (*cmd_extend) return run_extend(epath, u_ids, u_opt->count() > 0, budget, as_json);
        if (*cmd_verify) return run_verify();
        if (*cmd_analyze) {
            if (mode == "2deg") {
                if (alpha < 0) alpha = cds::kWeights2Degenerate.alpha;
                if (delta < 0) delta = cds::kWeights2Degenerate.delta;
                beta = 1.0;
            } else {
                if (alpha < 0) alpha = cds::kWeightsGeneral.alpha;
                if (beta < 0) beta = cds::kWeightsGeneral.beta;
                if (delta < 0) delta = cds::kWeightsGeneral.delta;
            }
            return run_analyze(mode, alpha, beta, delta, optimize, as_json);
        }
        if (*cmd_gen) {
            Timer timer;
            cds::Graph g;
            std::optional<cds::VertexSet> u;
            std::string family;
            if (*gen_gt) {
                family = "gt";
                g = cds::gen_base_gt(gt_t, !no_clique);
            } else if (*gen_gtk_cmd) {
                family = "gtk";
                g = cds::gen_gtk(gtk_t, gtk_k).first;
            } else if (*gen_sat) {
                family = "sat";
                std::ifstream in(cnf_path);
                if (!in) throw cds::input_error("cannot open '" + cnf_path + "'");
                auto [gg, uu] = cds::gen_sat_gadget(cds::read_dimacs_cnf(in));
                g = std::move(gg);
                u = std::move(uu);
            } else if (*gen_hs) {
                family = "hssplit";
                std::ifstream in(hs_path);
                if (!in) throw cds::input_error("cannot open '" + hs_path + "'");
                cds::HitSystem hs = cds::read_hit_system(in);
                auto [gg, uu] = cds::gen_hs_split(hs.ground, hs.sets, cds::VertexSet(hs_u));
                g = std::move(gg);
                u = std::move(uu);
            } else {
                family = "random";
                g = cds::gen_random_degenerate(rnd_n, rnd_d, rnd_seed);
            }
            write_graph_output(g, u, out_path);
            RunReport rep;
            rep.command = "generate " + family;
            rep.parameters["n"] = g.order();
            rep.parameters["m"] = g.edge_count();
            rep.elapsed_ms = timer.ms();
            rep.print(as_json);
            return 0;
        }
        throw cds::input_error("no command given");
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    } catch (const cds::disconnected_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cds::budget_error& e) {
        std::cerr << "error (budget): " << e.what() << "\n";
        return 4;
    } catch (const cds::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
