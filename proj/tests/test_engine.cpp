#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "cds/engine.hpp"
#include "cds/measure.hpp"
#include "cds/oracle.hpp"
#include "support/graph_corpus.hpp"

using namespace cds;

namespace {
Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

const Status Vn = Status::UndecidedUndominated;
const Status Vd = Status::UndecidedDominated;
const Status On = Status::OutUndominated;
const Status Od = Status::OutDominated;
const Status In = Status::InSolution;
} // namespace

TEST_CASE("initial branches") {
    SECTION("star with universal center") {
        Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
        InitialBranches ib = initial_branches(star);
        CHECK(ib.singleton_solutions == std::vector<VertexSet>{VertexSet{0}});
        REQUIRE(ib.roots.size() == 3);
        for (std::size_t i = 0; i < ib.roots.size(); ++i)
            CHECK(ib.roots[i].solution() == bit(static_cast<int>(i) + 1));
    }
    SECTION("cycle has no universal vertex") {
        InitialBranches ib = initial_branches(cycle(4));
        CHECK(ib.singleton_solutions.empty());
        CHECK(ib.roots.size() == 4);
    }
    SECTION("path") {
        InitialBranches ib = initial_branches(path3());
        CHECK(ib.singleton_solutions == std::vector<VertexSet>{VertexSet{1}});
        REQUIRE(ib.roots.size() == 2);
        CHECK(ib.roots[0].solution() == bit(0));
        CHECK(ib.roots[1].solution() == bit(2));
        // root 2 discards 0 undominated, 1 dominated
        CHECK(ib.roots[1].status(0) == On);
        CHECK(ib.roots[1].status(1) == Od);
    }
    SECTION("guards") {
        CHECK_THROWS_AS(initial_branches(Graph(2, {})), disconnected_error);
    }
}

TEST_CASE("next_step picks the first applicable rule") {
    SECTION("R5 forces the single way to dominate") {
        Graph g = path3();
        Instance inst = Instance::root(g, 0); // S={0}, 1 dominated, 2 not
        Decision d = next_step(inst);
        CHECK(d.kind == DecisionKind::Reduce);
        CHECK(d.rule == Rule::R5);
        CHECK(d.v1 == 1);
    }
    SECTION("B2 on a vertex between two components") {
        Graph g = path3();
        Status st[] = {In, Vd, In};
        Instance inst = Instance::from_status(g, st);
        CHECK(inst.component_count() == 2);
        Decision d = next_step(inst);
        CHECK(d.rule == Rule::B2);
        CHECK(d.u == 1);
    }
    SECTION("B5 on the cycle root") {
        Graph g = cycle(4);
        Instance inst = Instance::root(g, 0);
        Decision d = next_step(inst);
        CHECK(d.rule == Rule::B5);
        CHECK(d.u == 2);
        CHECK(d.v1 == 1);
        CHECK(d.v2 == 3);
    }
    SECTION("R3 deletes an edge between two discarded undominated vertices") {
        Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        Status st[] = {On, On, Od, In};
        Instance inst = Instance::from_status(g, st);
        Decision d = next_step(inst);
        REQUIRE(d.rule == Rule::R3);
        REQUIRE(d.branches.size() == 1);
        CHECK(d.branches[0].delete_edge == std::pair{0, 1});
    }
    SECTION("B1 before anything else for a dominated vertex with O_n neighbors") {
        Graph g = path3();
        Status st[] = {In, Vd, On};
        Instance inst = Instance::from_status(g, st);
        Decision d = next_step(inst);
        CHECK(d.rule == Rule::B1);
        CHECK(d.u == 1);
    }
}

TEST_CASE("expand") {
    SECTION("B2 children update the component count") {
        Graph g = path3();
        Status st[] = {In, Vd, In};
        Instance inst = Instance::from_status(g, st);
        Decision d = next_step(inst);
        REQUIRE(d.rule == Rule::B2);
        auto kids = expand(inst, d);
        REQUIRE(kids.size() == 2);
        CHECK(kids[0].status(1) == Od);
        CHECK(kids[0].component_count() == 2);
        CHECK(kids[1].status(1) == In);
        CHECK(kids[1].component_count() == 1);
    }
    SECTION("R1 only deletes the edge") {
        Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        Status st[] = {In, Vd, Vd, Vn};
        Instance inst = Instance::from_status(g, st);
        Decision d = next_step(inst);
        REQUIRE(d.rule == Rule::R1);
        auto kids = expand(inst, d);
        REQUIRE(kids.size() == 1);
        for (int v = 0; v < 4; ++v) CHECK(kids[0].status(v) == inst.status(v));
        CHECK((kids[0].work_adjacency(1) & bit(2)) == 0);
        CHECK((inst.work_adjacency(1) & bit(2)) != 0);
    }
    SECTION("B5 on the cycle root yields the four documented children") {
        Graph g = cycle(4);
        Instance inst = Instance::root(g, 0);
        Decision d = next_step(inst);
        REQUIRE(d.rule == Rule::B5);
        auto kids = expand(inst, d);
        REQUIRE(kids.size() == 4);
        // (u, v1[, v2]) = (2, 1, 3)
        CHECK((kids[0].status(2) == Od && kids[0].status(1) == In));
        CHECK((kids[1].status(2) == Od && kids[1].status(1) == Od && kids[1].status(3) == In));
        CHECK((kids[2].status(2) == In && kids[2].status(1) == In));
        CHECK((kids[3].status(2) == In && kids[3].status(1) == Od && kids[3].status(3) == In));
    }
}

TEST_CASE("leaf_emit") {
    Graph c4 = cycle(4);
    SECTION("emits a minimal solution") {
        Status st[] = {In, In, Od, Od};
        Instance inst = Instance::from_status(c4, st);
        REQUIRE(next_step(inst).kind == DecisionKind::Leaf);
        auto sol = leaf_emit(inst);
        REQUIRE(sol.has_value());
        CHECK(*sol == VertexSet{0, 1});
    }
    SECTION("rejects a disconnected solution") {
        Status st[] = {In, Od, In, Od};
        Instance inst = Instance::from_status(c4, st);
        CHECK(!leaf_emit(inst).has_value());
    }
    SECTION("rejects a non-minimal solution") {
        Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
        Status st[] = {Od, In, In, Od};
        Instance inst = Instance::from_status(p4, st);
        // {1,2} is a minimal CDS of the path, fine
        CHECK(leaf_emit(inst).has_value());
        Status st2[] = {In, In, In, Od};
        Instance inst2 = Instance::from_status(p4, st2);
        CHECK(!leaf_emit(inst2).has_value()); // contains {1,2}
    }
    SECTION("rejects a violated commitment") {
        Status st[] = {In, In, Od, Od};
        Instance inst = Instance::from_status(c4, st);
        inst.add_commitment(bit(3)); // 3 was discarded
        CHECK(!leaf_emit(inst).has_value());
    }
}

TEST_CASE("enumerate on small named graphs") {
    CHECK(enumerate_collect(path3()) == std::vector<VertexSet>{VertexSet{1}});
    auto sols = enumerate_collect(cycle(4));
    std::sort(sols.begin(), sols.end());
    std::vector<VertexSet> want{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    std::sort(want.begin(), want.end());
    CHECK(sols == want);
}

TEST_CASE("enumerate matches the oracle on every small connected graph") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : corpus::all_connected_graphs(n)) {
            auto engine = enumerate_collect(g);
            std::sort(engine.begin(), engine.end());
            bool dup = std::adjacent_find(engine.begin(), engine.end()) != engine.end();
            auto oracle = enumerate_bruteforce(g);
            if (dup || engine != oracle) {
                CAPTURE(n, g.edges());
                REQUIRE(!dup);
                REQUIRE(engine == oracle);
            }
        }
    }
    SUCCEED();
}

TEST_CASE("status transitions are one-way") {
    Graph g = cycle(4);
    Instance inst = Instance::root(g, 2); // 0,1 discarded
    CHECK_THROWS_AS(inst.to_solution(0), internal_error);
    Status st[] = {In, Vd, Vn, Vd};
    Instance inst2 = Instance::from_status(g, st);
    CHECK_THROWS_AS(inst2.to_out_dominated(2), internal_error); // not dominated
}

TEST_CASE("measure") {
    const WeightSet w = kWeightsGeneral;
    SECTION("fresh instance measures the order") {
        std::vector<Status> st(5, Vn);
        Graph c5 = cycle(5);
        Instance inst = Instance::from_status(c5, st);
        CHECK_THAT(measure(inst, w), Catch::Matchers::WithinAbs(5.0, 1e-12));
    }
    SECTION("finished instance measures delta per component") {
        Graph g = cycle(4);
        Status st[] = {In, In, Od, Od};
        Instance inst = Instance::from_status(g, st);
        CHECK_THAT(measure(inst, w), Catch::Matchers::WithinAbs(w.delta, 1e-12));
    }
    SECTION("cycle root") {
        Graph g = cycle(4);
        Instance inst = Instance::root(g, 0);
        CHECK_THAT(measure(inst, w), Catch::Matchers::WithinAbs(3.112326, 1e-9));
    }
    SECTION("weight validation") {
        Graph g = cycle(4);
        Instance inst = Instance::root(g, 0);
        CHECK_THROWS_AS(measure(inst, WeightSet{0.0, 1.0, 0.5}), input_error);
        CHECK_THROWS_AS(measure(inst, WeightSet{0.5, 1.5, 0.5}), input_error);
    }
}

TEST_CASE("measure decrease assertions on rule applications") {
    SECTION("B1 decreases by at least (beta, beta+alpha)") {
        Graph g = path3();
        Status st[] = {In, Vd, On};
        Instance inst = Instance::from_status(g, st);
        Decision d = next_step(inst);
        REQUIRE(d.rule == Rule::B1);
        std::string why;
        CHECK(check_branch_decrease(inst, d, kWeights2Degenerate, &why));
        CHECK(check_branch_decrease(inst, d, kWeightsGeneral, &why));
    }
    SECTION("R1 does not increase the measure") {
        Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        Status st[] = {In, Vd, Vd, Vn};
        Instance inst = Instance::from_status(g, st);
        Decision d = next_step(inst);
        REQUIRE(d.rule == Rule::R1);
        CHECK(check_branch_decrease(inst, d, kWeightsGeneral));
    }
    SECTION("every decision on a mixed corpus passes both weight sets") {
        long b12 = 0;
        for (const Graph& g : corpus::random_connected_corpus(60, 6000)) {
            EnumerateOptions opts;
            std::string why;
            opts.observer = [&](const Instance& inst, const Decision& dec) {
                if (dec.rule == Rule::B12) ++b12;
                for (const WeightSet* w : {&kWeights2Degenerate, &kWeightsGeneral})
                    if (!check_branch_decrease(inst, dec, *w, &why)) {
                        CAPTURE(why);
                        REQUIRE(false);
                    }
            };
            enumerate_collect(g, opts);
        }
        CHECK(b12 > 0); // the corpus must exercise the catch-all branch
    }
}

TEST_CASE("extension through the engine prunes on required vertices") {
    Graph c5 = cycle(5);
    CHECK(extension_exists_branching(c5, VertexSet{0, 1}));
    CHECK(!extension_exists_branching(c5, VertexSet{0, 2, 4}));
    VertexSet w;
    REQUIRE(extension_exists_branching(c5, VertexSet{3}, 0, &w));
    CHECK(w.contains(3));
    CHECK(is_minimal_cds(c5, w));
}

TEST_CASE("node budget") {
    EnumerateOptions opts;
    opts.node_budget = 1;
    CHECK_THROWS_AS(enumerate_collect(cycle(5), opts), budget_error);
}
