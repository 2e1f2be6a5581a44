#include <catch2/catch_amalgamated.hpp>

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
} // namespace

TEST_CASE("brute-force enumeration on small graphs") {
    CHECK(enumerate_bruteforce(path3()) == std::vector<VertexSet>{VertexSet{1}});

    auto c5 = enumerate_bruteforce(cycle(5));
    std::vector<VertexSet> want{{0, 1, 2}, {0, 1, 4}, {0, 3, 4}, {1, 2, 3}, {2, 3, 4}};
    std::sort(want.begin(), want.end());
    CHECK(c5 == want); // the five consecutive triples

    auto [gtk22, hub] = gen_gtk(2, 2);
    CHECK(enumerate_bruteforce(gtk22).size() == 16);
}

TEST_CASE("brute-force guards") {
    CHECK_THROWS_AS(enumerate_bruteforce(Graph(2, {})), disconnected_error);
    Graph big = gen_random_degenerate(30, 2, 1);
    CHECK_THROWS_AS(enumerate_bruteforce(big), budget_error);
}

TEST_CASE("solutions are pairwise incomparable") {
    for (const Graph& g : corpus::random_connected_corpus(30, 4000)) {
        auto sols = enumerate_bruteforce(g);
        for (std::size_t i = 0; i < sols.size(); ++i)
            for (std::size_t j = 0; j < sols.size(); ++j) {
                if (i == j) continue;
                mask_t a = sols[i].mask(), b = sols[j].mask();
                if ((a & ~b) == 0) {
                    CAPTURE(i, j);
                    REQUIRE((a & ~b) != 0);
                }
            }
    }
    SUCCEED();
}

TEST_CASE("extension_exists") {
    CHECK(extension_exists(path3(), VertexSet{1}));
    CHECK(!extension_exists(path3(), VertexSet{0}));
    CHECK(!extension_exists(cycle(4), VertexSet{0, 2}));
    CHECK(extension_exists(Graph(1, {}), VertexSet{}));
    for (const Graph& g : corpus::random_connected_corpus(10, 4100))
        CHECK(extension_exists(g, VertexSet{}));
}

TEST_CASE("extension budget raises instead of lying") {
    CHECK_THROWS_AS(extension_exists(path3(), VertexSet{}, 1), budget_error);
}

TEST_CASE("extension finds a witness") {
    VertexSet w;
    REQUIRE(extension_exists(cycle(5), VertexSet{0, 1}, kDefaultBudget, &w));
    CHECK(w.contains(0));
    CHECK(w.contains(1));
    CHECK(is_minimal_cds(cycle(5), w));
}

TEST_CASE("minimal hitting sets") {
    SECTION("forced elements") {
        std::vector<VertexSet> sets{{0}, {1}};
        auto hs = minimal_hitting_sets(2, sets, {});
        CHECK(hs.sets == std::vector<VertexSet>{VertexSet{0, 1}});
        CHECK(hs.exists);
    }
    SECTION("one edge, all singletons") {
        std::vector<VertexSet> sets{{0, 1}};
        auto hs = minimal_hitting_sets(2, sets, {});
        CHECK(hs.sets == std::vector<VertexSet>{VertexSet{0}, VertexSet{1}});
    }
    SECTION("a singleton hyperedge forces its element everywhere") {
        // three elements, four sets, the last one a singleton
        std::vector<VertexSet> sets{{0, 1, 2}, {0, 1}, {1, 2}, {2}};
        auto hs = minimal_hitting_sets(3, sets, {});
        REQUIRE(!hs.sets.empty());
        for (const auto& h : hs.sets) CHECK(h.contains(2));
        CHECK(hs.sets == std::vector<VertexSet>{VertexSet{0, 2}, VertexSet{1, 2}});
    }
    SECTION("extension filter") {
        std::vector<VertexSet> sets{{0, 1}};
        auto hs = minimal_hitting_sets(3, sets, VertexSet{2});
        CHECK(!hs.exists); // {2} hits nothing needed and cannot be minimal
    }
    SECTION("guards") {
        std::vector<VertexSet> empty_edge{VertexSet{}};
        CHECK_THROWS_AS(minimal_hitting_sets(2, empty_edge, {}), input_error);
        std::vector<VertexSet> sets{{0}};
        CHECK_THROWS_AS(minimal_hitting_sets(21, sets, {}), budget_error);
    }
}
