#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cds/analysis.hpp"

using namespace cds;
using Catch::Matchers::WithinAbs;

TEST_CASE("branching numbers of simple vectors") {
    CHECK_THAT(branching_number({{1, 1}, ""}), WithinAbs(2.0, 1e-9));
    CHECK_THAT(branching_number({{2, 2}, ""}), WithinAbs(std::sqrt(2.0), 1e-9));
    CHECK_THAT(branching_number({{1, 2}, ""}), WithinAbs((1 + std::sqrt(5.0)) / 2, 1e-9));
    CHECK(branching_number({{0.7}, "reduction"}) == 1.0);
    CHECK_THROWS_AS(branching_number({{1, -1}, ""}), input_error);
    CHECK_THROWS_AS(branching_number({{}, ""}), input_error);
}

TEST_CASE("the binding row of the plain-measure catalog") {
    double a = 0.106, d = 0.106;
    double n = branching_number({{1, 2, 3, 4 - a, 5 - d - a}, ""});
    CHECK(n < 1.9767);
    CHECK(n > 1.976); // tight: this row is the 2-degenerate bottleneck
}

TEST_CASE("branching number properties") {
    std::mt19937 rng(7);
    auto rnd = [&] { return 0.5 + (rng() % 1000) / 400.0; };
    for (int it = 0; it < 200; ++it) {
        std::vector<double> v;
        int t = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < t; ++i) v.push_back(rnd());
        double base = branching_number({v, ""});

        // appending a component strictly increases the number
        std::vector<double> longer = v;
        longer.push_back(rnd());
        CHECK(branching_number({longer, ""}) > base);

        // increasing a component strictly decreases the number
        std::vector<double> deeper = v;
        deeper[rng() % deeper.size()] += 0.5;
        CHECK(branching_number({deeper, ""}) < base);

        // permutation invariance
        std::vector<double> shuffled = v;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK_THAT(branching_number({shuffled, ""}), WithinAbs(base, 1e-9));
    }
}

TEST_CASE("a (1,2,2+g) branch never exceeds the plain binary branch") {
    for (double g : {0.0, 0.05, 0.106, 0.5, 1.0, 3.0})
        CHECK(branching_number({{1, 2, 2 + g}, ""}) <= 2.0 + 1e-9);
}

TEST_CASE("plain-measure catalog rows stay below their bounds") {
    auto rows = catalog_2degenerate(kWeights2Degenerate);
    REQUIRE(rows.size() == 11);
    double worst = 1.0;
    std::string worst_label;
    for (const auto& row : rows) {
        INFO(row.vec.label);
        CHECK(row.holds());
        if (row.in_max && row.number() > worst) {
            worst = row.number();
            worst_label = row.vec.label;
        }
    }
    CHECK(worst < 1.9767);
    CHECK(worst_label == "B9");
    // the two comparative rows are at least as good as their counterparts
    auto number_of = [&](const std::string& label) {
        for (const auto& row : rows)
            if (row.vec.label == label) return row.number();
        FAIL("row not found");
        return 0.0;
    };
    CHECK(number_of("B1") <= number_of("B3"));
    CHECK(number_of("B2") <= number_of("B4"));
    CHECK_THROWS_AS(catalog_2degenerate(WeightSet{0.1, 0.9, 0.1}), input_error);
}

TEST_CASE("refined catalog rows stay below their bounds") {
    auto rows = catalog_general(kWeightsGeneral);
    REQUIRE(rows.size() == 27);
    double worst = 1.0;
    for (const auto& row : rows) {
        INFO(row.vec.label);
        CHECK(row.holds());
        worst = std::max(worst, row.number());
    }
    CHECK(worst < 1.9896);
    // the four binding rows all sit at the maximum
    for (const auto& row : rows) {
        bool binding = row.vec.label == "B3" || row.vec.label == "B4" ||
                       row.vec.label == "B9 (y undominated)" || row.vec.label == "B12";
        if (binding) {
            INFO(row.vec.label);
            CHECK(row.number() >= worst - 1e-3);
        }
    }
}

TEST_CASE("spot checks of individual catalog rows") {
    auto find = [](const std::vector<CatalogRow>& rows, const std::string& label) {
        for (const auto& r : rows)
            if (r.vec.label == label) return r;
        throw std::runtime_error("row not found: " + label);
    };
    auto rows2 = catalog_2degenerate(kWeights2Degenerate);
    CHECK(find(rows2, "B6").number() < 1.6420);
    CHECK(find(rows2, "B10").number() < 1.9420);
    CHECK_THAT(find(rows2, "B12").number(), WithinAbs(2.0, 1e-9));

    auto rowsg = catalog_general(kWeightsGeneral);
    CHECK(find(rowsg, "B10 (n1=0, n2=2)").number() < 1.9453);
    CHECK(find(rowsg, "B6 (v1,v2 dominated)").number() < 1.5817);
}

TEST_CASE("weight optimization reaches the catalog maxima", "[slow]") {
    OptimizeResult r2 = optimize_weights(AnalysisMode::TwoDegenerate);
    CHECK(r2.value <= 1.9767 + 1e-3);
    OptimizeResult rg = optimize_weights(AnalysisMode::General);
    CHECK(rg.value <= 1.9896 + 1e-3);
}
