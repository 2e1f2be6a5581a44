#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cds/errors.hpp"

namespace cds {

// Weights of the instance measure |V'_n| + alpha*|O_n| + beta*|V'_d| +
// delta*c. The plain measure (all undecided vertices weighted 1) is the
// special case beta = 1.
struct WeightSet {
    double alpha = 0.0;
    double beta = 1.0;
    double delta = 0.0;

    void validate() const {
        require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0,1)");
        require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
        require(beta > 0.0 && beta <= 1.0, "beta must lie in (0,1]");
    }
};

inline constexpr WeightSet kWeights2Degenerate{0.106, 1.0, 0.106};
inline constexpr WeightSet kWeightsGeneral{0.110901, 0.984405, 0.143516};

struct BranchingVector {
    std::vector<double> decreases;
    std::string label;
};

// Unique lambda >= 1 with sum_i lambda^(-r_i) = 1; the left side is
// strictly decreasing in lambda, so bisection applies. Single-component
// vectors are reductions with branching number 1 by convention.
inline double branching_number(const BranchingVector& v) {
    require(!v.decreases.empty(), "empty branching vector");
    for (double r : v.decreases) require(r > 0.0, "branching vector components must be positive");
    std::size_t t = v.decreases.size();
    if (t == 1) return 1.0;
    auto f = [&](double lam) {
        double s = 0.0;
        for (double r : v.decreases) s += std::pow(lam, -r);
        return s;
    };
    double rmin = *std::min_element(v.decreases.begin(), v.decreases.end());
    double lo = 1.0;
    double hi = std::pow(static_cast<double>(t), 1.0 / rmin);
    while (f(hi) > 1.0) hi *= 2.0; // guard against rounding at the bracket edge
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

enum class BoundKind { Less, Equal };

// One catalog entry: a rule's worst-case vector instantiated at concrete
// weights, together with the bound its analysis promises.
struct CatalogRow {
    BranchingVector vec;
    double bound = 0.0;
    BoundKind kind = BoundKind::Less;
    // The catch-all row is excluded from the 2-degenerate maximum: it never
    // fires on 2-degenerate inputs.
    bool in_max = true;

    double number() const { return branching_number(vec); }
    bool holds(double margin = 1e-6) const {
        double n = number();
        return kind == BoundKind::Less ? bound - n >= margin : std::abs(n - bound) <= margin;
    }
};

// Branching-vector catalog for the plain measure (beta = 1), one row per
// rule. The comparative rows B1 and B2 are always at least as good as B3
// and B4, so they carry those bounds.
inline std::vector<CatalogRow> catalog_2degenerate(const WeightSet& w) {
    w.validate();
    require(w.beta == 1.0, "the plain measure requires beta = 1");
    const double a = w.alpha, d = w.delta;
    std::vector<CatalogRow> rows;
    auto add = [&](std::string label, std::vector<double> v, double bound,
                   BoundKind kind = BoundKind::Less, bool in_max = true) {
        rows.push_back({{std::move(v), std::move(label)}, bound, kind, in_max});
    };
    add("B1", {1, 1 + a}, 1.9766);
    add("B2", {1, 1 + d}, 1.9766);
    add("B3", {1, 2, 2 + a}, 1.9766);
    add("B4", {1, 2, 2 + d}, 1.9766);
    add("B5", {2 - d, 3 - d - a, 2 - d, 3 - d}, 1.8269);
    add("B6", {1 + a - d, 2 - d}, 1.6420);
    add("B7", {1, 4 - 2 * a, 2}, 1.7691);
    add("B8", {1, 2, 3, 4 - a}, 1.9333);
    add("B9", {1, 2, 3, 4 - a, 5 - d - a}, 1.9767);
    add("B10", {1, 2, 3, 5 - 2 * a, 5 - 2 * a}, 1.9420);
    add("B12", {1, 1}, 2.0, BoundKind::Equal, false);
    return rows;
}

// Full catalog for the refined measure, one row per rule subcase.
// min(beta, 1-alpha) distinguishes whether the last discarded vertex was
// dominated.
inline std::vector<CatalogRow> catalog_general(const WeightSet& w) {
    w.validate();
    const double a = w.alpha, b = w.beta, d = w.delta;
    const double mba = std::min(b, 1 - a);
    std::vector<CatalogRow> rows;
    auto add = [&](std::string label, std::vector<double> v, double bound) {
        rows.push_back({{std::move(v), std::move(label)}, bound, BoundKind::Less, true});
    };
    add("B1", {b, b + a}, 1.9489);
    add("B2", {b, b + d}, 1.9297);
    add("B3", {b, b + 1, b + 1 + a}, 1.9896);
    add("B4", {b, 2 * b, 2 * b + d}, 1.9896);

    add("B5 (v1,v2 undominated)", {2 - d, 3 - d - a, 2 - d, 3 - d}, 1.8463);
    add("B5 (v1 undominated, v2 dominated)", {2 - d, 2 - a + b, 2 - d, 2 + b}, 1.8236);
    add("B5 (v1,v2 dominated)", {1 + b, 1 + 2 * b, 1 + b, 1 + 2 * b}, 1.7785);

    add("B6 (v1,v2 undominated)", {1 + a - d, 2 - d}, 1.6635);
    add("B6 (v1 undominated, v2 dominated)", {1 + a, 1 + b}, 1.5855);
    add("B6 (v1,v2 dominated)", {b + a, 2 * b + a}, 1.5817);

    add("B7 (v1,v2 undominated)", {b, b + 3 - 2 * a, 1 + b}, 1.7796);
    add("B7 (v1 undominated, v2 dominated)", {b, 2 * b + 2 - a, 1 + b}, 1.7729);
    add("B7 (v1,v2 dominated)", {b, 3 * b + 1, 1 + b}, 1.7665);

    add("B8 (y undominated)", {b, 2, 3, 3 + b - a}, 1.9403);
    add("B8 (y dominated)", {b, 1 + b, 2 + b, 2 + 2 * b}, 1.9398);

    add("B9 (y undominated)", {b, 1 + b, 2 + b, 3 + b - a, 3 + b - d + mba}, 1.9896);
    add("B9 (y dominated)", {b, 1 + b, 2 + b, 2 + 2 * b, 2 + 2 * b + mba}, 1.9813);

    add("B10 (n1=0, n2=0)", {b, 1 + b, 2 + b, 2 + 3 * b, 2 + 3 * b}, 1.9430);
    add("B10 (n1=0, n2=1)", {b, 1 + b, 3, 2 + 3 * b, 3 + 2 * b - a}, 1.9440);
    add("B10 (n1=0, n2=2)", {b, 1 + b, 4 - b, 2 + 3 * b, 4 + b - 2 * a}, 1.9453);
    add("B10 (n1=1, n2=0)", {b, 2, 2 + b, 3 + 2 * b - a, 2 + 3 * b}, 1.9426);
    add("B10 (n1=1, n2=1)", {b, 2, 3, 3 + 2 * b - a, 3 + 2 * b - a}, 1.9437);
    add("B10 (n1=1, n2=2)", {b, 2, 4 - b, 3 + 2 * b - a, 4 + b - 2 * a}, 1.9449);
    add("B10 (n1=2, n2=0)", {b, 3 - b, 2 + b, 4 + b - 2 * a, 2 + 3 * b}, 1.9425);
    add("B10 (n1=2, n2=1)", {b, 3 - b, 3, 4 + b - 2 * a, 3 + 2 * b - a}, 1.9435);
    add("B10 (n1=2, n2=2)", {b, 3 - b, 4 - b, 4 + b - 2 * a, 4 + b - 2 * a}, 1.9448);

    add("B12", {b, 3 - 2 * b}, 1.9896);
    return rows;
}

inline std::vector<BranchingVector> vectors_2degenerate(const WeightSet& w) {
    std::vector<BranchingVector> out;
    for (auto& row : catalog_2degenerate(w)) out.push_back(std::move(row.vec));
    return out;
}

inline std::vector<BranchingVector> vectors_general(const WeightSet& w) {
    std::vector<BranchingVector> out;
    for (auto& row : catalog_general(w)) out.push_back(std::move(row.vec));
    return out;
}

enum class AnalysisMode { TwoDegenerate, General };

// Max branching number over the catalog rows that count toward the bound.
inline double catalog_max(AnalysisMode mode, const WeightSet& w) {
    auto rows = mode == AnalysisMode::TwoDegenerate ? catalog_2degenerate(w) : catalog_general(w);
    double worst = 1.0;
    for (const auto& row : rows)
        if (row.in_max) worst = std::max(worst, row.number());
    return worst;
}

struct OptimizeResult {
    WeightSet weights;
    double value = 0.0;
};

namespace detail {

// Objective with early abort: stop once some row already exceeds `cut`.
inline double catalog_max_cut(AnalysisMode mode, const WeightSet& w, double cut) {
    auto rows = mode == AnalysisMode::TwoDegenerate ? catalog_2degenerate(w) : catalog_general(w);
    // evaluate the historically binding rows first
    std::stable_sort(rows.begin(), rows.end(),
                     [](const CatalogRow& x, const CatalogRow& y) { return x.bound > y.bound; });
    double worst = 1.0;
    for (const auto& row : rows) {
        if (!row.in_max) continue;
        worst = std::max(worst, row.number());
        if (worst >= cut) return worst;
    }
    return worst;
}

} // namespace detail

// Minimizes the catalog maximum: a coarse grid to find the basin, a local
// 0.002 grid, then coordinate descent down to steps of 1e-5. Deterministic.
inline OptimizeResult optimize_weights(AnalysisMode mode) {
    const bool general = mode == AnalysisMode::General;
    auto clamp01 = [](double x) { return std::min(0.999, std::max(1e-4, x)); };
    auto make = [&](double a, double b, double d) {
        WeightSet w{clamp01(a), general ? std::min(1.0, std::max(1e-4, b)) : 1.0, clamp01(d)};
        return w;
    };

    WeightSet best = general ? make(0.1, 0.98, 0.14) : make(0.1, 1.0, 0.1);
    double best_val = detail::catalog_max_cut(mode, best, 1e9);

    auto consider = [&](const WeightSet& w) {
        double v = detail::catalog_max_cut(mode, w, best_val);
        if (v < best_val) {
            best_val = v;
            best = w;
        }
    };

    // coarse pass
    const double coarse = general ? 0.02 : 0.002;
    for (double a = coarse; a < 1.0; a += coarse)
        for (double d = coarse; d < 1.0; d += coarse) {
            if (general) {
                for (double b = coarse; b <= 1.0 + 1e-12; b += coarse) consider(make(a, b, d));
            } else {
                consider(make(a, 1.0, d));
            }
        }

    // local 0.002 grid around the incumbent
    if (general) {
        WeightSet c = best;
        for (double a = c.alpha - 0.02; a <= c.alpha + 0.02 + 1e-12; a += 0.002)
            for (double b = c.beta - 0.01; b <= std::min(1.0, c.beta + 0.01) + 1e-12; b += 0.002)
                for (double d = c.delta - 0.02; d <= c.delta + 0.02 + 1e-12; d += 0.002)
                    consider(make(a, b, d));
    }

    // coordinate descent, with diagonal moves to cross the kinks of the max
    double h = 0.002;
    while (h >= 1e-5) {
        bool improved = false;
        for (int dir = 0; dir < 27; ++dir) { // all sign patterns over the coords
            int sa = dir % 3 - 1, sd = (dir / 3) % 3 - 1, sb = (dir / 9) % 3 - 1;
            if (!general) sb = 0;
            if (sa == 0 && sd == 0 && sb == 0) continue;
            for (;;) {
                WeightSet w = make(best.alpha + sa * h, best.beta + sb * h, best.delta + sd * h);
                double v = detail::catalog_max_cut(mode, w, best_val);
                if (v < best_val) {
                    best_val = v;
                    best = w;
                    improved = true;
                } else {
                    break;
                }
            }
        }
        if (!improved) h *= 0.5;
    }
    return {best, best_val};
}

} // namespace cds
