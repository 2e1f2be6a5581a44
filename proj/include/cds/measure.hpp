#pragma once

#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cds/analysis.hpp"
#include "cds/rules.hpp"

namespace cds {

inline double measure(const Instance& inst, const WeightSet& w) {
    w.validate();
    return popcount(inst.undecided_undominated()) +
           w.alpha * popcount(inst.out_undominated()) +
           w.beta * popcount(inst.undecided_dominated()) +
           w.delta * inst.component_count();
}

namespace detail {

// Worst-case measure decreases promised by a concrete rule application.
// Rows follow the refined analysis but are resolved per subcase, using the
// actual statuses of the role vertices, so that each entry is a valid lower
// bound on the decrease no matter how the roles were assigned. Reductions
// promise non-increase only.
inline std::vector<double> claimed_decreases(const Instance& parent, const Decision& dec,
                                             const WeightSet& w) {
    const double a = w.alpha, b = w.beta, d = w.delta;
    const double mba = std::min(b, 1 - a);
    auto undominated = [&](int v) { return parent.status(v) == Status::UndecidedUndominated; };
    switch (dec.rule) {
    case Rule::B1: return {b, b + a};
    case Rule::B2: return {b, b + d};
    case Rule::B3: return {b, b + 1, b + 1 + a};
    case Rule::B4: return {b, 2 * b, 2 * b + d};
    case Rule::R1:
    case Rule::R2:
    case Rule::R3:
    case Rule::R5: return {0.0};
    case Rule::B5: {
        bool n1 = undominated(dec.v1), n2 = undominated(dec.v2);
        if (n1 && n2) return {2 - d, 3 - d - a, 2 - d, 3 - d};
        if (n1) return {2 - d, 2 - a + b, 2 - d, 2 + b};
        if (n2) return {1 + b, 2 + b - d, 1 + b, 2 + b - d};
        return {1 + b, 1 + 2 * b, 1 + b, 1 + 2 * b};
    }
    case Rule::B6: {
        bool n1 = undominated(dec.v1), n2 = undominated(dec.v2);
        if (n1 && n2) return {1 + a - d, 2 - d};
        if (n1) return {1 + a - d, 1 + b};
        if (n2) return {b + a, 1 + b + a - d};
        return {b + a, 2 * b + a};
    }
    case Rule::B7: {
        mask_t others = parent.work_adjacency(dec.v1) & parent.undecided() & ~bit(dec.u);
        int k1 = popcount(others & parent.undecided_undominated());
        int k2 = popcount(others & parent.undecided_dominated());
        return {b, b + 1 + k1 * (1 - a) + k2 * b, 1 + b};
    }
    case Rule::B8:
        if (undominated(dec.y)) return {b, 2, 3, 3 + b - a};
        return {b, 1 + b, 2 + b, 2 + 2 * b};
    case Rule::B9:
        if (undominated(dec.y)) return {b, 1 + b, 2 + b, 3 + b - a, 3 + b - d + mba};
        return {b, 1 + b, 2 + b, 2 + 2 * b, 2 + 2 * b + mba};
    case Rule::B10: {
        mask_t m1 = parent.work_adjacency(dec.v1) & parent.undecided() & ~bit(dec.u) & ~bit(dec.v2);
        mask_t m2 = parent.work_adjacency(dec.v2) & parent.undecided() & ~bit(dec.u) & ~bit(dec.v1);
        double n1 = popcount(m1 & parent.undecided_undominated());
        double n2 = popcount(m2 & parent.undecided_undominated());
        double k1 = popcount(m1), k2 = popcount(m2);
        return {b,
                b + 1 + n1 * (1 - b),
                b + 2 + n2 * (1 - b),
                b + 2 + n1 * (1 - a) + (k1 - n1) * b,
                b + 2 + n2 * (1 - a) + (k2 - n2) * b};
    }
    case Rule::B12: return {b, 3 - 2 * b};
    case Rule::R4:
    case Rule::None: break;
    }
    throw internal_error("no claimed decrease vector for this decision");
}

} // namespace detail

// Runtime assertion behind the analysis: every branch of a decision must
// shrink the measure by at least its claimed amount (up to 1e-9 slack).
// Children are re-derived from the decision so the caller only needs the
// parent. Fills `why` with the offending branch on failure.
inline bool check_branch_decrease(const Instance& parent, const Decision& dec,
                                  const WeightSet& w, std::string* why = nullptr) {
    if (dec.kind == DecisionKind::Leaf || dec.kind == DecisionKind::Prune) return true;
    std::vector<double> claimed = detail::claimed_decreases(parent, dec, w);
    check_internal(claimed.size() == dec.branches.size() ||
                       (dec.kind == DecisionKind::Reduce && claimed.size() == 1),
                   "claimed vector does not match the branch count");
    double before = measure(parent, w);
    for (std::size_t i = 0; i < dec.branches.size(); ++i) {
        Instance child = parent;
        const BranchSpec& spec = dec.branches[i];
        if (spec.delete_edge) child.delete_work_edge(spec.delete_edge->first, spec.delete_edge->second);
        for (int v : spec.to_solution) child.to_solution(v);
        for (int v : spec.to_out_dominated) child.to_out_dominated(v);
        for (int v : spec.to_out) child.to_out_auto(v);
        double drop = before - measure(child, w);
        if (drop < claimed[i] - 1e-9) {
            if (why) {
                std::ostringstream os;
                os << "rule " << rule_name(dec.rule) << " branch " << i + 1 << ": measure fell by "
                   << drop << ", claimed " << claimed[i];
                *why = os.str();
            }
            return false;
        }
    }
    return true;
}

} // namespace cds
