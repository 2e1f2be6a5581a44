#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cds/instance.hpp"

namespace cds {

// Rules in priority order. Guards are written self-contained, but the
// fixed order is what the soundness arguments assume.
enum class Rule : int {
    B1, B2, B3, B4,     // dominated vertices, arbitrary degree
    R1, R2, R3, R4, R5, // edge deletions, isolates, forced vertices
    B5, B6,             // low-degree undominated vertices
    B7, B8, B9, B10,    // low-degree dominated vertices
    B12,                // catch-all binary branch
    None,
};

constexpr int kRuleCount = 16;

inline const char* rule_name(Rule r) {
    static constexpr std::array<const char*, kRuleCount + 1> names = {
        "B1", "B2", "B3", "B4", "R1", "R2", "R3", "R4", "R5",
        "B5", "B6", "B7", "B8", "B9", "B10", "B12", "-"};
    return names[static_cast<int>(r)];
}

// One child of a branching step. Vertices are assigned in group order:
// edge deletion, solution additions (in listed order), explicit O_d
// placements, then O placements resolved to O_d or O_n depending on
// domination after this branch's solution additions.
struct BranchSpec {
    std::optional<std::pair<int, int>> delete_edge;
    std::vector<int> to_solution;
    std::vector<int> to_out_dominated;
    std::vector<int> to_out;
    mask_t commitment = 0;
};

enum class DecisionKind { Reduce, Branch, Leaf, Prune };

struct Decision {
    DecisionKind kind = DecisionKind::Prune;
    Rule rule = Rule::None;
    // role vertices of the fired rule (-1 when unused); u is the pivot
    int u = -1, v1 = -1, v2 = -1, y = -1;
    std::vector<BranchSpec> branches;
};

namespace detail {

inline std::vector<int> mask_to_vec(mask_t m) {
    std::vector<int> out;
    for_bits(m, [&](int v) { out.push_back(v); });
    return out;
}

inline Decision reduce(Rule r, BranchSpec spec, int u, int v1 = -1) {
    Decision d;
    d.kind = DecisionKind::Reduce;
    d.rule = r;
    d.u = u;
    d.v1 = v1;
    d.branches.push_back(std::move(spec));
    return d;
}

inline Decision prune(Rule r, int u) {
    Decision d;
    d.kind = DecisionKind::Prune;
    d.rule = r;
    d.u = u;
    return d;
}

} // namespace detail

// First applicable rule in priority order; Leaf once G' is empty, Prune when
// nothing applies and no dominated undecided vertex is left.
inline Decision next_step(const Instance& inst) {
    const mask_t vn = inst.undecided_undominated();
    const mask_t vd = inst.undecided_dominated();
    const mask_t on = inst.out_undominated();
    const mask_t undec = vn | vd;

    // B1: dominated x with O_n-neighbors. Putting x into S dominates them.
    {
        std::optional<Decision> hit;
        for_bits(vd, [&](int x) -> bool {
            if ((inst.work_adjacency(x) & on) == 0) return true;
            Decision d;
            d.kind = DecisionKind::Branch;
            d.rule = Rule::B1;
            d.u = x;
            d.branches.push_back({.to_out_dominated = {x}});
            d.branches.push_back({.to_solution = {x}});
            hit = std::move(d);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    // B2: dominated x adjacent to two components of G[S] (base graph).
    {
        std::optional<Decision> hit;
        for_bits(vd, [&](int x) -> bool {
            if (inst.adjacent_components(x).size() < 2) return true;
            Decision d;
            d.kind = DecisionKind::Branch;
            d.rule = Rule::B2;
            d.u = x;
            d.branches.push_back({.to_out_dominated = {x}});
            d.branches.push_back({.to_solution = {x}});
            hit = std::move(d);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    // B3: dominated x, undominated neighbor y, y has an O_n-neighbor z.
    {
        std::optional<Decision> hit;
        for_bits(vd, [&](int x) -> bool {
            bool found = false;
            for_bits(inst.work_adjacency(x) & vn, [&](int y) -> bool {
                mask_t zs = inst.work_adjacency(y) & on;
                if (!zs) return true;
                int z = lowest_bit(zs);
                Decision d;
                d.kind = DecisionKind::Branch;
                d.rule = Rule::B3;
                d.u = x;
                d.v1 = y;
                d.v2 = z;
                d.branches.push_back({.to_out_dominated = {x}});
                d.branches.push_back({.to_solution = {x}, .to_out_dominated = {y}});
                d.branches.push_back({.to_solution = {x, y}});
                hit = std::move(d);
                found = true;
                return false;
            });
            return !found;
        });
        if (hit) return *std::move(hit);
    }

    // B4: adjacent dominated pair with different unique components.
    {
        std::optional<Decision> hit;
        for_bits(vd, [&](int x) -> bool {
            auto cx = inst.adjacent_components(x);
            if (cx.size() != 1) return true;
            bool found = false;
            for_bits(inst.work_adjacency(x) & vd, [&](int y) -> bool {
                auto cy = inst.adjacent_components(y);
                if (cy.size() != 1 || cy[0] == cx[0]) return true;
                Decision d;
                d.kind = DecisionKind::Branch;
                d.rule = Rule::B4;
                d.u = x;
                d.v1 = y;
                d.branches.push_back({.to_out_dominated = {x}});
                d.branches.push_back({.to_solution = {x}, .to_out_dominated = {y}});
                d.branches.push_back({.to_solution = {x, y}});
                hit = std::move(d);
                found = true;
                return false;
            });
            return !found;
        });
        if (hit) return *std::move(hit);
    }

    // R1: adjacent dominated pair with the same unique component; any x-y
    // path through that edge can be rerouted through the component, so the
    // edge is superfluous.
    {
        std::optional<Decision> hit;
        for_bits(vd, [&](int x) -> bool {
            auto cx = inst.adjacent_components(x);
            if (cx.size() != 1) return true;
            bool found = false;
            for_bits(inst.work_adjacency(x) & vd, [&](int y) -> bool {
                auto cy = inst.adjacent_components(y);
                if (cy.size() != 1 || cy[0] != cx[0]) return true;
                hit = detail::reduce(Rule::R1, {.delete_edge = {{x, y}}}, x, y);
                found = true;
                return false;
            });
            return !found;
        });
        if (hit) return *std::move(hit);
    }

    // R2: isolated vertex of G'. A lone dominated vertex is discarded; a
    // lone undominated one can never be dominated or connected, so the
    // whole branch dies.
    {
        std::optional<Decision> hit;
        for_bits(inst.active(), [&](int x) -> bool {
            if (inst.work_adjacency(x) != 0) return true;
            if (vd & bit(x))
                hit = detail::reduce(Rule::R2, {.to_out_dominated = {x}}, x);
            else
                hit = detail::prune(Rule::R2, x);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    // R3: edge between two discarded undominated vertices.
    {
        std::optional<Decision> hit;
        for_bits(on, [&](int x) -> bool {
            mask_t ys = inst.work_adjacency(x) & on;
            if (!ys) return true;
            int y = lowest_bit(ys);
            hit = detail::reduce(Rule::R3, {.delete_edge = {{x, y}}}, x, y);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    // R4: undominated undecided vertex with no undecided neighbor left.
    {
        std::optional<Decision> hit;
        for_bits(vn, [&](int x) -> bool {
            if (inst.work_adjacency(x) & undec) return true;
            hit = detail::prune(Rule::R4, x);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    // R5: undominated vertex with exactly one undecided neighbor y; y is
    // forced into the solution.
    {
        std::optional<Decision> hit;
        for_bits(vn | on, [&](int x) -> bool {
            mask_t cand = inst.work_adjacency(x) & undec;
            if (popcount(cand) != 1) return true;
            int y = lowest_bit(cand);
            hit = detail::reduce(Rule::R5, {.to_solution = {y}}, x, y);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    // B5: undominated u with exactly two undecided neighbors and no
    // O_n-neighbor. u is dominated or connected through v1 or else v2.
    {
        std::optional<Decision> hit;
        for_bits(vn, [&](int u) -> bool {
            if (inst.work_adjacency(u) & on) return true;
            mask_t vs = inst.work_adjacency(u) & undec;
            if (popcount(vs) != 2) return true;
            int v1 = lowest_bit(vs);
            int v2 = lowest_bit(vs & (vs - 1));
            Decision d;
            d.kind = DecisionKind::Branch;
            d.rule = Rule::B5;
            d.u = u;
            d.v1 = v1;
            d.v2 = v2;
            d.branches.push_back({.to_solution = {v1}, .to_out_dominated = {u}});
            d.branches.push_back({.to_solution = {v2}, .to_out_dominated = {u}, .to_out = {v1}});
            d.branches.push_back({.to_solution = {u, v1}});
            d.branches.push_back({.to_solution = {u, v2}, .to_out_dominated = {v1}});
            hit = std::move(d);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    // B6: discarded undominated u with exactly two undecided neighbors.
    {
        std::optional<Decision> hit;
        for_bits(on, [&](int u) -> bool {
            mask_t vs = inst.work_adjacency(u) & undec;
            if (popcount(vs) != 2) return true;
            int v1 = lowest_bit(vs);
            int v2 = lowest_bit(vs & (vs - 1));
            Decision d;
            d.kind = DecisionKind::Branch;
            d.rule = Rule::B6;
            d.u = u;
            d.v1 = v1;
            d.v2 = v2;
            d.branches.push_back({.to_solution = {v1}, .to_out_dominated = {u}});
            d.branches.push_back({.to_solution = {v2}, .to_out_dominated = {u}, .to_out = {v1}});
            hit = std::move(d);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    // B7: dominated u with a single undominated neighbor v (and v has no
    // O_n-neighbor). If u joins S without v, then v is u's private
    // neighbor, so all other undecided neighbors of v are discarded.
    {
        std::optional<Decision> hit;
        for_bits(vd, [&](int u) -> bool {
            mask_t vs = inst.work_adjacency(u) & vn;
            if (popcount(vs) != 1) return true;
            int v = lowest_bit(vs);
            if (inst.work_adjacency(v) & on) return true;
            mask_t others = inst.work_adjacency(v) & undec & ~bit(u);
            Decision d;
            d.kind = DecisionKind::Branch;
            d.rule = Rule::B7;
            d.u = u;
            d.v1 = v;
            d.branches.push_back({.to_out_dominated = {u}});
            d.branches.push_back({.to_solution = {u},
                                  .to_out_dominated = {v},
                                  .to_out = detail::mask_to_vec(others)});
            d.branches.push_back({.to_solution = {u, v}});
            hit = std::move(d);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    // B8: dominated u with undecided neighbors {v1,v2} sharing another
    // common neighbor y. In the branch discarding v1 and v2, the private
    // neighbor of u is one of them, so y cannot be in the solution.
    {
        std::optional<Decision> hit;
        for_bits(vd, [&](int u) -> bool {
            if (inst.work_adjacency(u) & on) return true;
            mask_t vs = inst.work_adjacency(u) & undec;
            if (popcount(vs) != 2) return true;
            int v1 = lowest_bit(vs);
            int v2 = lowest_bit(vs & (vs - 1));
            mask_t common = inst.work_adjacency(v1) & inst.work_adjacency(v2) & undec & ~bit(u);
            if (!common) return true;
            int y = lowest_bit(common);
            Decision d;
            d.kind = DecisionKind::Branch;
            d.rule = Rule::B8;
            d.u = u;
            d.v1 = v1;
            d.v2 = v2;
            d.y = y;
            d.branches.push_back({.to_out_dominated = {u}});
            d.branches.push_back({.to_solution = {u, v1}});
            d.branches.push_back({.to_solution = {u, v2}, .to_out_dominated = {v1}});
            d.branches.push_back({.to_solution = {u}, .to_out_dominated = {v1, v2}, .to_out = {y}});
            hit = std::move(d);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    // B9: like B8 but v1 has exactly one further undecided neighbor y.
    // The two final branches split on which of v1, v2 is private for u;
    // if v2 is private then y (the only other way to reach v1's side) is
    // forced into the solution.
    {
        std::optional<Decision> hit;
        for_bits(vd, [&](int u) -> bool {
            if ((inst.work_adjacency(u) & (vd | on)) != 0) return true;
            mask_t vs = inst.work_adjacency(u) & vn;
            if (popcount(vs) != 2) return true;
            int a = lowest_bit(vs);
            int b = lowest_bit(vs & (vs - 1));
            int v1 = -1, v2 = -1;
            for (auto [x, partner] : {std::pair{a, b}, std::pair{b, a}}) {
                if (popcount(inst.work_adjacency(x) & undec & ~bit(u) & ~bit(partner)) == 1) {
                    v1 = x;
                    v2 = partner;
                    break;
                }
            }
            if (v1 == -1) return true;
            int y = lowest_bit(inst.work_adjacency(v1) & undec & ~bit(u) & ~bit(v2));
            mask_t others2 = inst.work_adjacency(v2) & undec & ~bit(u) & ~bit(v1);
            check_internal((others2 & bit(y)) == 0, "B9 expects y not adjacent to v2");
            Decision d;
            d.kind = DecisionKind::Branch;
            d.rule = Rule::B9;
            d.u = u;
            d.v1 = v1;
            d.v2 = v2;
            d.y = y;
            d.branches.push_back({.to_out_dominated = {u}});
            d.branches.push_back({.to_solution = {u, v1}});
            d.branches.push_back({.to_solution = {u, v2}, .to_out_dominated = {v1}});
            d.branches.push_back({.to_solution = {u}, .to_out_dominated = {v1, v2}, .to_out = {y}});
            d.branches.push_back({.to_solution = {u, y},
                                  .to_out_dominated = {v1, v2},
                                  .to_out = detail::mask_to_vec(others2)});
            hit = std::move(d);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    // B10: like B9 but both v1 and v2 keep at least two further undecided
    // neighbors. The last two branches discard the neighborhood of v1
    // resp. v2; the fifth carries a commitment that some discarded-in-
    // branch-four vertex is in the solution, preventing double enumeration.
    {
        std::optional<Decision> hit;
        for_bits(vd, [&](int u) -> bool {
            if ((inst.work_adjacency(u) & (vd | on)) != 0) return true;
            mask_t vs = inst.work_adjacency(u) & vn;
            if (popcount(vs) != 2) return true;
            int v1 = lowest_bit(vs);
            int v2 = lowest_bit(vs & (vs - 1));
            mask_t m1 = inst.work_adjacency(v1) & undec & ~bit(u) & ~bit(v2);
            mask_t m2 = inst.work_adjacency(v2) & undec & ~bit(u) & ~bit(v1);
            if (popcount(m1) < 2 || popcount(m2) < 2) return true;
            Decision d;
            d.kind = DecisionKind::Branch;
            d.rule = Rule::B10;
            d.u = u;
            d.v1 = v1;
            d.v2 = v2;
            d.branches.push_back({.to_out_dominated = {u}});
            d.branches.push_back({.to_solution = {u, v1}});
            d.branches.push_back({.to_solution = {u, v2}, .to_out_dominated = {v1}});
            d.branches.push_back({.to_solution = {u},
                                  .to_out_dominated = {v1, v2},
                                  .to_out = detail::mask_to_vec(m1)});
            d.branches.push_back({.to_solution = {u},
                                  .to_out_dominated = {v1, v2},
                                  .to_out = detail::mask_to_vec(m2),
                                  .commitment = m1});
            hit = std::move(d);
            return false;
        });
        if (hit) return *std::move(hit);
    }

    if (inst.active() == 0) {
        Decision d;
        d.kind = DecisionKind::Leaf;
        d.rule = Rule::None;
        return d;
    }

    // B12: catch-all binary branch on a dominated vertex.
    if (vd) {
        int x = lowest_bit(vd);
        Decision d;
        d.kind = DecisionKind::Branch;
        d.rule = Rule::B12;
        d.u = x;
        d.branches.push_back({.to_out_dominated = {x}});
        d.branches.push_back({.to_solution = {x}});
        return d;
    }

    // Nothing applies and every undecided vertex is undominated: S cannot
    // grow towards them, so the branch is dead.
    return detail::prune(Rule::None, -1);
}

// Applies a decision; Reduce yields one child, Leaf/Prune none. Children
// whose commitments become unsatisfiable are dropped.
inline std::vector<Instance> expand(const Instance& inst, const Decision& d) {
    std::vector<Instance> out;
    if (d.kind == DecisionKind::Leaf || d.kind == DecisionKind::Prune) return out;
    out.reserve(d.branches.size());
    for (const BranchSpec& spec : d.branches) {
        Instance child = inst;
        if (spec.delete_edge) child.delete_work_edge(spec.delete_edge->first, spec.delete_edge->second);
        for (int v : spec.to_solution) child.to_solution(v);
        for (int v : spec.to_out_dominated) child.to_out_dominated(v);
        for (int v : spec.to_out) child.to_out_auto(v);
        if (spec.commitment) child.add_commitment(spec.commitment);
        if (!child.normalize_commitments()) continue;
        out.push_back(std::move(child));
    }
    return out;
}

} // namespace cds
