#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cds/rules.hpp"

namespace cds {

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t prunes = 0;
    std::uint64_t emitted = 0;
    std::array<std::uint64_t, kRuleCount> rule_applications{};

    std::uint64_t fired(Rule r) const { return rule_applications[static_cast<int>(r)]; }
};

struct EnumerateOptions {
    // Vertices that must end up in the solution; instances that discard one
    // are cut off. Used by the extension search, empty otherwise.
    mask_t required = 0;
    // Abort with budget_error once this many instances were processed (0 =
    // unlimited).
    std::uint64_t node_budget = 0;
    SearchStats* stats = nullptr;
    // Test hook, called with every processed instance and its decision.
    std::function<void(const Instance&, const Decision&)> observer;
};

struct InitialBranches {
    // Universal vertices; each is a minimal CDS on its own and its branch
    // is omitted, since any larger solution through it is non-minimal.
    std::vector<VertexSet> singleton_solutions;
    std::vector<Instance> roots;
};

// The n root branches: branch i discards all vertices below i and commits i.
inline InitialBranches initial_branches(const Graph& g) {
    require(g.order() >= 1, "empty graph");
    if (!g.connected()) throw disconnected_error("enumeration needs a connected graph");
    require(g.order() <= 64, "the enumeration engine supports at most 64 vertices");
    InitialBranches out;
    const mask_t all = full_mask(g.order());
    for (int v = 0; v < g.order(); ++v) {
        if (g.closed_mask(v) == all)
            out.singleton_solutions.push_back(VertexSet{v});
        else
            out.roots.push_back(Instance::root(g, v));
    }
    return out;
}

// Certifies a finished instance: the solution must have at least two
// vertices (singletons were emitted at the root), induce a connected
// subgraph, be inclusion-minimal, and satisfy every commitment.
inline std::optional<VertexSet> leaf_emit(const Instance& inst) {
    mask_t s = inst.solution();
    if (popcount(s) < 2) return std::nullopt;
    const Graph& g = inst.base();
    if (!detail::is_connected_mask(g, s)) return std::nullopt;
    if (!detail::is_minimal_cds_mask(g, s)) return std::nullopt;
    for (mask_t cm : inst.commitments())
        if ((cm & s) == 0) return std::nullopt;
    return inst.solution_set();
}

// Depth-first branch-and-reduce enumeration of all minimal connected
// dominating sets. Every solution reaches the sink exactly once; the sink
// may return false to stop the search. Returns the number of solutions
// delivered.
inline std::uint64_t enumerate(const Graph& g,
                               const std::function<bool(const VertexSet&)>& sink,
                               const EnumerateOptions& opts = {}) {
    SearchStats local;
    SearchStats& st = opts.stats ? *opts.stats : local;
    std::uint64_t count = 0;

    auto alive = [&](const Instance& inst) {
        return (opts.required & ~(inst.undecided() | inst.solution())) == 0;
    };

    InitialBranches init = initial_branches(g);
    for (const VertexSet& sol : init.singleton_solutions) {
        if ((opts.required & ~sol.mask()) != 0) continue;
        ++count;
        ++st.emitted;
        if (!sink(sol)) return count;
    }

    std::vector<Instance> stack;
    for (auto it = init.roots.rbegin(); it != init.roots.rend(); ++it)
        if (alive(*it)) stack.push_back(std::move(*it));

    while (!stack.empty()) {
        Instance inst = std::move(stack.back());
        stack.pop_back();
        ++st.nodes;
        if (opts.node_budget && st.nodes > opts.node_budget)
            throw budget_error("search node budget exceeded");
        Decision d = next_step(inst);
        if (opts.observer) opts.observer(inst, d);
        switch (d.kind) {
        case DecisionKind::Leaf: {
            ++st.leaves;
            if (auto sol = leaf_emit(inst)) {
                ++count;
                ++st.emitted;
                if (!sink(*sol)) return count;
            }
            break;
        }
        case DecisionKind::Prune:
            ++st.prunes;
            break;
        case DecisionKind::Reduce:
        case DecisionKind::Branch: {
            ++st.rule_applications[static_cast<int>(d.rule)];
            std::vector<Instance> children = expand(inst, d);
            for (auto it = children.rbegin(); it != children.rend(); ++it) {
                if (alive(*it))
                    stack.push_back(std::move(*it));
                else
                    ++st.prunes;
            }
            break;
        }
        }
    }
    return count;
}

inline std::vector<VertexSet> enumerate_collect(const Graph& g, const EnumerateOptions& opts = {}) {
    std::vector<VertexSet> out;
    enumerate(g, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    }, opts);
    return out;
}

// Extension test driven by the branching engine: enumerate with all of u
// pinned into the solution and stop at the first hit.
inline bool extension_exists_branching(const Graph& g, const VertexSet& u,
                                       std::uint64_t node_budget = 0,
                                       VertexSet* witness = nullptr) {
    check_vertex_set(g, u);
    EnumerateOptions opts;
    opts.required = u.mask();
    opts.node_budget = node_budget;
    bool found = false;
    enumerate(g, [&](const VertexSet& s) {
        found = true;
        if (witness) *witness = s;
        return false;
    }, opts);
    return found;
}

} // namespace cds
