#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "cds/engine.hpp"
#include "cds/graph.hpp"

namespace cds {

inline constexpr int kOracleCap = 24;
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

// Reference enumeration by exhaustive subset search. Output is in canonical
// order: lexicographic by sorted member list.
inline std::vector<VertexSet> enumerate_bruteforce(const Graph& g, int cap = kOracleCap) {
    if (!g.connected()) throw disconnected_error("enumeration needs a connected graph");
    if (g.order() > cap) throw budget_error("graph too large for the brute-force oracle");
    std::vector<VertexSet> out;
    const mask_t all = full_mask(g.order());
    for (mask_t s = 1; s <= all; ++s)
        if (detail::is_minimal_cds_mask(g, s)) out.push_back(VertexSet::of_mask(s));
    std::sort(out.begin(), out.end());
    return out;
}

// Does some minimal CDS extend u? Small graphs are swept superset by
// superset; larger ones fall back to the branching enumerator restricted to
// solutions through u. Exceeding the budget raises budget_error rather than
// ever returning a wrong answer.
inline bool extension_exists(const Graph& g, const VertexSet& u,
                             std::uint64_t budget = kDefaultBudget,
                             VertexSet* witness = nullptr) {
    if (!g.connected()) throw disconnected_error("extension needs a connected graph");
    check_vertex_set(g, u);
    if (g.order() > 64) throw budget_error("graph too large for the extension search");
    if (g.order() <= kOracleCap) {
        const mask_t base = u.mask();
        const mask_t free = full_mask(g.order()) & ~base;
        std::uint64_t work = 0;
        // walk all supersets of base: t ranges over subsets of free
        mask_t t = 0;
        for (;;) {
            if (++work > budget) throw budget_error("extension budget exceeded");
            mask_t s = base | t;
            if (s && detail::is_minimal_cds_mask(g, s)) {
                if (witness) *witness = VertexSet::of_mask(s);
                return true;
            }
            if (t == free) break;
            t = (t - free) & free; // next subset of free
        }
        return false;
    }
    return extension_exists_branching(g, u, budget, witness);
}

struct HittingSets {
    std::vector<VertexSet> sets; // all inclusion-minimal hitting sets containing u
    bool exists = false;
};

// Exhaustive minimal-hitting-set enumeration over a ground set 0..ground-1,
// filtered to supersets of u. A hitting set is minimal iff every member has
// a private hyperedge.
inline HittingSets minimal_hitting_sets(int ground, std::span<const VertexSet> sets,
                                        const VertexSet& u) {
    require(ground >= 0, "negative ground set");
    if (ground > 20) throw budget_error("ground set too large for exhaustive hitting sets");
    std::vector<mask_t> sm;
    sm.reserve(sets.size());
    for (const VertexSet& s : sets) {
        require(!s.empty(), "empty hyperedge is unhittable");
        for (int e : s) require(e >= 0 && e < ground, "hyperedge element out of range");
        sm.push_back(s.mask());
    }
    for (int e : u) require(e >= 0 && e < ground, "extension element out of range");
    const mask_t um = u.mask();

    auto hits_all = [&](mask_t h) {
        for (mask_t s : sm)
            if ((s & h) == 0) return false;
        return true;
    };
    auto minimal = [&](mask_t h) {
        bool ok = true;
        for_bits(h, [&](int e) -> bool {
            bool has_private = false;
            for (mask_t s : sm)
                if ((s & h) == bit(e)) {
                    has_private = true;
                    break;
                }
            if (!has_private) {
                ok = false;
                return false;
            }
            return true;
        });
        return ok;
    };

    HittingSets out;
    const mask_t all = full_mask(ground);
    for (mask_t h = 0; ; ++h) {
        if ((um & ~h) == 0 && hits_all(h) && minimal(h))
            out.sets.push_back(VertexSet::of_mask(h));
        if (h == all) break;
    }
    std::sort(out.sets.begin(), out.sets.end());
    out.exists = !out.sets.empty();
    return out;
}

} // namespace cds
