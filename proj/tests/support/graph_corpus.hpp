#pragma once

// Test-only corpora: exhaustive isomorphism-free graph families for oracle
// cross-checks, plus the seeded random family used across the suites.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "cds/generators.hpp"
#include "cds/graph.hpp"

namespace corpus {

using code_t = std::uint32_t;

inline int pair_index(int i, int j, int n) {
    // pairs (i,j), i<j, in row-major order
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Lexicographically largest edge code over all vertex relabelings, treating
// pair (0,1) as the most significant bit.
inline code_t canonical_code(code_t code, int n) {
    const int np = n * (n - 1) / 2;
    std::array<std::array<bool, 8>, 8> adj{};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (code & (code_t{1} << pair_index(i, j, n))) adj[i][j] = adj[j][i] = true;

    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::array<bool, 32> best{};
    bool have_best = false;
    do {
        bool greater = false, abort = false;
        std::array<bool, 32> cur{};
        int p = 0;
        for (int i = 0; i < n && !abort; ++i) {
            for (int j = i + 1; j < n; ++j, ++p) {
                bool b = adj[perm[i]][perm[j]];
                cur[p] = b;
                if (have_best && !greater) {
                    if (b && !best[p]) greater = true;
                    if (!b && best[p]) {
                        abort = true;
                        break;
                    }
                }
            }
        }
        if (!abort && (!have_best || greater)) {
            best = cur;
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.begin() + n));

    code_t out = 0;
    for (int p = 0; p < np; ++p)
        if (best[p]) out |= code_t{1} << p;
    return out;
}

// All unlabeled simple graphs on exactly n vertices (n <= 7), one canonical
// representative each, grown by vertex augmentation.
inline const std::vector<code_t>& all_graph_codes(int n) {
    static std::vector<std::vector<code_t>> levels = [] {
        std::vector<std::vector<code_t>> out(8);
        out[1] = {0};
        for (int k = 2; k <= 7; ++k) {
            std::unordered_set<code_t> seen;
            for (code_t base : out[k - 1]) {
                for (code_t nb = 0; nb < (code_t{1} << (k - 1)); ++nb) {
                    code_t code = 0;
                    for (int i = 0; i < k - 1; ++i)
                        for (int j = i + 1; j < k - 1; ++j)
                            if (base & (code_t{1} << pair_index(i, j, k - 1)))
                                code |= code_t{1} << pair_index(i, j, k);
                    for (int i = 0; i < k - 1; ++i)
                        if (nb & (code_t{1} << i)) code |= code_t{1} << pair_index(i, k - 1, k);
                    seen.insert(canonical_code(code, k));
                }
            }
            out[k].assign(seen.begin(), seen.end());
            std::sort(out[k].begin(), out[k].end());
        }
        // unlabeled graph counts on 1..7 vertices
        constexpr std::array<std::size_t, 8> expected = {0, 1, 2, 4, 11, 34, 156, 1044};
        for (int k = 1; k <= 7; ++k)
            if (out[k].size() != expected[k]) throw std::logic_error("graph census mismatch");
        return out;
    }();
    return levels.at(n);
}

inline cds::Graph graph_from_code(code_t code, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (code & (code_t{1} << pair_index(i, j, n))) edges.emplace_back(i, j);
    return cds::Graph(n, edges);
}

// All connected unlabeled graphs on exactly n vertices.
inline std::vector<cds::Graph> all_connected_graphs(int n) {
    std::vector<cds::Graph> out;
    for (code_t code : all_graph_codes(n)) {
        cds::Graph g = graph_from_code(code, n);
        if (g.connected()) out.push_back(std::move(g));
    }
    return out;
}

// The seeded random family shared by the equivalence and invariant suites:
// connected, orders 8..12, degeneracy bound cycling 1..4.
inline std::vector<cds::Graph> random_connected_corpus(int count, std::uint64_t seed_base = 1000) {
    std::vector<cds::Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(cds::gen_random_degenerate(8 + (i % 5), 1 + (i % 4), seed_base + i));
    return out;
}

} // namespace corpus
