#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cds/graph.hpp"

namespace cds {

// 3-CNF formula; literals are signed 1-based variable indices. Slots may
// repeat, so clauses with fewer than three distinct literals are fine.
struct Formula {
    int nvars = 0;
    std::vector<std::array<int, 3>> clauses;

    void validate() const {
        require(nvars >= 0, "negative variable count");
        for (const auto& cl : clauses)
            for (int lit : cl)
                require(lit != 0 && std::abs(lit) <= nvars, "literal out of range");
    }

    bool satisfiable() const {
        validate();
        require(nvars <= 24, "exhaustive satisfiability needs few variables");
        for (std::uint32_t a = 0; a < (std::uint32_t{1} << nvars); ++a) {
            bool ok = true;
            for (const auto& cl : clauses) {
                bool sat = false;
                for (int lit : cl) {
                    bool val = (a >> (std::abs(lit) - 1)) & 1;
                    sat |= (lit > 0) == val;
                }
                if (!sat) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    }
};

struct HitSystem {
    int ground = 0;
    std::vector<VertexSet> sets;
};

// Base lower-bound block: layers X = {0..t-1}, Y = {t..2t-1} joined as
// K_{t,t} minus a perfect matching, and an apex z = 2t over Y. With
// clique_x the X layer additionally induces a clique.
inline Graph gen_base_gt(int t, bool clique_x) {
    require(t >= 2, "layer size must be at least 2");
    std::vector<std::pair<int, int>> edges;
    int z = 2 * t;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j) edges.emplace_back(i, t + j);
    for (int j = 0; j < t; ++j) edges.emplace_back(z, t + j);
    if (clique_x)
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) edges.emplace_back(i, j);
    return Graph(2 * t + 1, edges);
}

// k clique-free copies of the base block glued through a hub adjacent to
// every X-vertex. Copy j occupies ids j*(2t+1) .. (j+1)*(2t+1)-1, the hub
// comes last. The hub is a cut vertex for k >= 2, so the X-cliques are
// never needed for domination.
inline std::pair<Graph, int> gen_gtk(int t, int k) {
    require(t >= 2, "layer size must be at least 2");
    require(k >= 1, "need at least one copy");
    int block = 2 * t + 1;
    int hub = k * block;
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < k; ++c) {
        int off = c * block;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if (i != j) edges.emplace_back(off + i, off + t + j);
        for (int j = 0; j < t; ++j) edges.emplace_back(off + 2 * t, off + t + j);
        for (int i = 0; i < t; ++i) edges.emplace_back(hub, off + i);
    }
    return {Graph(k * block + 1, edges), hub};
}

// Deterministic id layout of the satisfiability gadget:
//   0                      the connector s
//   1 + 5*(i-1) + 0..4     w_i, v_i, vbar_i, y_i, ybar_i  for variable i
//   1 + 5*n + 3*(j-1)+0..2 a_j, b_j, c_j                  for clause j
// U collects the w_i. The graph has 5n+3m+1 vertices and 7n+5m edges when
// the first two literal slots of each clause differ.
struct SatGadgetIds {
    int nvars = 0;
    int s() const { return 0; }
    int w(int i) const { return 1 + 5 * (i - 1); }
    int v(int i) const { return 1 + 5 * (i - 1) + 1; }
    int vbar(int i) const { return 1 + 5 * (i - 1) + 2; }
    int y(int i) const { return 1 + 5 * (i - 1) + 3; }
    int ybar(int i) const { return 1 + 5 * (i - 1) + 4; }
    int a(int j) const { return 1 + 5 * nvars + 3 * (j - 1); }
    int b(int j) const { return 1 + 5 * nvars + 3 * (j - 1) + 1; }
    int c(int j) const { return 1 + 5 * nvars + 3 * (j - 1) + 2; }
    int literal(int lit) const { return lit > 0 ? v(lit) : vbar(-lit); }
};

inline std::pair<Graph, VertexSet> gen_sat_gadget(const Formula& f) {
    f.validate();
    SatGadgetIds id{f.nvars};
    int n = f.nvars;
    int m = static_cast<int>(f.clauses.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(id.v(i), id.s());
        edges.emplace_back(id.vbar(i), id.s());
        edges.emplace_back(id.v(i), id.vbar(i));
        edges.emplace_back(id.v(i), id.y(i));
        edges.emplace_back(id.vbar(i), id.ybar(i));
        edges.emplace_back(id.w(i), id.y(i));
        edges.emplace_back(id.w(i), id.ybar(i));
    }
    for (int j = 1; j <= m; ++j) {
        const auto& cl = f.clauses[j - 1];
        edges.emplace_back(id.b(j), id.a(j));
        edges.emplace_back(id.a(j), id.c(j));
        edges.emplace_back(id.b(j), id.literal(cl[0]));
        edges.emplace_back(id.b(j), id.literal(cl[1]));
        edges.emplace_back(id.a(j), id.literal(cl[2]));
    }
    std::vector<int> u;
    for (int i = 1; i <= n; ++i) u.push_back(id.w(i));
    return {Graph(5 * n + 3 * m + 1, edges), VertexSet(std::move(u))};
}

// Split graph of a hitting-set instance: the ground set becomes a clique,
// each hyperedge a simplicial vertex adjacent to its members.
inline std::pair<Graph, VertexSet> gen_hs_split(int ground, std::span<const VertexSet> sets,
                                                const VertexSet& u) {
    require(ground >= 1, "ground set must be nonempty");
    for (const VertexSet& s : sets) {
        require(!s.empty(), "empty hyperedge");
        for (int e : s) require(e >= 0 && e < ground, "hyperedge element out of range");
    }
    for (int e : u) require(e >= 0 && e < ground, "extension element out of range");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < ground; ++i)
        for (int j = i + 1; j < ground; ++j) edges.emplace_back(i, j);
    for (std::size_t j = 0; j < sets.size(); ++j)
        for (int e : sets[j]) edges.emplace_back(ground + static_cast<int>(j), e);
    return {Graph(ground + static_cast<int>(sets.size()), edges), u};
}

// Connected random graph with degeneracy at most d: vertex i picks
// min(d, i) distinct earlier neighbors. Sampling uses plain modular draws
// from mt19937 so equal seeds give byte-identical graphs everywhere.
inline Graph gen_random_degenerate(int n, int d, std::uint64_t seed) {
    require(n >= 1, "need at least one vertex");
    require(d >= 1, "attachment degree must be positive");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> pool;
    for (int i = 1; i < n; ++i) {
        int k = std::min(d, i);
        pool.resize(i);
        std::iota(pool.begin(), pool.end(), 0);
        for (int j = 0; j < k; ++j) {
            int pick = j + static_cast<int>(rng() % static_cast<std::uint64_t>(i - j));
            std::swap(pool[j], pool[pick]);
            edges.emplace_back(pool[j], i);
        }
    }
    return Graph(n, edges);
}

// DIMACS cnf: `p cnf <nvars> <nclauses>`, clauses as whitespace-separated
// literals terminated by 0; clauses shorter than three literals are padded
// by repeating the first one.
inline Formula read_dimacs_cnf(std::istream& in) {
    Formula f;
    bool have_header = false;
    std::vector<int> current;
    std::string line;
    int lineno = 0;
    int declared = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> f.nvars >> declared) || fmt != "cnf")
                throw input_error("line " + std::to_string(lineno) + ": bad cnf header");
            have_header = true;
            continue;
        }
        if (!have_header) throw input_error("clause before cnf header");
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                require(!current.empty(), "empty clause");
                require(current.size() <= 3, "clause with more than three literals");
                while (current.size() < 3) current.push_back(current.front());
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    require(current.empty(), "clause not terminated by 0");
    f.validate();
    return f;
}

// Hypergraph text format: `h <ground> <m>`, then m lines of space-separated
// 0-based element ids.
inline HitSystem read_hit_system(std::istream& in) {
    HitSystem hs;
    std::string line;
    int lineno = 0;
    int m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (m < 0) {
            std::string h;
            if (!(ls >> h >> hs.ground >> m) || h != "h" || hs.ground < 0 || m < 0)
                throw input_error("line " + std::to_string(lineno) + ": bad hypergraph header");
            continue;
        }
        std::vector<int> ids;
        int e;
        while (ls >> e) {
            require(e >= 0 && e < hs.ground, "hyperedge element out of range");
            ids.push_back(e);
        }
        require(!ids.empty(), "empty hyperedge");
        hs.sets.emplace_back(std::move(ids));
    }
    require(m >= 0, "missing hypergraph header");
    if (static_cast<int>(hs.sets.size()) != m)
        throw input_error("hyperedge count does not match header");
    return hs;
}

} // namespace cds
