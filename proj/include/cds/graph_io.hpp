#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "cds/graph.hpp"

namespace cds {

struct DimacsGraph {
    Graph graph;
    // Optional required-vertex annotation carried as a `c U ...` comment.
    std::optional<VertexSet> u;
};

// DIMACS edge format: `p edge <n> <m>`, then `e <u> <v>` lines with 1-based
// ids. Comment lines start with `c`; a `c U <ids...>` line is parsed as a
// vertex-set annotation. Duplicate edges are merged.
inline DimacsGraph read_dimacs(std::istream& in) {
    int n = -1;
    long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    std::optional<VertexSet> u;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") {
            std::string what;
            if (ls >> what && what == "U") {
                std::vector<int> ids;
                int id;
                while (ls >> id) ids.push_back(id - 1);
                u = VertexSet(std::move(ids));
            }
            continue;
        }
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m) || (fmt != "edge" && fmt != "edges" && fmt != "col"))
                throw input_error("line " + std::to_string(lineno) + ": bad problem line");
            require(n >= 0, "negative vertex count");
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw input_error("edge before problem line");
            int a, b;
            if (!(ls >> a >> b))
                throw input_error("line " + std::to_string(lineno) + ": bad edge line");
            if (a < 1 || a > n || b < 1 || b > n)
                throw input_error("line " + std::to_string(lineno) + ": endpoint out of range");
            edges.emplace_back(a - 1, b - 1);
            continue;
        }
        throw input_error("line " + std::to_string(lineno) + ": unknown line type '" + tag + "'");
    }
    if (n < 0) throw input_error("missing problem line");
    DimacsGraph out{Graph(n, edges), std::move(u)};
    if (out.u) check_vertex_set(out.graph, *out.u);
    return out;
}

inline void write_dimacs(std::ostream& os, const Graph& g,
                         const std::optional<VertexSet>& u = std::nullopt) {
    os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    if (u) {
        os << "c U";
        for (int v : *u) os << ' ' << v + 1;
        os << '\n';
    }
    for (auto [a, b] : g.edges()) os << "e " << a + 1 << ' ' << b + 1 << '\n';
}

} // namespace cds
