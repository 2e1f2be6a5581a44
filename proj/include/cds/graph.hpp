#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cds/bits.hpp"
#include "cds/errors.hpp"

namespace cds {

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids) : v_(ids) { normalize(); }
    explicit VertexSet(std::vector<int> ids) : v_(std::move(ids)) { normalize(); }

    static VertexSet of_mask(mask_t m) {
        VertexSet s;
        for_bits(m, [&](int v) { s.v_.push_back(v); });
        return s;
    }

    bool contains(int v) const {
        return std::binary_search(v_.begin(), v_.end(), v);
    }
    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    int operator[](int i) const { return v_[i]; }

    void add(int v) {
        auto it = std::lower_bound(v_.begin(), v_.end(), v);
        if (it == v_.end() || *it != v) v_.insert(it, v);
    }

    mask_t mask() const {
        mask_t m = 0;
        for (int v : v_) {
            check_internal(v >= 0 && v < 64, "VertexSet::mask needs ids < 64");
            m |= bit(v);
        }
        return m;
    }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<int>& ids() const { return v_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    void normalize() {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }
    std::vector<int> v_;
};

// Immutable simple undirected graph over vertex ids 0..n-1.
// Neighbor lists are kept sorted so every iteration order is reproducible.
class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
        require(n >= 0, "vertex count must be nonnegative");
        adj_.resize(n);
        edges_.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
            require(u != v, "self-loops are not allowed");
            if (u > v) std::swap(u, v);
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
        if (n_ > 0 && n_ <= 64) {
            masks_.assign(n_, 0);
            for (auto [u, v] : edges_) {
                masks_[u] |= bit(v);
                masks_[v] |= bit(u);
            }
        }
    }

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const {
        require(v >= 0 && v < n_, "vertex id out of range");
        return adj_[v];
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(int u, int v) const {
        require(u >= 0 && u < n_ && v >= 0 && v < n_, "vertex id out of range");
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    bool has_masks() const { return !masks_.empty() || n_ == 0; }

    // Open neighborhood as a bitmask; only for graphs with order <= 64.
    mask_t adjacency_mask(int v) const {
        require(v >= 0 && v < n_, "vertex id out of range");
        check_internal(has_masks(), "adjacency masks need order <= 64");
        return masks_[v];
    }
    mask_t closed_mask(int v) const { return adjacency_mask(v) | bit(v); }

    // Whole-graph connectivity, computed once on demand.
    bool connected() const {
        if (!connected_.has_value()) connected_ = compute_connected();
        return *connected_;
    }

private:
    bool compute_connected() const {
        if (n_ == 0) return false;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        return cnt == n_;
    }

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<mask_t> masks_;
    mutable std::optional<bool> connected_;
};

// Elimination ordering witnessing the degeneracy.
// Position i holds a vertex with at most `degeneracy` neighbors later on.
struct EliminationOrdering {
    std::vector<int> order;
    int degeneracy = 0;
};

inline VertexSet neighbors_within(const Graph& g, int v, const VertexSet& s) {
    require(v >= 0 && v < g.order(), "vertex id out of range");
    std::vector<int> out;
    for (int w : g.neighbors(v))
        if (s.contains(w)) out.push_back(w);
    return VertexSet(std::move(out));
}

// Minimum-degree-greedy elimination ordering; ties broken by lowest id.
// The maximum degree seen at removal time is exactly the degeneracy.
inline EliminationOrdering degeneracy(const Graph& g) {
    int n = g.order();
    EliminationOrdering res;
    res.order.reserve(n);
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        res.degeneracy = std::max(res.degeneracy, deg[best]);
        res.order.push_back(best);
        removed[best] = 1;
        for (int w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }
    return res;
}

namespace detail {

// Mask-based predicates used on hot paths; require g.has_masks().

inline bool is_connected_mask(const Graph& g, mask_t s) {
    if (!s) return false;
    mask_t seen = bit(lowest_bit(s));
    for (;;) {
        mask_t frontier = seen;
        mask_t grown = seen;
        for_bits(frontier, [&](int v) { grown |= g.adjacency_mask(v) & s; });
        if (grown == seen) break;
        seen = grown;
    }
    return seen == s;
}

inline bool dominates_all_mask(const Graph& g, mask_t s) {
    mask_t covered = s;
    for_bits(s, [&](int v) { covered |= g.adjacency_mask(v); });
    return covered == full_mask(g.order());
}

// CDS test without the connected-graph precondition check; empty s is false.
inline bool is_cds_mask(const Graph& g, mask_t s) {
    return s != 0 && dominates_all_mask(g, s) && is_connected_mask(g, s);
}

inline bool is_minimal_cds_mask(const Graph& g, mask_t s) {
    if (!is_cds_mask(g, s)) return false;
    bool minimal = true;
    for_bits(s, [&](int v) -> bool {
        if (is_cds_mask(g, s & ~bit(v))) {
            minimal = false;
            return false;
        }
        return true;
    });
    return minimal;
}

inline bool is_connected_generic(const Graph& g, const VertexSet& s) {
    std::vector<char> in(g.order(), 0), seen(g.order(), 0);
    for (int v : s) in[v] = 1;
    std::vector<int> stack{s[0]};
    seen[s[0]] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == s.size();
}

inline bool is_cds_generic(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    std::vector<char> covered(g.order(), 0);
    for (int v : s) {
        covered[v] = 1;
        for (int w : g.neighbors(v)) covered[w] = 1;
    }
    for (int v = 0; v < g.order(); ++v)
        if (!covered[v]) return false;
    return is_connected_generic(g, s);
}

} // namespace detail

inline void check_vertex_set(const Graph& g, const VertexSet& s) {
    for (int v : s) require(v >= 0 && v < g.order(), "vertex id out of range");
}

// Connectivity of the induced subgraph G[s]; undefined (input error) for empty s.
inline bool is_connected(const Graph& g, const VertexSet& s) {
    require(!s.empty(), "connectivity of the empty set is undefined");
    check_vertex_set(g, s);
    if (g.has_masks()) return detail::is_connected_mask(g, s.mask());
    return detail::is_connected_generic(g, s);
}

inline bool is_cds(const Graph& g, const VertexSet& s) {
    if (!g.connected()) throw disconnected_error("CDS is undefined on a disconnected graph");
    require(!s.empty(), "the empty set is never a CDS");
    check_vertex_set(g, s);
    if (g.has_masks()) return detail::is_cds_mask(g, s.mask());
    return detail::is_cds_generic(g, s);
}

// Inclusion-minimality via single-vertex removals: if some proper subset of
// s were a CDS, extending a spanning tree of it to one of G[s] leaves a
// removable leaf, so one-vertex removals suffice.
inline bool is_minimal_cds(const Graph& g, const VertexSet& s) {
    if (!g.connected()) throw disconnected_error("CDS is undefined on a disconnected graph");
    require(!s.empty(), "the empty set is never a CDS");
    check_vertex_set(g, s);
    if (g.has_masks()) return detail::is_minimal_cds_mask(g, s.mask());
    if (!detail::is_cds_generic(g, s)) return false;
    for (int v : s) {
        std::vector<int> rest;
        for (int w : s)
            if (w != v) rest.push_back(w);
        if (detail::is_cds_generic(g, VertexSet(std::move(rest)))) return false;
    }
    return true;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace cds
