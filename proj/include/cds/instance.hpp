#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cds/graph.hpp"

namespace cds {

// Per-vertex state of one search-tree node. Transitions only ever go
//   UndecidedUndominated -> {UndecidedDominated, OutUndominated, OutDominated, InSolution}
//   UndecidedDominated   -> {OutDominated, InSolution}
//   OutUndominated       -> OutDominated
// so no vertex ever leaves the solution or the discarded side.
enum class Status : std::uint8_t {
    UndecidedUndominated, // V'_n
    UndecidedDominated,   // V'_d
    OutUndominated,       // O_n
    OutDominated,         // O_d
    InSolution,           // S
};

// One node of the branch-and-reduce search tree: the vertex partition, a
// working graph G' (partial graph of G[V' u O_n], shrinks under the
// edge-deletion rules), the connected components of G[S] in the base graph,
// and disjunctive commitments ("at least one of these ends in S").
class Instance {
public:
    Instance() = default;

    // The instance keeps a pointer to the base graph, which must outlive it.
    static Instance root(Graph&&, int) = delete;
    static Instance from_status(Graph&&, std::span<const Status>) = delete;

    // Root instance for start vertex i: vertices below i are discarded,
    // i goes into the solution, the rest stay undecided.
    static Instance root(const Graph& g, int i) {
        Instance inst;
        inst.init_base(g);
        for (int v = 0; v < g.order(); ++v) {
            bool dominated = g.adjacent(v, i) || v == i;
            if (v == i)
                inst.status_[v] = Status::InSolution;
            else if (v < i)
                inst.status_[v] = dominated ? Status::OutDominated : Status::OutUndominated;
            else
                inst.status_[v] = dominated ? Status::UndecidedDominated : Status::UndecidedUndominated;
        }
        inst.finish_init();
        return inst;
    }

    // Arbitrary consistent state; used to drive single rules in isolation.
    // The working graph starts as the full G[V' u O_n].
    static Instance from_status(const Graph& g, std::span<const Status> status) {
        require(static_cast<int>(status.size()) == g.order(), "status size mismatch");
        Instance inst;
        inst.init_base(g);
        std::copy(status.begin(), status.end(), inst.status_.begin());
        inst.finish_init();
        for (int v = 0; v < g.order(); ++v) {
            bool dominated = (g.adjacency_mask(v) & inst.s_) != 0;
            bool marked = inst.status_[v] == Status::UndecidedDominated ||
                          inst.status_[v] == Status::OutDominated;
            if (inst.status_[v] != Status::InSolution && dominated != marked)
                throw input_error("status disagrees with domination by S");
        }
        return inst;
    }

    const Graph& base() const { return *base_; }
    Status status(int v) const { return status_[v]; }

    mask_t undecided_undominated() const { return vn_; }
    mask_t undecided_dominated() const { return vd_; }
    mask_t undecided() const { return vn_ | vd_; }
    mask_t out_undominated() const { return on_; }
    mask_t solution() const { return s_; }
    mask_t active() const { return vn_ | vd_ | on_; } // vertex set of G'

    // G'-neighborhood of an active vertex.
    mask_t work_adjacency(int v) const { return work_[v]; }

    int component_count() const { return comp_count_; }
    int component_of(int v) const { return comp_[v]; }

    // Distinct components of G[S] adjacent to v in the base graph.
    std::vector<int> adjacent_components(int v) const {
        std::vector<int> reps;
        for_bits(base_->adjacency_mask(v) & s_, [&](int w) {
            int r = comp_[w];
            bool seen = false;
            for (int x : reps) seen |= (x == r);
            if (!seen) reps.push_back(r);
        });
        return reps;
    }

    const std::vector<mask_t>& commitments() const { return commitments_; }

    VertexSet solution_set() const { return VertexSet::of_mask(s_); }

    // --- mutations used by rule expansion -------------------------------

    void delete_work_edge(int u, int v) {
        check_internal((work_[u] & bit(v)) != 0, "deleting a non-edge of G'");
        work_[u] &= ~bit(v);
        work_[v] &= ~bit(u);
    }

    void to_solution(int v) {
        Status st = status_[v];
        check_internal(st == Status::UndecidedUndominated || st == Status::UndecidedDominated,
                       "only undecided vertices can enter the solution");
        set_status(v, Status::InSolution);
        drop_from_work(v);
        // merge the S-components v touches; the representative is the
        // smallest vertex id involved, so ids are reproducible
        std::vector<int> reps = adjacent_components(v);
        if (reps.empty()) {
            comp_[v] = v;
            ++comp_count_;
        } else {
            int rep = v;
            for (int r : reps) rep = std::min(rep, r);
            for (int r : reps)
                if (r != rep) relabel(r, rep);
            comp_[v] = rep;
            comp_count_ -= static_cast<int>(reps.size()) - 1;
        }
        // v now dominates its base neighbors
        for_bits(base_->adjacency_mask(v), [&](int w) {
            if (status_[w] == Status::UndecidedUndominated) {
                set_status(w, Status::UndecidedDominated);
            } else if (status_[w] == Status::OutUndominated) {
                set_status(w, Status::OutDominated);
                drop_from_work(w);
            }
        });
    }

    void to_out_dominated(int v) {
        Status st = status_[v];
        if (st == Status::OutDominated) return; // already moved by an S-addition
        check_internal(st != Status::InSolution, "solution vertex cannot be discarded");
        check_internal((base_->adjacency_mask(v) & s_) != 0,
                       "OutDominated requires an S-neighbor");
        set_status(v, Status::OutDominated);
        drop_from_work(v);
    }

    // "Put v into O": O_d if v has an S-neighbor by now, O_n otherwise.
    void to_out_auto(int v) {
        if (base_->adjacency_mask(v) & s_) {
            to_out_dominated(v);
        } else {
            check_internal(status_[v] == Status::UndecidedUndominated,
                           "undominated out-placement expects a V'_n vertex");
            set_status(v, Status::OutUndominated);
        }
    }

    void add_commitment(mask_t m) { commitments_.push_back(m); }

    // Drops discarded vertices from every commitment. Returns false if some
    // commitment can no longer be met (all members discarded), which kills
    // the instance.
    bool normalize_commitments() {
        mask_t alive = vn_ | vd_ | s_;
        std::size_t keep = 0;
        for (mask_t cm : commitments_) {
            cm &= alive;
            if (cm & s_) continue; // satisfied
            if (cm == 0) return false;
            commitments_[keep++] = cm;
        }
        commitments_.resize(keep);
        return true;
    }

    // Full consistency check; test instrumentation, not part of search.
    void validate() const {
        const Graph& g = *base_;
        mask_t all = full_mask(g.order());
        check_internal((vn_ & vd_) == 0 && ((vn_ | vd_) & (on_ | s_)) == 0 && (on_ & s_) == 0,
                       "status masks overlap");
        int comps_expected = 0;
        std::vector<char> seen(g.order(), 0);
        for_bits(s_, [&](int v) {
            if (seen[v]) return;
            ++comps_expected;
            int rep = comp_[v];
            std::vector<int> stack{v};
            seen[v] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                check_internal(comp_[x] == rep, "component labels disagree");
                for_bits(g.adjacency_mask(x) & s_, [&](int w) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                });
            }
        });
        check_internal(comps_expected == comp_count_, "component count is stale");
        for (int v = 0; v < g.order(); ++v) {
            Status st = status_[v];
            bool dominated = (g.adjacency_mask(v) & s_) != 0;
            if (st == Status::UndecidedDominated || st == Status::OutDominated)
                check_internal(dominated, "dominated status without S-neighbor");
            if (st == Status::UndecidedUndominated || st == Status::OutUndominated)
                check_internal(!dominated, "undominated status with S-neighbor");
            check_internal((work_[v] & ~g.adjacency_mask(v)) == 0, "work edge outside base graph");
            if (!(active() & bit(v)))
                check_internal(work_[v] == 0, "inactive vertex keeps work edges");
            else
                check_internal((work_[v] & ~active() & all) == 0, "work edge leaves G'");
        }
        for (mask_t cm : commitments_)
            check_internal(cm != 0 && (cm & ~(vn_ | vd_ | s_)) == 0,
                           "commitment references discarded vertices");
    }

private:
    void init_base(const Graph& g) {
        require(g.order() >= 1, "empty graph");
        require(g.order() <= 64, "the enumeration engine supports at most 64 vertices");
        base_ = &g;
        status_.assign(g.order(), Status::UndecidedUndominated);
        work_.assign(g.order(), 0);
        comp_.assign(g.order(), -1);
    }

    // Recomputes masks, the working graph and S-components from status_.
    void finish_init() {
        const Graph& g = *base_;
        vn_ = vd_ = on_ = s_ = 0;
        for (int v = 0; v < g.order(); ++v) {
            switch (status_[v]) {
            case Status::UndecidedUndominated: vn_ |= bit(v); break;
            case Status::UndecidedDominated: vd_ |= bit(v); break;
            case Status::OutUndominated: on_ |= bit(v); break;
            case Status::OutDominated: break;
            case Status::InSolution: s_ |= bit(v); break;
            }
        }
        mask_t act = active();
        for (int v = 0; v < g.order(); ++v)
            work_[v] = (act & bit(v)) ? (g.adjacency_mask(v) & act) : 0;
        comp_count_ = 0;
        std::fill(comp_.begin(), comp_.end(), -1);
        for_bits(s_, [&](int v) {
            if (comp_[v] != -1) return;
            ++comp_count_;
            int rep = v;
            std::vector<int> stack{v};
            comp_[v] = rep;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for_bits(g.adjacency_mask(x) & s_, [&](int w) {
                    if (comp_[w] == -1) {
                        comp_[w] = rep;
                        stack.push_back(w);
                    }
                });
            }
        });
    }

    void set_status(int v, Status st) {
        switch (status_[v]) {
        case Status::UndecidedUndominated: vn_ &= ~bit(v); break;
        case Status::UndecidedDominated: vd_ &= ~bit(v); break;
        case Status::OutUndominated: on_ &= ~bit(v); break;
        case Status::OutDominated: break;
        case Status::InSolution: s_ &= ~bit(v); break;
        }
        status_[v] = st;
        switch (st) {
        case Status::UndecidedUndominated: vn_ |= bit(v); break;
        case Status::UndecidedDominated: vd_ |= bit(v); break;
        case Status::OutUndominated: on_ |= bit(v); break;
        case Status::OutDominated: break;
        case Status::InSolution: s_ |= bit(v); break;
        }
    }

    void drop_from_work(int v) {
        for_bits(work_[v], [&](int w) { work_[w] &= ~bit(v); });
        work_[v] = 0;
    }

    void relabel(int from, int to) {
        for_bits(s_, [&](int w) {
            if (comp_[w] == from) comp_[w] = to;
        });
    }

    const Graph* base_ = nullptr;
    std::vector<Status> status_;
    std::vector<mask_t> work_;
    std::vector<int> comp_;
    std::vector<mask_t> commitments_;
    mask_t vn_ = 0, vd_ = 0, on_ = 0, s_ = 0;
    int comp_count_ = 0;
};

} // namespace cds
