#pragma once

// Kernelization for proper interval completion: connected components,
// true twins, sunflowers, clean K-join shrinking, 1-branch and 2-branch
// cutting, plus the no-instance rejection tests.  The driver applies the
// rules in a fixed priority order and restarts after every change, so
// traces are deterministic.

#include "branches.hpp"
#include "trace.hpp"

namespace pick {

struct ReduceResult {
    Graph graph;   // working graph over the original ids
    int k = 0;     // residual budget
    EdgeSet forced;
    ReductionTrace trace;
    bool rejected() const { return trace.rejected(); }
};

// exact vertex count of the kernel guarantee; 0 means "already solved"
inline long long kernel_bound(int k)
{
    if (k <= 0)
        return 0;
    long long kk = k;
    long long one_branch = kk * kk * kk + 4 * kk * kk + 9 * kk + 4;
    long long kjoin = kk * kk * kk + 4 * kk * kk + 5 * kk + 1;
    return 2 * one_branch + (2 * kk - 1) * ((kk + 3) * kjoin);
}

// Rule 1: drop connected components that are proper interval graphs.
inline bool rule_cc(Graph& g, ReductionTrace& tr, int k)
{
    bool changed = false;
    for (const VertexSet& comp : connected_components(g)) {
        auto [sub, ids] = induced_subgraph(g, comp);
        if (!is_proper_interval(sub))
            continue;
        ReductionEvent e;
        e.rule = "cc";
        e.witness_kind = "component";
        e.witness_vertices = comp;
        e.removed = comp;
        e.k_after = k;
        for (int v : comp)
            g.remove_vertex(v);
        tr.events.push_back(std::move(e));
        changed = true;
    }
    return changed;
}

// Rule 2: trim every true-twin class to k+1 vertices, keeping smallest ids.
inline bool rule_twins(Graph& g, ReductionTrace& tr, int k)
{
    bool changed = false;
    for (const VertexSet& cls : true_twin_classes(g)) {
        if (static_cast<int>(cls.size()) <= k + 1)
            continue;
        ReductionEvent e;
        e.rule = "twins";
        e.witness_kind = "twin_class";
        e.witness_vertices = cls;
        e.removed.assign(cls.begin() + k + 1, cls.end());
        e.k_after = k;
        for (int v : e.removed)
            g.remove_vertex(v);
        tr.events.push_back(std::move(e));
        changed = true;
    }
    return changed;
}

namespace detail {

// shared by the pic and bcc sunflower rules
inline bool fire_sunflower(Graph& g, int& k, EdgeSet& forced, ReductionTrace& tr,
                           const std::optional<Sunflower>& s)
{
    if (!s)
        return false;
    ReductionEvent e;
    e.rule = "sunflower";
    e.witness_kind = std::string(to_string(s->kind)) + "_sunflower";
    e.witness_vertices = {s->forced.first, s->forced.second};
    e.pair = s->forced;
    e.multiplicity = s->multiplicity;
    if (k == 0) {
        // a forced edge with no budget left: no k-completion exists
        e.k_after = 0;
        tr.events.push_back(std::move(e));
        tr.status = "rejected_budget";
        return true;
    }
    g.add_edge(s->forced.first, s->forced.second);
    forced.push_back(s->forced);
    --k;
    e.forced = {s->forced};
    e.k_after = k;
    tr.events.push_back(std::move(e));
    return true;
}

} // namespace detail

// Rule 3: a non-edge shared by more than k claws (distinct third leaves)
// or more than k induced 4-cycles is forced into the completion.
inline bool rule_sunflower(Graph& g, int& k, EdgeSet& forced, ReductionTrace& tr)
{
    auto s = find_claw_sunflower(g, k);
    if (!s)
        s = find_c4_sunflower(g, k);
    return detail::fire_sunflower(g, k, forced, tr, s);
}

// Rule 4: shrink a clean K-join of size >= 2k+3 to its k+1 first and
// k+1 last vertices.
inline bool rule_kjoin(Graph& g, ReductionTrace& tr, int k)
{
    std::vector<char> dirty = dirty_vertices(g, CleanKind::pic);
    for (auto [u, v] : g.edges()) {
        KJoin kj = max_kjoin(g, u, v);
        KJoin clean = clean_subset_with(g, dirty, kj);
        if (clean.size() < 2 * k + 3)
            continue;
        ReductionEvent e;
        e.rule = "kjoin";
        e.witness_kind = "clean_kjoin";
        e.witness_vertices = clean.order;
        e.removed.assign(clean.order.begin() + k + 1, clean.order.end() - (k + 1));
        std::sort(e.removed.begin(), e.removed.end());
        e.k_after = k;
        for (int w : e.removed)
            g.remove_vertex(w);
        tr.events.push_back(std::move(e));
        return true;
    }
    return false;
}

// Rule 5: cut a 1-branch body down to its last 2k+1 vertices.
inline bool rule_1branch(Graph& g, ReductionTrace& tr, int k)
{
    for (int x : g.vertices()) {
        OneBranch ob = max_one_branch_from(g, x);
        if (ob.body_size() < 2 * k + 2)
            continue;
        ReductionEvent e;
        e.rule = "1branch";
        e.witness_kind = "one_branch";
        e.witness_vertices = ob.order;
        std::vector<int> body = ob.body();
        e.removed.assign(body.begin(), body.end() - (2 * k + 1));
        std::sort(e.removed.begin(), e.removed.end());
        e.k_after = k;
        for (int w : e.removed)
            g.remove_vertex(w);
        tr.events.push_back(std::move(e));
        return true;
    }
    return false;
}

namespace detail {

// all maximum 2-branches with a nonempty body, per component vertex/seed
template <typename F> inline void for_two_branches(const Graph& g, F&& fn)
{
    for (int x : g.vertices())
        for (const KJoin& kj : maximal_kjoins_through(g, x))
            if (auto tb = max_two_branch(g, x, kj))
                if (fn(x, *tb))
                    return;
}

} // namespace detail

// No-instance tests: an induced cycle needs length-3 fewer completions
// than its length, and a 2-branch whose decomposition has k+4 K-joins
// with both attachments in one component of G minus the body closes a
// long induced cycle.
inline std::optional<ReductionEvent> reject_long_2branch(const Graph& g, int k)
{
    if (auto h = find_hole(g)) {
        int q = static_cast<int>(h->vertices.size());
        if (q - 3 > k) {
            ReductionEvent e;
            e.rule = "reject";
            e.witness_kind = "long_hole";
            e.witness_vertices = h->vertices;
            e.k_after = k;
            return e;
        }
    }
    std::optional<ReductionEvent> out;
    detail::for_two_branches(g, [&](int x, const TwoBranch& tb) {
        (void)x;
        KJoinDecomposition dec = kjoin_decomposition(g, tb);
        if (dec.size() < k + 4)
            return false;
        Graph rest = g;
        for (int w : tb.body())
            rest.remove_vertex(w);
        // same component for both attachment cliques?
        for (const VertexSet& comp : connected_components(rest))
            if (std::binary_search(comp.begin(), comp.end(), tb.order.front()) &&
                std::binary_search(comp.begin(), comp.end(), tb.order.back())) {
                ReductionEvent e;
                e.rule = "reject";
                e.witness_kind = "two_branch_cycle";
                e.witness_vertices = tb.order;
                e.k_after = k;
                out = std::move(e);
                return true;
            }
        return false;
    });
    return out;
}

// Rule 6: inside one connected component, cut the body of a 2-branch
// whose removal disconnects the component, keeping 2k+1 body vertices
// against each attachment clique.
inline bool rule_2branch(Graph& g, ReductionTrace& tr, int k)
{
    for (const VertexSet& comp : connected_components(g)) {
        auto [cg, ids] = induced_subgraph(g, comp);
        bool fired = false;
        detail::for_two_branches(cg, [&](int x, const TwoBranch& tb) {
            (void)x;
            if (tb.body_size() < 4 * (k + 1))
                return false;
            Graph rest = cg;
            for (int w : tb.body())
                rest.remove_vertex(w);
            if (connected_components(rest).size() < 2)
                return false;
            std::vector<int> body = tb.body();
            ReductionEvent e;
            e.rule = "2branch";
            e.witness_kind = "two_branch";
            for (int v : tb.order)
                e.witness_vertices.push_back(ids[v]);
            e.removed.reserve(body.size() - 2 * (2 * k + 1));
            for (size_t i = 2 * k + 1; i + 2 * k + 1 < body.size(); ++i)
                e.removed.push_back(ids[body[i]]);
            std::sort(e.removed.begin(), e.removed.end());
            e.k_after = k;
            for (int w : e.removed)
                g.remove_vertex(w);
            tr.events.push_back(std::move(e));
            fired = true;
            return true;
        });
        if (fired)
            return true;
    }
    return false;
}

// Exhaustive application of the rules in priority order, restarting from
// the first rule after every change.
inline ReduceResult reduce(const Graph& g0, int k0)
{
    if (k0 < 0)
        throw std::invalid_argument("reduce: negative budget");
    ReduceResult res;
    res.graph = g0;
    res.k = k0;
    res.trace.problem = "pic";
    res.trace.initial_n = g0.vertex_count();
    res.trace.initial_m = g0.edge_count();
    res.trace.initial_k = k0;

    Graph& g = res.graph;
    // every change removes a vertex or spends budget
    int guard = g0.vertex_count() + k0 + 4;
    for (int iter = 0;; ++iter) {
        if (iter > guard)
            throw std::logic_error("reduce: no fixpoint within the termination bound");
        if (rule_cc(g, res.trace, res.k))
            continue;
        if (rule_twins(g, res.trace, res.k))
            continue;
        if (rule_sunflower(g, res.k, res.forced, res.trace)) {
            if (res.trace.rejected())
                break;
            continue;
        }
        if (rule_kjoin(g, res.trace, res.k))
            continue;
        if (rule_1branch(g, res.trace, res.k))
            continue;
        if (auto rej = reject_long_2branch(g, res.k)) {
            res.trace.events.push_back(std::move(*rej));
            res.trace.status = "rejected_no_instance";
            break;
        }
        if (rule_2branch(g, res.trace, res.k))
            continue;
        break; // fixpoint
    }
    res.trace.final_n = g.vertex_count();
    res.trace.final_m = g.edge_count();
    res.trace.final_k = res.k;
    return res;
}

} // namespace pick
