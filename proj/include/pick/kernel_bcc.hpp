#pragma once

// Kernelization for bi-clique chain completion (sunflowers over 3K1s and
// 4-cycles, simple clean K-join shrinking) and bipartite chain deletion
// via complementation.

#include "kernel_pic.hpp"

namespace pick {

// Unlike the completion kernel there is no component rule here, so the
// formula keeps its literal value 4 at k = 0 (a bi-clique chain instance
// can survive reduction, e.g. 2K2).
inline long long kernel_bound_bcc(int k)
{
    if (k < 0)
        return 0;
    long long kk = k;
    return 2 * (3 * kk * kk + 6 * kk + 2) + 2 * kk;
}

// Rule 7: a non-edge shared by more than k independent triples (distinct
// third vertices) or more than k induced 4-cycles is forced.
inline bool rule_sunflower_bcc(Graph& g, int& k, EdgeSet& forced, ReductionTrace& tr)
{
    auto s = find_3k1_sunflower(g, k);
    if (!s)
        s = find_c4_sunflower(g, k);
    return detail::fire_sunflower(g, k, forced, tr, s);
}

// Rule 8: shrink a simple clean K-join of size >= 2k+3 to its k+1 first
// and k+1 last vertices.  Simple K-joins with ends u, v exist exactly
// when N(u) is inside N[v]; cleanness is against 3K1s and 4-cycles.
inline bool rule_simple_kjoin(Graph& g, ReductionTrace& tr, int k)
{
    std::vector<char> dirty = dirty_vertices(g, CleanKind::bcc);
    auto covered = [&](int u, int v) {
        for (int w : g.neighbors(u))
            if (w != v && !g.has_edge(v, w))
                return false;
        return true;
    };
    for (auto [u, v] : g.edges()) {
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            if (!covered(a, b))
                continue;
            KJoin kj = max_kjoin(g, a, b);
            KJoin clean = clean_subset_with(g, dirty, kj);
            if (clean.size() < 2 * k + 3)
                continue;
            if (!clean.left.empty() && !clean.right.empty())
                continue; // not simple
            // a clean simple K-join has its attachers and strangers forming
            // a clique; cheap necessary condition before firing
            {
                VertexSet rc(clean.left);
                rc.insert(rc.end(), clean.right.begin(), clean.right.end());
                rc.insert(rc.end(), clean.detached.begin(), clean.detached.end());
                bool cliq = true;
                for (size_t i = 0; i < rc.size() && cliq; ++i)
                    for (size_t j = i + 1; j < rc.size(); ++j)
                        if (!g.has_edge(rc[i], rc[j])) {
                            cliq = false;
                            break;
                        }
                if (!cliq)
                    continue;
            }
            ReductionEvent e;
            e.rule = "kjoin";
            e.witness_kind = "simple_clean_kjoin";
            e.witness_vertices = clean.order;
            e.removed.assign(clean.order.begin() + k + 1, clean.order.end() - (k + 1));
            std::sort(e.removed.begin(), e.removed.end());
            e.k_after = k;
            for (int w : e.removed)
                g.remove_vertex(w);
            tr.events.push_back(std::move(e));
            return true;
        }
    }
    return false;
}

inline ReduceResult reduce_bcc(const Graph& g0, int k0)
{
    if (k0 < 0)
        throw std::invalid_argument("reduce_bcc: negative budget");
    ReduceResult res;
    res.graph = g0;
    res.k = k0;
    res.trace.problem = "bcc";
    res.trace.initial_n = g0.vertex_count();
    res.trace.initial_m = g0.edge_count();
    res.trace.initial_k = k0;

    Graph& g = res.graph;
    int guard = g0.vertex_count() + k0 + 4;
    for (int iter = 0;; ++iter) {
        if (iter > guard)
            throw std::logic_error("reduce_bcc: no fixpoint within the termination bound");
        if (rule_sunflower_bcc(g, res.k, res.forced, res.trace)) {
            if (res.trace.rejected())
                break;
            continue;
        }
        if (rule_simple_kjoin(g, res.trace, res.k))
            continue;
        break;
    }
    res.trace.final_n = g.vertex_count();
    res.trace.final_m = g.edge_count();
    res.trace.final_k = res.k;
    return res;
}

// Bipartite chain deletion: complement, reduce as completion, complement
// back.  Forced completions of the complement are the forced deletions;
// they are reported in the trace's forced field.
inline ReduceResult bcd_reduce(const Graph& g0, int k0)
{
    ReduceResult res = reduce_bcc(complement(g0), k0);
    res.graph = complement(res.graph);
    res.trace.problem = "bcd";
    res.trace.initial_m = g0.edge_count();
    res.trace.final_m = res.graph.edge_count();
    return res;
}

} // namespace pick
