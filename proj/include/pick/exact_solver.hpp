#pragma once

// Exact solvers for the two completion problems: an exhaustive oracle
// (tries non-edge subsets by increasing size) and a branching solver
// that destroys forbidden subgraphs, pruning long holes with the
// "q - 3 edges to triangulate an induced q-cycle" lower bound.

#include <optional>

#include "graph.hpp"
#include "obstructions.hpp"
#include "recognition.hpp"

namespace pick {

enum class Problem { pic, bcc };

inline bool in_target_class(const Graph& g, Problem p)
{
    return p == Problem::pic ? is_proper_interval(g) : is_biclique_chain(g).has_value();
}

// Smallest completion size <= cap, or nothing if every completion needs
// more than cap edges.  Exhaustive; meant for small instances.
inline std::optional<int> oracle_opt(const Graph& g, Problem p, int cap)
{
    if (in_target_class(g, p))
        return 0;
    EdgeSet non;
    {
        VertexSet vs = g.vertices();
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (!g.has_edge(vs[i], vs[j]))
                    non.emplace_back(vs[i], vs[j]);
    }
    int m = static_cast<int>(non.size());
    Graph work = g;
    for (int size = 1; size <= std::min(cap, m); ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            for (int i : idx)
                work.add_edge(non[i].first, non[i].second);
            bool ok = in_target_class(work, p);
            for (int i : idx)
                work.remove_edge(non[i].first, non[i].second);
            if (ok)
                return size;
            // next combination in lexicographic order
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == m - size + pos)
                --pos;
            if (pos < 0)
                break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i)
                idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

struct Solution {
    bool feasible = false;
    EdgeSet completion; // when feasible
};

struct SearchStats {
    long nodes = 0;
    long hole_prunes = 0;
    long chord_branches = 0;
};

namespace detail {

inline std::optional<Obstruction> next_obstruction(const Graph& g, Problem p)
{
    if (p == Problem::pic) {
        if (auto o = find_claw(g))
            return o;
        if (auto o = find_induced_c4(g))
            return o;
        if (auto o = find_net(g))
            return o;
        if (auto o = find_3sun(g))
            return o;
        if (auto o = find_hole(g)) // length >= 5 here, C4s were caught above
            return o;
        return std::nullopt;
    }
    return bcc_certificate(g);
}

inline bool branch_rec(Graph& g, Problem p, int k, EdgeSet& added, SearchStats& st)
{
    ++st.nodes;
    auto obs = next_obstruction(g, p);
    if (!obs)
        return true;
    if (k <= 0)
        return false;
    if (obs->kind == ObstructionKind::hole) {
        int q = static_cast<int>(obs->vertices.size());
        if (q - 3 > k) {
            ++st.hole_prunes;
            return false;
        }
    }
    // branch on every missing pair inside the obstruction
    const std::vector<int>& vs = obs->vertices;
    EdgeSet missing;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j]))
                missing.push_back(make_edge(vs[i], vs[j]));
    std::sort(missing.begin(), missing.end());
    for (Edge e : missing) {
        if (obs->kind == ObstructionKind::hole)
            ++st.chord_branches;
        g.add_edge(e.first, e.second);
        added.push_back(e);
        if (branch_rec(g, p, k - 1, added, st))
            return true;
        added.pop_back();
        g.remove_edge(e.first, e.second);
    }
    return false;
}

} // namespace detail

// Decision search: is there a completion of size <= k?
inline Solution branch_solve(const Graph& g, Problem p, int k, SearchStats* stats = nullptr)
{
    if (k < 0)
        throw std::invalid_argument("branch_solve: negative budget");
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    Graph work = g;
    Solution sol;
    if (detail::branch_rec(work, p, k, sol.completion, st))
        sol.feasible = true;
    else
        sol.completion.clear();
    return sol;
}

// Optimize mode: decision with increasing budget.
inline int solve_optimum(const Graph& g, Problem p, SearchStats* stats = nullptr)
{
    int n = g.vertex_count();
    int maxk = n * (n - 1) / 2 - static_cast<int>(g.edge_count());
    for (int k = 0;; ++k) {
        if (k > maxk)
            throw std::logic_error("solve_optimum: no completion up to the complete graph");
        if (branch_solve(g, p, k, stats).feasible)
            return k;
    }
}

inline bool verify_solution(const Graph& g, Problem p, const EdgeSet& f)
{
    Graph work = g;
    for (auto [u, v] : f) {
        if (work.has_edge(u, v))
            throw std::invalid_argument("completion overlaps an existing edge");
        work.add_edge(u, v);
    }
    return in_target_class(work, p);
}

} // namespace pick
