#pragma once

// Deterministic instance generators.  Bounded draws avoid
// uniform_int_distribution, whose mapping differs across standard
// libraries; identical seeds must give identical bytes everywhere.

#include <random>

#include "graph.hpp"
#include "recognition.hpp"

namespace pick {

class DetRng {
public:
    explicit DetRng(uint32_t seed) : eng_(seed) {}
    uint32_t below(uint32_t n) // in [0, n)
    {
        uint64_t x = eng_();
        return static_cast<uint32_t>((x * n) >> 32);
    }
    bool chance(double p) { return eng_() < p * 4294967296.0; }

private:
    std::mt19937 eng_;
};

inline Graph gen_gnp(int n, double p, uint32_t seed)
{
    DetRng rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(p))
                g.add_edge(i, j);
    return g;
}

inline Graph gen_path(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline Graph gen_cycle(int n)
{
    Graph g = gen_path(n);
    if (n >= 3)
        g.add_edge(0, n - 1);
    return g;
}

inline Graph gen_star(int n) // n vertices total: center 0
{
    Graph g(n);
    for (int i = 1; i < n; ++i)
        g.add_edge(0, i);
    return g;
}

namespace detail {

inline Graph relabel_random(const Graph& g, DetRng& rng)
{
    int n = g.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(i + 1)]);
    Graph h(n);
    for (auto [u, v] : g.edges())
        h.add_edge(perm[u], perm[v]);
    return h;
}

inline Graph delete_random_edges(Graph g, int edits, DetRng& rng)
{
    for (int e = 0; e < edits; ++e) {
        EdgeSet es = g.edges();
        if (es.empty())
            break;
        Edge del = es[rng.below(static_cast<uint32_t>(es.size()))];
        g.remove_edge(del.first, del.second);
    }
    return g;
}

} // namespace detail

// Random proper interval graph (a random umbrella realization) minus
// `edits` random edges, relabeled: positive at k = edits by construction.
inline Graph gen_planted_pic(int n, int edits, uint32_t seed)
{
    DetRng rng(seed);
    Graph g(n);
    int reach = 0;
    for (int i = 0; i < n; ++i) {
        reach = std::max(reach, i);
        reach = std::min(n - 1, reach + static_cast<int>(rng.below(3)));
        for (int j = i + 1; j <= reach; ++j)
            g.add_edge(i, j);
    }
    g = detail::delete_random_edges(std::move(g), edits, rng);
    return detail::relabel_random(g, rng);
}

// Random bi-clique chain graph (two cliques plus a nested join) minus
// `edits` random edges, relabeled.
inline Graph gen_planted_bcc(int n, int edits, uint32_t seed)
{
    DetRng rng(seed);
    int s = n / 2;
    if (n >= 4)
        s = std::max(1, std::min(n - 1, s - 1 + static_cast<int>(rng.below(3))));
    Graph g(n);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            g.add_edge(i, j);
    for (int i = s; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    int t = 0;
    for (int i = s - 1; i >= 0; --i) { // later clique-1 vertices reach further
        t = std::min(n - s, t + static_cast<int>(rng.below(3)));
        for (int j = 0; j < t; ++j)
            g.add_edge(i, s + j);
    }
    g = detail::delete_random_edges(std::move(g), edits, rng);
    return detail::relabel_random(g, rng);
}

} // namespace pick
