#pragma once

// Proper interval recognition via umbrella orderings, plus bi-clique
// chain recognition on top of it.
//
// An ordering is an umbrella ordering iff every closed neighborhood is a
// contiguous block of positions; that equivalence is what the fast checks
// use.  Orderings are canonical: true-twin classes are contracted first
// (they are consecutive and interchangeable), each connected component is
// ordered greedily from an end vertex, and the lexicographically smaller
// of an ordering and its reversal is returned.

#include <numeric>
#include <optional>

#include "graph.hpp"

namespace pick {

struct UmbrellaViolation {
    int i, l, j; // positions in the checked order, i < l < j
};

namespace detail {

// Quotient structure: one node per true-twin class.
struct TwinQuotient {
    std::vector<VertexSet> classes;      // members, ascending ids
    std::vector<std::vector<uint64_t>> row;   // class adjacency over class indices
    int words = 0;
    int size() const { return static_cast<int>(classes.size()); }
    bool adj(int a, int b) const { return (row[a][b >> 6] >> (b & 63)) & 1u; }
};

inline TwinQuotient twin_quotient(const Graph& g)
{
    TwinQuotient q;
    q.classes = true_twin_classes(g);
    int k = q.size();
    q.words = (k + 63) / 64;
    q.row.assign(k, std::vector<uint64_t>(q.words, 0));
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.has_edge(q.classes[a][0], q.classes[b][0])) {
                set_bit(q.row[a], b);
                set_bit(q.row[b], a);
            }
    return q;
}

// Contiguity check over class positions: umbrella iff every closed
// neighborhood is an interval of the order.
inline bool umbrella_on_quotient(const TwinQuotient& q, const std::vector<int>& order)
{
    int len = static_cast<int>(order.size());
    std::vector<int> pos(q.size(), -1);
    for (int p = 0; p < len; ++p)
        pos[order[p]] = p;
    for (int p = 0; p < len; ++p) {
        int c = order[p];
        int lo = p, hi = p, cnt = 1;
        for (int d = 0; d < q.size(); ++d)
            if (q.adj(c, d)) {
                lo = std::min(lo, pos[d]);
                hi = std::max(hi, pos[d]);
                ++cnt;
            }
        if (hi - lo + 1 != cnt)
            return false;
    }
    return true;
}

// Greedy umbrella construction within one (connected) class component,
// starting from a fixed end class.  Returns the class order or nothing.
inline std::optional<std::vector<int>> greedy_from(const TwinQuotient& q,
                                                   const std::vector<int>& comp, int start)
{
    int k = q.size();
    std::vector<uint64_t> placed((k + 63) / 64, 0), unplaced((k + 63) / 64, 0);
    for (int c : comp)
        set_bit(unplaced, c);

    std::vector<int> minplaced(k, -1); // position of leftmost placed neighbor
    std::vector<int> order;
    order.reserve(comp.size());

    auto place = [&](int c) {
        clear_bit(unplaced, c);
        set_bit(placed, c);
        for (int d : comp)
            if (q.adj(c, d) && minplaced[d] < 0)
                minplaced[d] = static_cast<int>(order.size());
        order.push_back(c);
    };
    place(start);

    while (order.size() < comp.size()) {
        int cur = order.back();
        // candidates: unplaced neighbors of the last placed class
        std::vector<int> cand;
        for (int d : comp)
            if (test_bit(unplaced, d) && q.adj(cur, d))
                cand.push_back(d);
        if (cand.empty())
            return std::nullopt;

        int best = -1, bestmin = 0, bestun = 0;
        for (int c : cand) {
            int un = popcount_and(q.row[c].data(), unplaced.data(), q.words);
            if (best < 0 || minplaced[c] < bestmin || (minplaced[c] == bestmin && un < bestun)) {
                best = c;
                bestmin = minplaced[c];
                bestun = un;
            }
        }
        // best must dominate every other candidate: adjacent to it, reach
        // at least as far left among placed classes, at most as far right
        // among unplaced ones (closed neighborhoods)
        for (int c : cand) {
            if (c == best)
                continue;
            if (!q.adj(best, c))
                return std::nullopt;
            for (int w = 0; w < q.words; ++w) {
                uint64_t extra = (q.row[best][w] & unplaced[w]) & ~q.row[c][w];
                if (w == (c >> 6))
                    extra &= ~(uint64_t(1) << (c & 63)); // c covers itself
                if (extra)
                    return std::nullopt;
            }
            // placed neighborhoods must nest: N_placed(c) subset of N_placed(best)
            for (int w = 0; w < q.words; ++w)
                if ((q.row[c][w] & placed[w]) & ~q.row[best][w])
                    return std::nullopt;
        }
        place(best);
    }
    return order;
}

inline std::vector<int> expand_classes(const TwinQuotient& q, const std::vector<int>& class_order)
{
    std::vector<int> out;
    for (int c : class_order)
        for (int v : q.classes[c])
            out.push_back(v);
    return out;
}

} // namespace detail

// Umbrella ordering of the live vertices, or nothing if g is not a
// proper interval graph.  Deterministic; true-twin classes come out
// consecutive.
inline std::optional<std::vector<int>> umbrella_ordering(const Graph& g)
{
    if (g.vertex_count() == 0)
        return std::vector<int>{};
    detail::TwinQuotient q = detail::twin_quotient(g);
    int k = q.size();

    // class components
    std::vector<int> compof(k, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < k; ++s) {
        if (compof[s] >= 0)
            continue;
        std::vector<int> comp{s}, stack{s};
        compof[s] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int d = 0; d < k; ++d)
                if (q.adj(c, d) && compof[d] < 0) {
                    compof[d] = compof[s];
                    comp.push_back(d);
                    stack.push_back(d);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }

    std::vector<std::vector<int>> pieces;
    for (auto& comp : comps) {
        // double-BFS endpoint heuristic first, then every class as start
        std::vector<int> starts;
        {
            auto bfs_far = [&](int s) {
                std::vector<int> dist(k, -1), queue{s};
                dist[s] = 0;
                int far = s;
                for (size_t h = 0; h < queue.size(); ++h) {
                    int c = queue[h];
                    for (int d : comp)
                        if (q.adj(c, d) && dist[d] < 0) {
                            dist[d] = dist[c] + 1;
                            queue.push_back(d);
                            if (dist[d] > dist[far] || (dist[d] == dist[far] && d < far))
                                far = d;
                        }
                }
                return far;
            };
            starts.push_back(bfs_far(bfs_far(comp[0])));
            for (int c : comp)
                if (c != starts[0])
                    starts.push_back(c);
        }

        std::optional<std::vector<int>> found;
        for (int s : starts) {
            auto ord = detail::greedy_from(q, comp, s);
            if (ord && detail::umbrella_on_quotient(q, *ord)) {
                found = std::move(ord);
                break;
            }
        }
        if (!found)
            return std::nullopt;

        std::vector<int> fwd = detail::expand_classes(q, *found);
        std::vector<int> rev_classes(found->rbegin(), found->rend());
        std::vector<int> bwd = detail::expand_classes(q, rev_classes);
        pieces.push_back(std::min(fwd, bwd));
    }

    std::sort(pieces.begin(), pieces.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    std::vector<int> order;
    for (auto& p : pieces)
        order.insert(order.end(), p.begin(), p.end());
    return order;
}

inline bool is_proper_interval(const Graph& g) { return umbrella_ordering(g).has_value(); }

namespace detail {

inline void require_permutation(const Graph& g, const std::vector<int>& order)
{
    VertexSet vs = g.vertices();
    VertexSet sorted(order);
    std::sort(sorted.begin(), sorted.end());
    if (sorted != vs)
        throw std::invalid_argument("order is not a permutation of the live vertices");
}

// fast boolean check: every closed neighborhood contiguous in the order
inline bool umbrella_holds(const Graph& g, const std::vector<int>& order)
{
    int n = static_cast<int>(order.size());
    std::vector<int> pos(g.capacity(), -1);
    for (int p = 0; p < n; ++p)
        pos[order[p]] = p;
    for (int p = 0; p < n; ++p) {
        int lo = p, hi = p, cnt = 1;
        for (int w : g.neighbors(order[p])) {
            lo = std::min(lo, pos[w]);
            hi = std::max(hi, pos[w]);
            ++cnt;
        }
        if (hi - lo + 1 != cnt)
            return false;
    }
    return true;
}

} // namespace detail

// First violating triple in lexicographic (i, l, j) position order.
inline std::optional<UmbrellaViolation> umbrella_violation(const Graph& g, const std::vector<int>& order)
{
    detail::require_permutation(g, order);
    if (detail::umbrella_holds(g, order))
        return std::nullopt;
    int n = static_cast<int>(order.size());
    for (int i = 0; i < n; ++i)
        for (int l = i + 1; l < n; ++l)
            for (int j = l + 1; j < n; ++j)
                if (g.has_edge(order[i], order[j]) &&
                    (!g.has_edge(order[i], order[l]) || !g.has_edge(order[l], order[j])))
                    return UmbrellaViolation{i, l, j};
        // unreachable: umbrella_holds said there is a violation
    throw std::logic_error("umbrella_violation: inconsistent checks");
}

inline bool verify_umbrella(const Graph& g, const std::vector<int>& order)
{
    detail::require_permutation(g, order);
    return detail::umbrella_holds(g, order);
}

// Edges whose span is not nested inside any other edge's span.
inline EdgeSet extremal_edges(const Graph& g, const std::vector<int>& order)
{
    if (!verify_umbrella(g, order))
        throw std::invalid_argument("extremal_edges: order is not an umbrella ordering");
    int n = static_cast<int>(order.size());
    std::vector<int> pos(g.capacity(), -1);
    for (int p = 0; p < n; ++p)
        pos[order[p]] = p;
    EdgeSet out;
    int prefmax = -1; // furthest right endpoint among earlier left ends
    for (int i = 0; i < n; ++i) {
        int r = i;
        for (int w : g.neighbors(order[i]))
            r = std::max(r, pos[w]);
        if (r > i && r > prefmax)
            out.push_back(make_edge(order[i], order[r]));
        prefmax = std::max(prefmax, r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct BicliqueChainWitness {
    std::vector<int> order; // umbrella ordering
    int split;              // order[0..split) and order[split..) are cliques
};

// Two cliques linked by a join; equivalently no induced C4, C5 or 3K1.
inline std::optional<BicliqueChainWitness> is_biclique_chain(const Graph& g)
{
    auto ord = umbrella_ordering(g);
    if (!ord)
        return std::nullopt;
    const std::vector<int>& o = *ord;
    int n = static_cast<int>(o.size());
    for (int s = 0; s <= n; ++s) {
        bool pre = s <= 1 || g.has_edge(o[0], o[s - 1]);
        bool suf = n - s <= 1 || g.has_edge(o[s], o[n - 1]);
        if (pre && suf)
            return BicliqueChainWitness{o, s};
    }
    return std::nullopt;
}

} // namespace pick
