#pragma once

// Branch structures: K-joins, 1-branches and 2-branches, with validators
// that recompute the outside partition from scratch, and the detection
// algorithms (greedy layer growth + longest chains in the candidate
// digraph, whose equivalence classes are true twins).

#include <optional>

#include "graph.hpp"
#include "obstructions.hpp"
#include "recognition.hpp"

namespace pick {

struct KJoin {
    std::vector<int> order;        // the clique, umbrella-ordered
    VertexSet all;                 // N: adjacent to every member
    VertexSet left, right;         // L, R: prefix / suffix attachers
    VertexSet detached;            // C: no edges into the clique
    int size() const { return static_cast<int>(order.size()); }
};

struct OneBranch {
    std::vector<int> order;        // umbrella ordering of B
    int attach_start = 0;          // position of b_l; B_1 = order[attach_start..]
    VertexSet attached;            // R
    VertexSet detached;            // C
    int size() const { return static_cast<int>(order.size()); }
    int body_size() const { return attach_start; }
    std::vector<int> body() const { return {order.begin(), order.begin() + attach_start}; }
};

struct TwoBranch {
    std::vector<int> order;
    int b1_end = 0;                // position of b_l'; B_1 = order[0..b1_end]
    int b2_start = 0;              // position of b_l; B_2 = order[b2_start..]
    VertexSet left, right;         // L, R
    VertexSet all;                 // N, only when the body is empty
    VertexSet detached;            // C
    int size() const { return static_cast<int>(order.size()); }
    int body_size() const { return std::max(0, b2_start - b1_end - 1); }
    std::vector<int> body() const
    {
        if (body_size() <= 0)
            return {};
        return {order.begin() + b1_end + 1, order.begin() + b2_start};
    }
};

namespace detail {

inline bool distinct_alive(const Graph& g, const std::vector<int>& vs)
{
    std::vector<int> s(vs);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        return false;
    for (int v : vs)
        if (!g.alive(v))
            return false;
    return true;
}

// umbrella property of G[order] with this order: closed neighborhoods
// restricted to the set are contiguous position intervals
inline bool induced_umbrella(const Graph& g, const std::vector<int>& order)
{
    int m = static_cast<int>(order.size());
    std::vector<int> pos(g.capacity(), -1);
    for (int p = 0; p < m; ++p)
        pos[order[p]] = p;
    for (int p = 0; p < m; ++p) {
        int lo = p, hi = p, cnt = 1;
        for (int w : g.neighbors(order[p]))
            if (pos[w] >= 0) {
                lo = std::min(lo, pos[w]);
                hi = std::max(hi, pos[w]);
                ++cnt;
            }
        if (hi - lo + 1 != cnt)
            return false;
    }
    return true;
}

inline bool induced_connected(const Graph& g, const std::vector<int>& order)
{
    if (order.empty())
        return true;
    std::vector<int> pos(g.capacity(), -1);
    int m = static_cast<int>(order.size());
    for (int p = 0; p < m; ++p)
        pos[order[p]] = p;
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(order[p]))
            if (pos[w] >= 0 && !seen[pos[w]]) {
                seen[pos[w]] = 1;
                ++cnt;
                stack.push_back(pos[w]);
            }
    }
    return cnt == m;
}

// adjacency pattern of w against the ordered set; returns (count, lo, hi)
struct Pattern {
    int cnt = 0, lo = 0, hi = -1;
};

inline Pattern pattern_of(const Graph& g, const std::vector<int>& pos_of, int m, int w)
{
    Pattern p;
    p.lo = m;
    for (int u : g.neighbors(w)) {
        int q = pos_of[u];
        if (q < 0)
            continue;
        ++p.cnt;
        p.lo = std::min(p.lo, q);
        p.hi = std::max(p.hi, q);
    }
    return p;
}

} // namespace detail

// ---- validators: recompute the partitions, check every condition ----

inline bool validate_kjoin(const Graph& g, const std::vector<int>& order, KJoin* out = nullptr)
{
    if (!detail::distinct_alive(g, order))
        return false;
    int m = static_cast<int>(order.size());
    KJoin kj;
    kj.order = order;
    if (m == 0) {
        if (out)
            *out = std::move(kj);
        return true;
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!g.has_edge(order[i], order[j]))
                return false;
    std::vector<int> pos(g.capacity(), -1);
    for (int p = 0; p < m; ++p)
        pos[order[p]] = p;
    for (int w : g.vertices()) {
        if (pos[w] >= 0)
            continue;
        auto pat = detail::pattern_of(g, pos, m, w);
        if (pat.cnt == 0) {
            kj.detached.push_back(w);
            continue;
        }
        if (pat.cnt == m) {
            kj.all.push_back(w);
            continue;
        }
        if (pat.hi - pat.lo + 1 != pat.cnt)
            return false; // not contiguous
        if (pat.lo == 0)
            kj.left.push_back(w);
        else if (pat.hi == m - 1)
            kj.right.push_back(w);
        else
            return false; // interior attachment
    }
    if (out)
        *out = std::move(kj);
    return true;
}

inline bool validate_one_branch(const Graph& g, const std::vector<int>& order, OneBranch* out = nullptr)
{
    if (order.empty() || !detail::distinct_alive(g, order))
        return false;
    if (!detail::induced_connected(g, order) || !detail::induced_umbrella(g, order))
        return false;
    int m = static_cast<int>(order.size());
    std::vector<int> pos(g.capacity(), -1);
    for (int p = 0; p < m; ++p)
        pos[order[p]] = p;
    int attach = m - 1;
    for (int w : g.neighbors(order[m - 1]))
        if (pos[w] >= 0)
            attach = std::min(attach, pos[w]);
    OneBranch ob;
    ob.order = order;
    ob.attach_start = attach;
    for (int w : g.vertices()) {
        if (pos[w] >= 0)
            continue;
        auto pat = detail::pattern_of(g, pos, m, w);
        if (pat.cnt == 0) {
            ob.detached.push_back(w);
            continue;
        }
        // R: a suffix of the attachment clique
        if (pat.hi - pat.lo + 1 != pat.cnt || pat.hi != m - 1 || pat.lo < attach)
            return false;
        ob.attached.push_back(w);
    }
    if (out)
        *out = std::move(ob);
    return true;
}

inline bool validate_two_branch(const Graph& g, const std::vector<int>& order, TwoBranch* out = nullptr)
{
    if (order.empty() || !detail::distinct_alive(g, order))
        return false;
    if (!detail::induced_connected(g, order) || !detail::induced_umbrella(g, order))
        return false;
    int m = static_cast<int>(order.size());
    std::vector<int> pos(g.capacity(), -1);
    for (int p = 0; p < m; ++p)
        pos[order[p]] = p;
    TwoBranch tb;
    tb.order = order;
    tb.b1_end = 0;
    for (int w : g.neighbors(order[0]))
        if (pos[w] >= 0)
            tb.b1_end = std::max(tb.b1_end, pos[w]);
    tb.b2_start = m - 1;
    for (int w : g.neighbors(order[m - 1]))
        if (pos[w] >= 0)
            tb.b2_start = std::min(tb.b2_start, pos[w]);
    bool body_empty = tb.b2_start <= tb.b1_end + 1;
    for (int w : g.vertices()) {
        if (pos[w] >= 0)
            continue;
        auto pat = detail::pattern_of(g, pos, m, w);
        if (pat.cnt == 0) {
            tb.detached.push_back(w);
            continue;
        }
        if (pat.cnt == m) {
            if (!body_empty)
                return false;
            tb.all.push_back(w);
            continue;
        }
        if (pat.hi - pat.lo + 1 != pat.cnt)
            return false;
        if (pat.lo == 0 && pat.hi <= tb.b1_end)
            tb.left.push_back(w);
        else if (pat.hi == m - 1 && pat.lo >= tb.b2_start)
            tb.right.push_back(w);
        else
            return false;
    }
    if (out)
        *out = std::move(tb);
    return true;
}

// ---- maximum K-join with fixed ends ----

namespace detail {

struct ChainClass {
    std::vector<int> members; // ascending
    VertexSet key1, key2;     // the two nested-neighborhood keys
    int minid() const { return members.front(); }
    int weight() const { return static_cast<int>(members.size()); }
};

inline bool vec_subset(const VertexSet& a, const VertexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// arc a -> b: key1 shrinks, key2 grows
inline bool chain_arc(const ChainClass& a, const ChainClass& b)
{
    return vec_subset(b.key1, a.key1) && vec_subset(a.key2, b.key2);
}

// longest a -> b chain in the (transitive) class digraph; total weight and
// the class sequence, endpoints included.  -1 when b is unreachable.
inline int longest_chain(const std::vector<ChainClass>& cls, int a, int b, std::vector<int>* path)
{
    int n = static_cast<int>(cls.size());
    if (a == b) {
        if (path)
            *path = {a};
        return cls[a].weight();
    }
    if (!chain_arc(cls[a], cls[b]))
        return -1;
    std::vector<int> mids;
    for (int c = 0; c < n; ++c)
        if (c != a && c != b && chain_arc(cls[a], cls[c]) && chain_arc(cls[c], cls[b]))
            mids.push_back(c);
    // topological order: key1 sizes descending, then key2 ascending, then id
    std::sort(mids.begin(), mids.end(), [&](int u, int v) {
        if (cls[u].key1.size() != cls[v].key1.size())
            return cls[u].key1.size() > cls[v].key1.size();
        if (cls[u].key2.size() != cls[v].key2.size())
            return cls[u].key2.size() < cls[v].key2.size();
        return cls[u].minid() < cls[v].minid();
    });
    std::vector<int> nodes{a};
    nodes.insert(nodes.end(), mids.begin(), mids.end());
    nodes.push_back(b);
    int len = static_cast<int>(nodes.size());
    std::vector<int> dp(len, -1), from(len, -1);
    dp[0] = cls[a].weight();
    for (int i = 1; i < len; ++i)
        for (int j = 0; j < i; ++j) {
            if (dp[j] < 0 || !chain_arc(cls[nodes[j]], cls[nodes[i]]))
                continue;
            int cand = dp[j] + cls[nodes[i]].weight();
            // deterministic tie-break: earlier predecessor in node order
            if (cand > dp[i]) {
                dp[i] = cand;
                from[i] = j;
            }
        }
    if (dp[len - 1] < 0)
        return -1;
    if (path) {
        path->clear();
        for (int i = len - 1; i >= 0; i = from[i]) {
            path->push_back(nodes[i]);
            if (i == 0)
                break;
        }
        std::reverse(path->begin(), path->end());
    }
    return dp[len - 1];
}

} // namespace detail

// Maximum-cardinality K-join with x as first and y as last vertex.
inline KJoin max_kjoin(const Graph& g, int x, int y)
{
    if (!g.has_edge(x, y))
        throw std::invalid_argument("max_kjoin: xy must be an edge");

    auto closed = [&](int v) {
        VertexSet s(g.neighbors(v));
        s.push_back(v);
        std::sort(s.begin(), s.end());
        return s;
    };
    VertexSet nx = closed(x), ny = closed(y);
    VertexSet ncl;
    std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(ncl));
    VertexSet nxy; // N[x] u N[y]
    std::set_union(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(nxy));

    // candidates: closed neighborhood covers N[x] n N[y], and no private
    // neighbors outside N[x] u N[y] (those could attach mid-clique)
    VertexSet cand;
    for (int u : ncl) {
        if (!detail::vec_subset(ncl, closed(u)))
            continue;
        bool ok = true;
        for (int w : g.neighbors(u))
            if (!std::binary_search(nxy.begin(), nxy.end(), w)) {
                ok = false;
                break;
            }
        if (ok)
            cand.push_back(u);
    }

    VertexSet l0, r0; // N(x) \ N[y], N(y) \ N[x]
    for (int w : g.neighbors(x))
        if (!std::binary_search(ny.begin(), ny.end(), w))
            l0.push_back(w);
    for (int w : g.neighbors(y))
        if (!std::binary_search(nx.begin(), nx.end(), w))
            r0.push_back(w);
    std::sort(l0.begin(), l0.end());
    std::sort(r0.begin(), r0.end());

    // group by (N n L0 reversed-nesting, N n R0): equal keys are true twins
    std::vector<detail::ChainClass> cls;
    for (int u : cand) {
        VertexSet kl, kr;
        for (int w : g.neighbors(u)) {
            if (std::binary_search(l0.begin(), l0.end(), w))
                kl.push_back(w);
            if (std::binary_search(r0.begin(), r0.end(), w))
                kr.push_back(w);
        }
        bool merged = false;
        for (auto& c : cls)
            if (c.key1 == kl && c.key2 == kr) {
                c.members.push_back(u);
                merged = true;
                break;
            }
        if (!merged)
            cls.push_back({{u}, kl, kr});
    }
    for (auto& c : cls)
        std::sort(c.members.begin(), c.members.end());
    std::sort(cls.begin(), cls.end(),
              [](const detail::ChainClass& a, const detail::ChainClass& b) { return a.minid() < b.minid(); });

    int cx = -1, cy = -1;
    for (int c = 0; c < static_cast<int>(cls.size()); ++c) {
        if (std::binary_search(cls[c].members.begin(), cls[c].members.end(), x))
            cx = c;
        if (std::binary_search(cls[c].members.begin(), cls[c].members.end(), y))
            cy = c;
    }

    std::vector<int> path;
    int best = detail::longest_chain(cls, cx, cy, &path);
    if (best < 0)
        throw std::logic_error("max_kjoin: end classes are not chain-connected");

    std::vector<int> order;
    for (int c : path)
        for (int v : cls[c].members)
            if (v != x && v != y)
                order.push_back(v);
    order.insert(order.begin(), x);
    order.push_back(y);

    KJoin kj;
    if (!validate_kjoin(g, order, &kj))
        throw std::logic_error("max_kjoin: constructed join failed validation");
    return kj;
}

// Maximal K-joins covering x, one per seed edge, deduplicated.
inline std::vector<KJoin> maximal_kjoins_through(const Graph& g, int x)
{
    if (g.degree(x) == 0) {
        KJoin kj;
        validate_kjoin(g, {x}, &kj);
        return {kj};
    }
    std::vector<KJoin> out;
    std::vector<std::vector<int>> seen;
    for (auto [u, v] : g.edges()) {
        bool covers_u = (x == u) || g.has_edge(x, u);
        bool covers_v = (x == v) || g.has_edge(x, v);
        if (!covers_u || !covers_v)
            continue;
        KJoin kj = max_kjoin(g, u, v);
        if (std::find(kj.order.begin(), kj.order.end(), x) == kj.order.end())
            continue;
        std::vector<int> key(kj.order);
        std::sort(key.begin(), key.end());
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            continue;
        seen.push_back(key);
        out.push_back(std::move(kj));
    }
    return out;
}

// ---- maximum 1-branch with x as first vertex ----

namespace detail {

struct ChainConfig {
    bool valid = false;
    int weight = 0;
    std::vector<int> classes;
};

// Best chain over the frontier classes honoring coverage (classes not on
// the chain must be adjacent to its first class) and body domination
// (their body neighborhoods must be inside the last class's).
inline ChainConfig best_frontier_chain(const std::vector<ChainClass>& cls, const Graph& g)
{
    int n = static_cast<int>(cls.size());
    ChainConfig best; // empty chain is always valid
    best.valid = true;

    auto adjacent = [&](int a, int b) { return g.has_edge(cls[a].minid(), cls[b].minid()); };

    for (int sc = 0; sc < n; ++sc)
        for (int ec = 0; ec < n; ++ec) {
            if (sc != ec && !chain_arc(cls[sc], cls[ec]))
                continue;
            std::vector<int> mandatory;
            bool feasible = true;
            for (int c = 0; c < n && feasible; ++c) {
                if (c == sc || c == ec)
                    continue;
                bool cov = !adjacent(c, sc);
                bool dom = !vec_subset(cls[c].key1, cls[ec].key1);
                if (!cov && !dom)
                    continue;
                if (sc == ec) {
                    feasible = false;
                    break;
                }
                if (!chain_arc(cls[sc], cls[c]) || !chain_arc(cls[c], cls[ec]))
                    feasible = false;
                else
                    mandatory.push_back(c);
            }
            if (!feasible)
                continue;
            std::sort(mandatory.begin(), mandatory.end(), [&](int u, int v) {
                if (cls[u].key1.size() != cls[v].key1.size())
                    return cls[u].key1.size() > cls[v].key1.size();
                if (cls[u].key2.size() != cls[v].key2.size())
                    return cls[u].key2.size() < cls[v].key2.size();
                return cls[u].minid() < cls[v].minid();
            });
            for (size_t i = 0; i + 1 < mandatory.size() && feasible; ++i)
                if (!chain_arc(cls[mandatory[i]], cls[mandatory[i + 1]]))
                    feasible = false;
            if (!feasible)
                continue;

            std::vector<int> anchors{sc};
            anchors.insert(anchors.end(), mandatory.begin(), mandatory.end());
            if (ec != sc)
                anchors.push_back(ec);

            int total = 0;
            std::vector<int> chain;
            bool ok = true;
            for (size_t i = 0; ok && i + 1 < anchors.size(); ++i) {
                std::vector<int> seg;
                int w = longest_chain(cls, anchors[i], anchors[i + 1], &seg);
                if (w < 0) {
                    ok = false;
                    break;
                }
                if (i == 0) {
                    chain = seg;
                    total = w;
                } else {
                    chain.insert(chain.end(), seg.begin() + 1, seg.end());
                    total += w - cls[anchors[i]].weight();
                }
            }
            if (anchors.size() == 1) {
                chain = {sc};
                total = cls[sc].weight();
            }
            if (!ok)
                continue;

            if (total > best.weight ||
                (total == best.weight && best.valid && !best.classes.empty() && chain < best.classes)) {
                best.weight = total;
                best.classes = chain;
            } else if (total == best.weight && best.classes.empty() && total > 0) {
                best.weight = total;
                best.classes = chain;
            }
        }
    return best;
}

} // namespace detail

// Maximum 1-branch containing x as first vertex: greedy layer growth of
// the body, then a maximum attachment chain over the stalled frontier.
inline OneBranch max_one_branch_from(const Graph& g, int x)
{
    if (!g.alive(x))
        throw std::invalid_argument("max_one_branch_from: dead vertex");

    std::vector<std::vector<int>> layers{{x}};
    std::vector<char> placed(g.capacity(), 0);
    placed[x] = 1;
    std::vector<int> frontier;

    for (;;) {
        const std::vector<int>& last = layers.back();
        std::vector<char> inlast(g.capacity(), 0);
        for (int u : last)
            inlast[u] = 1;
        std::vector<int> cand;
        {
            std::vector<char> seen(g.capacity(), 0);
            for (int u : last)
                for (int w : g.neighbors(u))
                    if (!placed[w] && !seen[w]) {
                        seen[w] = 1;
                        cand.push_back(w);
                    }
            std::sort(cand.begin(), cand.end());
        }
        if (cand.empty())
            break;

        bool ok = true;
        for (size_t i = 0; i < cand.size() && ok; ++i)
            for (size_t j = i + 1; j < cand.size(); ++j)
                if (!g.has_edge(cand[i], cand[j])) {
                    ok = false;
                    break;
                }
        std::vector<int> ordered(cand);
        if (ok) {
            auto prevdeg = [&](int c) {
                int d = 0;
                for (int w : g.neighbors(c))
                    if (inlast[w])
                        ++d;
                return d;
            };
            auto outdeg = [&](int c) {
                int d = 1;
                for (int w : g.neighbors(c))
                    if (!inlast[w])
                        ++d;
                return d;
            };
            std::sort(ordered.begin(), ordered.end(), [&](int a, int b) {
                int pa = prevdeg(a), pb = prevdeg(b);
                if (pa != pb)
                    return pa > pb;
                int oa = outdeg(a), ob = outdeg(b);
                if (oa != ob)
                    return oa < ob;
                return a < b;
            });
            for (size_t i = 0; i + 1 < ordered.size() && ok; ++i) {
                int a = ordered[i], b = ordered[i + 1];
                // previous-layer neighborhoods shrink
                for (int w : g.neighbors(b))
                    if (inlast[w] && !g.has_edge(a, w)) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    break;
                // outward closed neighborhoods grow
                for (int w : g.neighbors(a))
                    if (!inlast[w] && w != b && !g.has_edge(b, w)) {
                        ok = false;
                        break;
                    }
            }
        }
        if (!ok) {
            frontier = cand;
            break;
        }
        layers.push_back(ordered);
        for (int c : ordered)
            placed[c] = 1;
    }

    std::vector<int> order;
    for (const auto& l : layers)
        order.insert(order.end(), l.begin(), l.end());

    if (!frontier.empty()) {
        // attachment seed: last-layer vertices adjacent to the whole frontier
        std::vector<char> inA(g.capacity(), 0);
        int acount = 0;
        for (int u : layers.back()) {
            bool all = true;
            for (int c : frontier)
                if (!g.has_edge(u, c)) {
                    all = false;
                    break;
                }
            if (all) {
                inA[u] = 1;
                ++acount;
            }
        }
        if (acount == 0)
            throw std::logic_error("max_one_branch_from: empty attachment seed");

        std::vector<char> inbody(placed);
        for (int u : layers.back())
            if (inA[u])
                inbody[u] = 0;

        // frontier true-twin classes keyed by (body neighborhood, outward
        // closed neighborhood)
        std::vector<detail::ChainClass> cls;
        for (int c : frontier) {
            VertexSet kb, ko{c};
            for (int w : g.neighbors(c))
                (inbody[w] ? kb : ko).push_back(w);
            std::sort(kb.begin(), kb.end());
            std::sort(ko.begin(), ko.end());
            bool merged = false;
            for (auto& cl : cls)
                if (cl.key1 == kb && cl.key2 == ko) {
                    cl.members.push_back(c);
                    merged = true;
                    break;
                }
            if (!merged)
                cls.push_back({{c}, kb, ko});
        }
        for (auto& cl : cls)
            std::sort(cl.members.begin(), cl.members.end());
        std::sort(cls.begin(), cls.end(),
                  [](const detail::ChainClass& a, const detail::ChainClass& b) { return a.minid() < b.minid(); });

        detail::ChainConfig chain = detail::best_frontier_chain(cls, g);
        for (int c : chain.classes)
            for (int v : cls[c].members)
                order.push_back(v);
    }

    OneBranch ob;
    if (!validate_one_branch(g, order, &ob))
        throw std::logic_error("max_one_branch_from: constructed branch failed validation");
    return ob;
}

// ---- maximum 2-branch through a body vertex ----

namespace detail {

// Order the set S as a 2-branch with x in the body, if possible: take the
// canonical umbrella ordering of G[S] in both orientations and sort each
// true-twin run by its outside attachments (runs left of x descending,
// right of x ascending), then validate.
inline std::optional<TwoBranch> order_two_branch(const Graph& g, const VertexSet& S, int x)
{
    auto [sub, new2old] = induced_subgraph(g, S);
    auto sigma = umbrella_ordering(sub);
    if (!sigma)
        return std::nullopt;
    std::vector<int> base;
    base.reserve(sigma->size());
    for (int p : *sigma)
        base.push_back(new2old[p]);

    std::vector<char> inS(g.capacity(), 0);
    for (int v : S)
        inS[v] = 1;
    auto outside_deg = [&](int v) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (!inS[w])
                ++d;
        return d;
    };
    std::vector<int> twin_class(g.capacity(), -1);
    {
        auto classes = true_twin_classes(sub);
        for (size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c])
                twin_class[new2old[v]] = static_cast<int>(c);
    }

    for (int orient = 0; orient < 2; ++orient) {
        std::vector<int> order(base);
        if (orient)
            std::reverse(order.begin(), order.end());
        int posx = static_cast<int>(std::find(order.begin(), order.end(), x) - order.begin());
        size_t i = 0;
        while (i < order.size()) {
            size_t j = i;
            while (j + 1 < order.size() && twin_class[order[j + 1]] == twin_class[order[i]])
                ++j;
            bool before_x = static_cast<size_t>(posx) > j;
            std::sort(order.begin() + i, order.begin() + j + 1, [&](int u, int v) {
                int du = outside_deg(u), dv = outside_deg(v);
                if (du != dv)
                    return before_x ? du > dv : du < dv;
                return u < v;
            });
            i = j + 1;
        }
        TwoBranch tb;
        if (!validate_two_branch(g, order, &tb))
            continue;
        posx = static_cast<int>(std::find(order.begin(), order.end(), x) - order.begin());
        if (posx <= tb.b1_end || posx >= tb.b2_start)
            continue;
        return tb;
    }
    return std::nullopt;
}

} // namespace detail

// Split the K-join at x, search a maximum 1-branch on each side, glue.
inline std::optional<TwoBranch> max_two_branch(const Graph& g, int x, const KJoin& kj)
{
    auto it = std::find(kj.order.begin(), kj.order.end(), x);
    if (it == kj.order.end())
        throw std::invalid_argument("max_two_branch: x not in the seed K-join");
    int xi = static_cast<int>(it - kj.order.begin());
    int m = kj.size();

    Graph h1 = g;
    for (int p = 0; p < xi; ++p)
        h1.remove_vertex(kj.order[p]);
    for (int l : kj.left)
        for (int p = xi; p < m; ++p)
            if (h1.alive(l) && h1.has_edge(l, kj.order[p]))
                h1.remove_edge(l, kj.order[p]);
    OneBranch right = max_one_branch_from(h1, x);

    Graph h2 = g;
    for (int p = xi + 1; p < m; ++p)
        h2.remove_vertex(kj.order[p]);
    for (int r : kj.right)
        for (int p = 0; p <= xi; ++p)
            if (h2.alive(r) && h2.has_edge(r, kj.order[p]))
                h2.remove_edge(r, kj.order[p]);
    OneBranch left = max_one_branch_from(h2, x);

    // The halves of the sought 2-branch appear as order prefixes of the
    // side branches, but the union of the two full sides can overgrow
    // (one side may wrap around and break the umbrella property).  Try
    // prefix pairs from largest union down, reordering each union
    // canonically with twin runs sorted by their outside attachments.
    std::optional<TwoBranch> best;
    int nr = right.size(), nl = left.size();
    std::vector<std::pair<int, int>> cuts;
    for (int a = nr; a >= 1; --a)
        for (int b = nl; b >= 1; --b)
            cuts.emplace_back(a, b);
    std::sort(cuts.begin(), cuts.end(),
              [](auto p, auto q) { return p.first + p.second > q.first + q.second; });
    for (auto [a, b] : cuts) {
        if (best && a + b - 1 <= best->size())
            break; // unions only get smaller from here
        VertexSet S(left.order.begin(), left.order.begin() + b);
        S.insert(S.end(), right.order.begin(), right.order.begin() + a);
        std::sort(S.begin(), S.end());
        S.erase(std::unique(S.begin(), S.end()), S.end());
        if (best && static_cast<int>(S.size()) <= best->size())
            continue;
        auto tb = detail::order_two_branch(g, S, x);
        if (tb && (!best || tb->size() > best->size()))
            best = tb;
    }
    return best;
}

// ---- K-join decomposition of a 2-branch ----

struct KJoinDecomposition {
    std::vector<KJoin> blocks;
    int size() const { return static_cast<int>(blocks.size()); }
};

inline KJoinDecomposition kjoin_decomposition(const Graph& g, const TwoBranch& tb)
{
    const std::vector<int>& o = tb.order;
    int m = static_cast<int>(o.size());
    std::vector<int> pos(g.capacity(), -1);
    for (int p = 0; p < m; ++p)
        pos[o[p]] = p;

    KJoinDecomposition dec;
    auto push_block = [&](int from, int to) {
        std::vector<int> block(o.begin() + from, o.begin() + to + 1);
        KJoin kj;
        if (!validate_kjoin(g, block, &kj))
            throw std::logic_error("kjoin_decomposition: block is not a K-join");
        dec.blocks.push_back(std::move(kj));
    };

    push_block(0, tb.b1_end);
    int start = tb.b1_end + 1;
    while (start < m) {
        if (start >= tb.b2_start) {
            push_block(start, m - 1);
            break;
        }
        int end = start;
        for (int w : g.neighbors(o[start]))
            if (pos[w] >= 0)
                end = std::max(end, pos[w]);
        push_block(start, end);
        start = end + 1;
    }
    return dec;
}

// ---- clean K-joins ----

enum class CleanKind { pic, bcc };

// mark every vertex lying in a claw / induced C4 (pic) or 3K1 / C4 (bcc)
inline std::vector<char> dirty_vertices(const Graph& g, CleanKind kind)
{
    std::vector<char> dirty(g.capacity(), 0);
    auto mark = [&](const std::vector<Obstruction>& obs) {
        for (const auto& o : obs)
            for (int v : o.vertices)
                dirty[v] = 1;
    };
    if (kind == CleanKind::pic)
        mark(enumerate_claws(g));
    else
        mark(enumerate_3k1s(g));
    mark(enumerate_c4s(g));
    return dirty;
}

inline KJoin clean_subset_with(const Graph& g, const std::vector<char>& dirty, const KJoin& kj)
{
    std::vector<int> order;
    for (int v : kj.order)
        if (!dirty[v])
            order.push_back(v);
    KJoin out;
    if (!validate_kjoin(g, order, &out))
        throw std::logic_error("clean_subset: subset of a K-join failed validation");
    return out;
}

inline KJoin clean_subset(const Graph& g, const KJoin& kj, CleanKind kind = CleanKind::pic)
{
    return clean_subset_with(g, dirty_vertices(g, kind), kj);
}

} // namespace pick
