#pragma once

// Forbidden induced subgraphs and their enumeration: claw, hole, net,
// 3-sun (proper interval) and 3K1, C4, C5 (bi-clique chain), plus the
// sunflower families used by the reduction rules.
//
// Vertex list conventions inside an Obstruction:
//   claw       [center, l1, l2, l3]        leaves ascending
//   hole/c4/c5 cycle order, starting at the smallest vertex, second
//              vertex the smaller of its two cycle neighbors
//   net        [t1, t2, t3, p1, p2, p3]    triangle ascending, pendant
//              p_i attached to t_i
//   three_sun  [t1, t2, t3, o1, o2, o3]    o1 ~ t1,t2; o2 ~ t2,t3; o3 ~ t3,t1
//   three_k1   ascending

#include <map>
#include <optional>

#include "graph.hpp"

namespace pick {

enum class ObstructionKind { claw, hole, net, three_sun, c4, c5, three_k1 };

inline const char* to_string(ObstructionKind k)
{
    switch (k) {
    case ObstructionKind::claw: return "claw";
    case ObstructionKind::hole: return "hole";
    case ObstructionKind::net: return "net";
    case ObstructionKind::three_sun: return "3-sun";
    case ObstructionKind::c4: return "c4";
    case ObstructionKind::c5: return "c5";
    case ObstructionKind::three_k1: return "3k1";
    }
    return "?";
}

struct Obstruction {
    ObstructionKind kind;
    std::vector<int> vertices;
};

namespace detail {

// canonical rotation/reflection of a cycle vertex list
inline std::vector<int> canonical_cycle(std::vector<int> cyc)
{
    int q = static_cast<int>(cyc.size());
    int at = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::vector<int> fwd(q), bwd(q);
    for (int i = 0; i < q; ++i) {
        fwd[i] = cyc[(at + i) % q];
        bwd[i] = cyc[(at - i % q + q) % q];
    }
    return fwd[1] < bwd[1] ? fwd : bwd;
}

} // namespace detail

// ---- enumeration ----

inline std::vector<Obstruction> enumerate_claws(const Graph& g)
{
    std::vector<Obstruction> out;
    AdjView a(g);
    int n = a.size();
    for (int c = 0; c < n; ++c) {
        std::vector<int> nb;
        for (int v = 0; v < n; ++v)
            if (a.at(c, v))
                nb.push_back(v);
        int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (a.at(nb[i], nb[j]))
                    continue;
                for (int l = j + 1; l < d; ++l)
                    if (!a.at(nb[i], nb[l]) && !a.at(nb[j], nb[l]))
                        out.push_back({ObstructionKind::claw,
                                       {a.vertex(c), a.vertex(nb[i]), a.vertex(nb[j]), a.vertex(nb[l])}});
            }
    }
    return out;
}

inline std::vector<Obstruction> enumerate_c4s(const Graph& g)
{
    std::vector<Obstruction> out;
    AdjView a(g);
    int n = a.size();
    // every induced C4 is determined by its two diagonals
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int s = r + 1; s < n; ++s) {
                    int deg[4];
                    int verts[4] = {p, q, r, s};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        deg[i] = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (a.at(verts[i], verts[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges != 4 || deg[0] != 2 || deg[1] != 2 || deg[2] != 2 || deg[3] != 2)
                        continue;
                    // walk the cycle from p
                    std::vector<int> cyc{p};
                    int prev = -1, cur = p;
                    while (cyc.size() < 4) {
                        for (int i = 0; i < 4; ++i) {
                            int w = verts[i];
                            if (w != prev && w != cur && a.at(cur, w)) {
                                cyc.push_back(w);
                                prev = cur;
                                cur = w;
                                break;
                            }
                        }
                    }
                    std::vector<int> ids;
                    for (int v : cyc)
                        ids.push_back(a.vertex(v));
                    out.push_back({ObstructionKind::c4, detail::canonical_cycle(ids)});
                }
    return out;
}

inline std::vector<Obstruction> enumerate_3k1s(const Graph& g)
{
    std::vector<Obstruction> out;
    AdjView a(g);
    int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a.at(i, j))
                continue;
            for (int l = j + 1; l < n; ++l)
                if (!a.at(i, l) && !a.at(j, l))
                    out.push_back({ObstructionKind::three_k1, {a.vertex(i), a.vertex(j), a.vertex(l)}});
        }
    return out;
}

// ---- single-certificate searches ----

inline std::optional<Obstruction> find_claw(const Graph& g)
{
    AdjView a(g);
    int n = a.size();
    for (int c = 0; c < n; ++c) {
        std::vector<int> nb;
        for (int v = 0; v < n; ++v)
            if (a.at(c, v))
                nb.push_back(v);
        int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (a.at(nb[i], nb[j]))
                    continue;
                for (int l = j + 1; l < d; ++l)
                    if (!a.at(nb[i], nb[l]) && !a.at(nb[j], nb[l]))
                        return Obstruction{ObstructionKind::claw,
                                           {a.vertex(c), a.vertex(nb[i]), a.vertex(nb[j]), a.vertex(nb[l])}};
            }
    }
    return std::nullopt;
}

namespace detail {

// shortest x..y path avoiding N[v] \ {x,y}; empty if none
inline std::vector<int> path_outside_neighborhood(const AdjView& a, int v, int x, int y)
{
    int n = a.size();
    std::vector<char> allowed(n, 1);
    allowed[v] = 0;
    for (int w = 0; w < n; ++w)
        if (a.at(v, w))
            allowed[w] = 0;
    allowed[x] = allowed[y] = 1;
    std::vector<int> parent(n, -2);
    std::vector<int> queue{x};
    parent[x] = -1;
    for (size_t h = 0; h < queue.size(); ++h) {
        int c = queue[h];
        if (c == y)
            break;
        for (int w = 0; w < n; ++w)
            if (allowed[w] && parent[w] == -2 && a.at(c, w)) {
                parent[w] = c;
                queue.push_back(w);
            }
    }
    if (parent[y] == -2)
        return {};
    std::vector<int> path;
    for (int c = y; c != -1; c = parent[c])
        path.push_back(c);
    std::reverse(path.begin(), path.end());
    return path;
}

inline std::optional<Obstruction> hole_through(const AdjView& a, int v, int x, int y)
{
    std::vector<int> path = path_outside_neighborhood(a, v, x, y);
    if (path.empty())
        return std::nullopt;
    std::vector<int> cyc{a.vertex(v)};
    for (int w : path)
        cyc.push_back(a.vertex(w));
    Obstruction h{ObstructionKind::hole, canonical_cycle(cyc)};
    return h;
}

} // namespace detail

// Some induced cycle of length >= 4, or nothing when chordal.
// Chordality is decided by a maximum-cardinality-search elimination
// ordering; a failed elimination vertex seeds the cycle extraction.
inline std::optional<Obstruction> find_hole(const Graph& g)
{
    AdjView a(g);
    int n = a.size();
    if (n < 4)
        return std::nullopt;

    // maximum cardinality search
    std::vector<int> weight(n, 0), pickpos(n, -1), order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (pickpos[v] < 0 && (best < 0 || weight[v] > weight[best]))
                best = v;
        pickpos[best] = step;
        order.push_back(best);
        for (int w = 0; w < n; ++w)
            if (a.at(best, w) && pickpos[w] < 0)
                ++weight[w];
    }

    // reverse order is a perfect elimination ordering iff chordal:
    // earlier-picked neighbors of each vertex must form a clique
    for (int step = n - 1; step >= 0; --step) {
        int v = order[step];
        std::vector<int> before;
        for (int w = 0; w < n; ++w)
            if (a.at(v, w) && pickpos[w] < step)
                before.push_back(w);
        for (size_t i = 0; i < before.size(); ++i)
            for (size_t j = i + 1; j < before.size(); ++j)
                if (!a.at(before[i], before[j]))
                    if (auto h = detail::hole_through(a, v, before[i], before[j]))
                        return h;
    }

    // fall back to scanning every nonadjacent pair with a common neighbor;
    // finds a hole whenever one exists
    for (int v = 0; v < n; ++v)
        for (int x = 0; x < n; ++x) {
            if (!a.at(v, x))
                continue;
            for (int y = x + 1; y < n; ++y)
                if (a.at(v, y) && !a.at(x, y))
                    if (auto h = detail::hole_through(a, v, x, y))
                        return h;
        }
    return std::nullopt;
}

namespace detail {

template <typename F> inline void for_triangles(const AdjView& a, F&& fn)
{
    int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!a.at(i, j))
                continue;
            for (int l = j + 1; l < n; ++l)
                if (a.at(i, l) && a.at(j, l))
                    if (fn(i, j, l))
                        return;
        }
}

} // namespace detail

inline std::optional<Obstruction> find_net(const Graph& g)
{
    AdjView a(g);
    int n = a.size();
    if (n < 6)
        return std::nullopt;
    std::optional<Obstruction> found;
    detail::for_triangles(a, [&](int t1, int t2, int t3) {
        std::vector<int> p1, p2, p3;
        for (int v = 0; v < n; ++v) {
            if (v == t1 || v == t2 || v == t3)
                continue;
            bool e1 = a.at(v, t1), e2 = a.at(v, t2), e3 = a.at(v, t3);
            if (e1 && !e2 && !e3)
                p1.push_back(v);
            else if (!e1 && e2 && !e3)
                p2.push_back(v);
            else if (!e1 && !e2 && e3)
                p3.push_back(v);
        }
        for (int x : p1)
            for (int y : p2) {
                if (a.at(x, y))
                    continue;
                for (int z : p3)
                    if (!a.at(x, z) && !a.at(y, z)) {
                        found = Obstruction{ObstructionKind::net,
                                            {a.vertex(t1), a.vertex(t2), a.vertex(t3),
                                             a.vertex(x), a.vertex(y), a.vertex(z)}};
                        return true;
                    }
            }
        return false;
    });
    return found;
}

inline std::optional<Obstruction> find_3sun(const Graph& g)
{
    AdjView a(g);
    int n = a.size();
    if (n < 6)
        return std::nullopt;
    std::optional<Obstruction> found;
    detail::for_triangles(a, [&](int t1, int t2, int t3) {
        std::vector<int> s12, s23, s31;
        for (int v = 0; v < n; ++v) {
            if (v == t1 || v == t2 || v == t3)
                continue;
            bool e1 = a.at(v, t1), e2 = a.at(v, t2), e3 = a.at(v, t3);
            if (e1 && e2 && !e3)
                s12.push_back(v);
            else if (!e1 && e2 && e3)
                s23.push_back(v);
            else if (e1 && !e2 && e3)
                s31.push_back(v);
        }
        for (int x : s12)
            for (int y : s23) {
                if (a.at(x, y))
                    continue;
                for (int z : s31)
                    if (!a.at(x, z) && !a.at(y, z)) {
                        found = Obstruction{ObstructionKind::three_sun,
                                            {a.vertex(t1), a.vertex(t2), a.vertex(t3),
                                             a.vertex(x), a.vertex(y), a.vertex(z)}};
                        return true;
                    }
            }
        return false;
    });
    return found;
}

inline std::optional<Obstruction> find_induced_c4(const Graph& g)
{
    AdjView a(g);
    int n = a.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (a.at(u, v))
                continue;
            // u, v as one diagonal
            for (int x = 0; x < n; ++x) {
                if (x == u || x == v || !a.at(x, u) || !a.at(x, v))
                    continue;
                for (int y = x + 1; y < n; ++y)
                    if (y != u && y != v && a.at(y, u) && a.at(y, v) && !a.at(x, y)) {
                        std::vector<int> cyc{a.vertex(u), a.vertex(x), a.vertex(v), a.vertex(y)};
                        return Obstruction{ObstructionKind::c4, detail::canonical_cycle(cyc)};
                    }
            }
        }
    return std::nullopt;
}

inline std::optional<Obstruction> find_induced_c5(const Graph& g)
{
    AdjView a(g);
    int n = a.size();
    std::vector<int> sub(5);
    // scan 5-subsets; a 2-regular induced subgraph on 5 vertices is a C5
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int s = r + 1; s < n; ++s)
                    for (int t = s + 1; t < n; ++t) {
                        int verts[5] = {p, q, r, s, t};
                        int deg[5] = {0, 0, 0, 0, 0};
                        int edges = 0;
                        for (int i = 0; i < 5; ++i)
                            for (int j = i + 1; j < 5; ++j)
                                if (a.at(verts[i], verts[j])) {
                                    ++edges;
                                    ++deg[i];
                                    ++deg[j];
                                }
                        if (edges != 5)
                            continue;
                        bool reg = true;
                        for (int i = 0; i < 5; ++i)
                            reg = reg && deg[i] == 2;
                        if (!reg)
                            continue;
                        std::vector<int> cyc{verts[0]};
                        int prev = -1, cur = verts[0];
                        while (cyc.size() < 5) {
                            for (int i = 0; i < 5; ++i) {
                                int w = verts[i];
                                if (w != prev && w != cur && a.at(cur, w)) {
                                    cyc.push_back(w);
                                    prev = cur;
                                    cur = w;
                                    break;
                                }
                            }
                        }
                        std::vector<int> ids;
                        for (int v : cyc)
                            ids.push_back(a.vertex(v));
                        return Obstruction{ObstructionKind::c5, detail::canonical_cycle(ids)};
                    }
    return std::nullopt;
}

inline std::optional<Obstruction> find_3k1(const Graph& g)
{
    AdjView a(g);
    int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a.at(i, j))
                continue;
            for (int l = j + 1; l < n; ++l)
                if (!a.at(i, l) && !a.at(j, l))
                    return Obstruction{ObstructionKind::three_k1, {a.vertex(i), a.vertex(j), a.vertex(l)}};
        }
    return std::nullopt;
}

// nothing iff g is a proper interval graph
inline std::optional<Obstruction> pic_certificate(const Graph& g)
{
    if (auto o = find_claw(g))
        return o;
    if (auto o = find_hole(g))
        return o;
    if (auto o = find_net(g))
        return o;
    if (auto o = find_3sun(g))
        return o;
    return std::nullopt;
}

// nothing iff g is a bi-clique chain graph
inline std::optional<Obstruction> bcc_certificate(const Graph& g)
{
    if (auto o = find_3k1(g))
        return o;
    if (auto o = find_induced_c4(g))
        return o;
    if (auto o = find_induced_c5(g))
        return o;
    return std::nullopt;
}

// re-check an obstruction against the graph, by pattern
inline bool validate_obstruction(const Graph& g, const Obstruction& o)
{
    const std::vector<int>& vs = o.vertices;
    for (int v : vs)
        if (!g.alive(v))
            return false;
    std::vector<int> sorted(vs);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    auto edge = [&](int i, int j) { return g.has_edge(vs[i], vs[j]); };
    switch (o.kind) {
    case ObstructionKind::claw:
        if (vs.size() != 4)
            return false;
        return edge(0, 1) && edge(0, 2) && edge(0, 3) && !edge(1, 2) && !edge(1, 3) && !edge(2, 3);
    case ObstructionKind::c4:
    case ObstructionKind::c5:
    case ObstructionKind::hole: {
        int q = static_cast<int>(vs.size());
        if (o.kind == ObstructionKind::c4 && q != 4)
            return false;
        if (o.kind == ObstructionKind::c5 && q != 5)
            return false;
        if (q < 4)
            return false;
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) {
                bool consecutive = (j == i + 1) || (i == 0 && j == q - 1);
                if (edge(i, j) != consecutive)
                    return false;
            }
        return true;
    }
    case ObstructionKind::net:
        if (vs.size() != 6)
            return false;
        return edge(0, 1) && edge(1, 2) && edge(0, 2) && edge(0, 3) && edge(1, 4) && edge(2, 5) &&
               !edge(3, 4) && !edge(3, 5) && !edge(4, 5) && !edge(3, 1) && !edge(3, 2) && !edge(4, 0) &&
               !edge(4, 2) && !edge(5, 0) && !edge(5, 1);
    case ObstructionKind::three_sun:
        if (vs.size() != 6)
            return false;
        return edge(0, 1) && edge(1, 2) && edge(0, 2) && edge(3, 0) && edge(3, 1) && !edge(3, 2) &&
               edge(4, 1) && edge(4, 2) && !edge(4, 0) && edge(5, 2) && edge(5, 0) && !edge(5, 1) &&
               !edge(3, 4) && !edge(3, 5) && !edge(4, 5);
    case ObstructionKind::three_k1:
        if (vs.size() != 3)
            return false;
        return !edge(0, 1) && !edge(0, 2) && !edge(1, 2);
    }
    return false;
}

// ---- sunflowers ----

struct Sunflower {
    ObstructionKind kind; // claw, c4 or three_k1
    Edge forced;          // the shared non-edge
    int multiplicity = 0;
    std::vector<Obstruction> petals;
};

// > k claws sharing leaves u,v with pairwise distinct third leaves
inline std::optional<Sunflower> find_claw_sunflower(const Graph& g, int k)
{
    // pair of leaves -> third leaf -> smallest center
    std::map<Edge, std::map<int, int>> fams;
    for (const Obstruction& c : enumerate_claws(g)) {
        int center = c.vertices[0];
        int l[3] = {c.vertices[1], c.vertices[2], c.vertices[3]};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int third = l[3 - i - j];
                auto& slot = fams[make_edge(l[i], l[j])];
                auto it = slot.find(third);
                if (it == slot.end() || center < it->second)
                    slot[third] = center;
            }
    }
    const std::pair<const Edge, std::map<int, int>>* best = nullptr;
    for (const auto& f : fams)
        if (static_cast<int>(f.second.size()) > k &&
            (!best || f.second.size() > best->second.size()))
            best = &f;
    if (!best)
        return std::nullopt;
    Sunflower s;
    s.kind = ObstructionKind::claw;
    s.forced = best->first;
    s.multiplicity = static_cast<int>(best->second.size());
    for (auto [third, center] : best->second) {
        std::vector<int> leaves{best->first.first, best->first.second, third};
        std::sort(leaves.begin(), leaves.end());
        s.petals.push_back({ObstructionKind::claw, {center, leaves[0], leaves[1], leaves[2]}});
    }
    return s;
}

// > k distinct induced 4-cycles sharing the non-edge u,v
inline std::optional<Sunflower> find_c4_sunflower(const Graph& g, int k)
{
    std::map<Edge, std::vector<Obstruction>> fams;
    for (const Obstruction& c : enumerate_c4s(g)) {
        fams[make_edge(c.vertices[0], c.vertices[2])].push_back(c);
        fams[make_edge(c.vertices[1], c.vertices[3])].push_back(c);
    }
    const std::pair<const Edge, std::vector<Obstruction>>* best = nullptr;
    for (const auto& f : fams)
        if (static_cast<int>(f.second.size()) > k &&
            (!best || f.second.size() > best->second.size()))
            best = &f;
    if (!best)
        return std::nullopt;
    return Sunflower{ObstructionKind::c4, best->first, static_cast<int>(best->second.size()),
                     best->second};
}

// > k independent triples sharing u,v with distinct third vertices
inline std::optional<Sunflower> find_3k1_sunflower(const Graph& g, int k)
{
    AdjView a(g);
    int n = a.size();
    std::optional<Sunflower> best;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a.at(i, j))
                continue;
            std::vector<int> thirds;
            for (int l = 0; l < n; ++l)
                if (l != i && l != j && !a.at(i, l) && !a.at(j, l))
                    thirds.push_back(l);
            if (static_cast<int>(thirds.size()) > k &&
                (!best || static_cast<int>(thirds.size()) > best->multiplicity)) {
                Sunflower s;
                s.kind = ObstructionKind::three_k1;
                s.forced = make_edge(a.vertex(i), a.vertex(j));
                s.multiplicity = static_cast<int>(thirds.size());
                for (int l : thirds) {
                    std::vector<int> t{a.vertex(i), a.vertex(j), a.vertex(l)};
                    std::sort(t.begin(), t.end());
                    s.petals.push_back({ObstructionKind::three_k1, t});
                }
                best = std::move(s);
            }
        }
    return best;
}

} // namespace pick
