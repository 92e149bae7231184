#pragma once

// Simple loopless undirected graphs over stable integer ids.
// Vertex deletion tombstones the id so reduction traces can keep
// referring to original labels; compact() produces a fresh 0..n-1 graph.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pick {

using VertexSet = std::vector<int>;            // sorted, unique
using Edge = std::pair<int, int>;              // stored with first < second
using EdgeSet = std::vector<Edge>;             // sorted, unique

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n), alive_(n, 1), live_(n) {}

    static Graph from_edges(int n, const EdgeSet& edges)
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    int capacity() const { return static_cast<int>(adj_.size()); }
    int vertex_count() const { return live_; }

    bool alive(int v) const { return v >= 0 && v < capacity() && alive_[v]; }

    VertexSet vertices() const
    {
        VertexSet vs;
        vs.reserve(live_);
        for (int v = 0; v < capacity(); ++v)
            if (alive_[v])
                vs.push_back(v);
        return vs;
    }

    const std::vector<int>& neighbors(int v) const
    {
        require_alive(v);
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const
    {
        require_alive(u);
        require_alive(v);
        if (u == v)
            return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    long edge_count() const
    {
        long twice = 0;
        for (int v = 0; v < capacity(); ++v)
            if (alive_[v])
                twice += static_cast<long>(adj_[v].size());
        return twice / 2;
    }

    EdgeSet edges() const
    {
        EdgeSet es;
        for (int u = 0; u < capacity(); ++u) {
            if (!alive_[u])
                continue;
            for (int v : adj_[u])
                if (u < v)
                    es.emplace_back(u, v);
        }
        return es;
    }

    void add_edge(int u, int v)
    {
        require_alive(u);
        require_alive(v);
        if (u == v)
            throw std::invalid_argument("self-loop");
        if (has_edge(u, v))
            throw std::invalid_argument("duplicate edge");
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
    }

    void remove_edge(int u, int v)
    {
        if (!has_edge(u, v))
            throw std::invalid_argument("no such edge");
        erase_sorted(adj_[u], v);
        erase_sorted(adj_[v], u);
    }

    void remove_vertex(int v)
    {
        require_alive(v);
        for (int w : adj_[v])
            erase_sorted(adj_[w], v);
        adj_[v].clear();
        alive_[v] = 0;
        --live_;
    }

    // Fresh graph on ids 0..live-1; second member maps new id -> old id.
    std::pair<Graph, std::vector<int>> compact() const
    {
        std::vector<int> new2old = vertices();
        std::vector<int> old2new(capacity(), -1);
        for (int i = 0; i < static_cast<int>(new2old.size()); ++i)
            old2new[new2old[i]] = i;
        Graph g(static_cast<int>(new2old.size()));
        for (int u : new2old)
            for (int v : adj_[u])
                if (u < v)
                    g.add_edge(old2new[u], old2new[v]);
        return {std::move(g), std::move(new2old)};
    }

    // Symmetry, irreflexivity, sortedness, liveness of every list entry.
    void validate() const
    {
        int live = 0;
        for (int v = 0; v < capacity(); ++v) {
            if (!alive_[v]) {
                if (!adj_[v].empty())
                    throw std::logic_error("dead vertex keeps neighbors");
                continue;
            }
            ++live;
            const auto& a = adj_[v];
            if (!std::is_sorted(a.begin(), a.end()))
                throw std::logic_error("unsorted adjacency");
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw std::logic_error("parallel edge");
            for (int w : a) {
                if (w == v)
                    throw std::logic_error("self-loop stored");
                if (!alive(w))
                    throw std::logic_error("edge to dead vertex");
                const auto& b = adj_[w];
                if (!std::binary_search(b.begin(), b.end(), v))
                    throw std::logic_error("asymmetric adjacency");
            }
        }
        if (live != live_)
            throw std::logic_error("live count drift");
    }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<char> alive_;
    int live_ = 0;

    void require_alive(int v) const
    {
        if (!alive(v))
            throw std::invalid_argument("vertex " + std::to_string(v) + " is not a live vertex");
    }

    static void insert_sorted(std::vector<int>& a, int x)
    {
        a.insert(std::lower_bound(a.begin(), a.end(), x), x);
    }

    static void erase_sorted(std::vector<int>& a, int x)
    {
        auto it = std::lower_bound(a.begin(), a.end(), x);
        if (it != a.end() && *it == x)
            a.erase(it);
    }
};

// Dense adjacency view over the positions of a fixed vertex list.
// Rows are bitsets, one bit per position; works for any n.
class AdjView {
public:
    AdjView(const Graph& g, VertexSet vs) : verts_(std::move(vs))
    {
        n_ = static_cast<int>(verts_.size());
        words_ = (n_ + 63) / 64;
        rows_.assign(static_cast<size_t>(n_) * words_, 0);
        pos_.assign(g.capacity(), -1);
        for (int i = 0; i < n_; ++i)
            pos_[verts_[i]] = i;
        for (int i = 0; i < n_; ++i)
            for (int w : g.neighbors(verts_[i])) {
                int j = pos_[w];
                if (j >= 0)
                    set(i, j);
            }
    }

    explicit AdjView(const Graph& g) : AdjView(g, g.vertices()) {}

    int size() const { return n_; }
    int vertex(int i) const { return verts_[i]; }
    int pos(int v) const { return pos_[v]; }

    bool at(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }

    const uint64_t* row(int i) const { return rows_.data() + static_cast<size_t>(i) * words_; }

    // row(i) with the diagonal bit set: closed neighborhood
    std::vector<uint64_t> closed_row(int i) const
    {
        std::vector<uint64_t> r(row(i), row(i) + words_);
        r[i >> 6] |= uint64_t(1) << (i & 63);
        return r;
    }

private:
    VertexSet verts_;
    std::vector<int> pos_;
    std::vector<uint64_t> rows_;
    int n_ = 0;
    int words_ = 0;

    void set(int i, int j) { rows_[static_cast<size_t>(i) * words_ + (j >> 6)] |= uint64_t(1) << (j & 63); }
};

// ---- bitset word helpers ----

inline int popcount_and(const uint64_t* a, const uint64_t* b, int words)
{
    int c = 0;
    for (int w = 0; w < words; ++w)
        c += __builtin_popcountll(a[w] & b[w]);
    return c;
}

inline bool test_bit(const std::vector<uint64_t>& m, int i) { return (m[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(std::vector<uint64_t>& m, int i) { m[i >> 6] |= uint64_t(1) << (i & 63); }
inline void clear_bit(std::vector<uint64_t>& m, int i) { m[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

// ---- input / output ----

// Edge-list format: header "n m", then m lines "u v", '#' starts a comment.
inline Graph load_graph(std::istream& in)
{
    int lineno = 0;
    std::string line;
    auto next_payload = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            size_t i = line.find_first_not_of(" \t\r\n");
            if (i == std::string::npos)
                continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string payload;
    if (!next_payload(payload))
        throw parse_error(lineno, "missing header");
    long n, m;
    {
        std::istringstream ss(payload);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra) || n < 0 || m < 0)
            throw parse_error(lineno, "malformed header, expected \"n m\"");
    }
    Graph g(static_cast<int>(n));
    for (long e = 0; e < m; ++e) {
        if (!next_payload(payload))
            throw parse_error(lineno, "expected " + std::to_string(m) + " edges, got " + std::to_string(e));
        std::istringstream ss(payload);
        long u, v;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra))
            throw parse_error(lineno, "malformed edge line");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(lineno, "vertex id out of range");
        if (u == v)
            throw parse_error(lineno, "self-loop");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw parse_error(lineno, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_payload(payload))
        throw parse_error(lineno, "trailing content after last edge");
    return g;
}

inline Graph load_graph_string(const std::string& text)
{
    std::istringstream ss(text);
    return load_graph(ss);
}

// Writes the compacted graph: "n m" then edges u < v in lexicographic order.
inline void write_graph(const Graph& g, std::ostream& out)
{
    auto [c, new2old] = g.compact();
    (void)new2old;
    out << c.vertex_count() << ' ' << c.edge_count() << '\n';
    for (auto [u, v] : c.edges())
        out << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const Graph& g)
{
    std::ostringstream ss;
    write_graph(g, ss);
    return ss.str();
}

// ---- elementary predicates ----

inline Graph complement(const Graph& g)
{
    Graph c(g.capacity());
    VertexSet vs = g.vertices();
    for (int v = 0; v < g.capacity(); ++v)
        if (!g.alive(v))
            c.remove_vertex(v);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j]))
                c.add_edge(vs[i], vs[j]);
    return c;
}

inline std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.capacity(), 0);
    for (int s : g.vertices()) {
        if (seen[s])
            continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Maximal classes under closed-neighborhood equality.
inline std::vector<VertexSet> true_twin_classes(const Graph& g)
{
    AdjView a(g);
    int n = a.size();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::vector<std::vector<uint64_t>> closed(n);
    for (int i = 0; i < n; ++i)
        closed[i] = a.closed_row(i);
    std::vector<VertexSet> classes;
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i) {
        if (used[i])
            continue;
        VertexSet cls{a.vertex(i)};
        used[i] = 1;
        for (int j = i + 1; j < n; ++j)
            if (!used[j] && closed[i] == closed[j]) {
                used[j] = 1;
                cls.push_back(a.vertex(j));
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

// Nested-neighborhood test along the given order of x against y.
inline bool is_join(const Graph& g, const std::vector<int>& x_ordered, const VertexSet& y)
{
    VertexSet ys(y);
    std::sort(ys.begin(), ys.end());
    for (int v : x_ordered)
        if (std::binary_search(ys.begin(), ys.end(), v))
            throw std::invalid_argument("is_join: x and y overlap");
    for (size_t i = 0; i + 1 < x_ordered.size(); ++i) {
        for (int w : g.neighbors(x_ordered[i])) {
            if (!std::binary_search(ys.begin(), ys.end(), w))
                continue;
            if (!g.has_edge(x_ordered[i + 1], w))
                return false;
        }
    }
    return true;
}

// Subgraph induced by s; second member maps new id -> old id.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s)
{
    std::vector<int> new2old(s);
    std::sort(new2old.begin(), new2old.end());
    new2old.erase(std::unique(new2old.begin(), new2old.end()), new2old.end());
    for (int v : new2old)
        if (!g.alive(v))
            throw std::invalid_argument("induced_subgraph: dead vertex " + std::to_string(v));
    Graph h(static_cast<int>(new2old.size()));
    for (size_t i = 0; i < new2old.size(); ++i)
        for (size_t j = i + 1; j < new2old.size(); ++j)
            if (g.has_edge(new2old[i], new2old[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(h), std::move(new2old)};
}

} // namespace pick
