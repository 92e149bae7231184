#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "pick/recognition.hpp"
#include "testutil.hpp"

using namespace pick;
using namespace testutil;

TEST_CASE("umbrella orderings of basic graphs")
{
    auto p4 = umbrella_ordering(path(4));
    REQUIRE(p4.has_value());
    CHECK(*p4 == std::vector<int>{0, 1, 2, 3});

    CHECK_FALSE(umbrella_ordering(claw()).has_value());
    CHECK_FALSE(umbrella_ordering(cycle(4)).has_value());
    CHECK_FALSE(umbrella_ordering(cycle(5)).has_value());
    CHECK_FALSE(umbrella_ordering(net()).has_value());
    CHECK_FALSE(umbrella_ordering(sun3()).has_value());

    auto k5 = umbrella_ordering(clique(5));
    REQUIRE(k5.has_value());
    CHECK(verify_umbrella(clique(5), *k5));

    CHECK(umbrella_ordering(empty_graph(0)).has_value());
    CHECK(umbrella_ordering(empty_graph(3)).has_value());
}

TEST_CASE("verify_umbrella and first violation")
{
    Graph p4 = path(4);
    CHECK(verify_umbrella(p4, {0, 1, 2, 3}));
    CHECK_FALSE(verify_umbrella(p4, {1, 0, 2, 3}));

    auto viol = umbrella_violation(p4, {1, 0, 2, 3});
    REQUIRE(viol.has_value());
    CHECK(viol->i == 0);
    CHECK(viol->l == 1);
    CHECK(viol->j == 2);

    CHECK(verify_umbrella(clique(3), {2, 0, 1}));
    CHECK_THROWS_AS(verify_umbrella(p4, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(verify_umbrella(p4, {0, 1, 2, 2}), std::invalid_argument);
}

TEST_CASE("verify agrees with the brute-force triple check")
{
    Rng rng(42);
    for (int t = 0; t < 300; ++t) {
        int n = 2 + t % 6;
        Graph g = random_graph(n, 0.5, 4000 + t);
        std::vector<int> order = g.vertices();
        for (int i = n - 1; i > 0; --i)
            std::swap(order[i], order[rng.below(i + 1)]);
        CHECK(verify_umbrella(g, order) == brute_umbrella(g, order));
    }
}

TEST_CASE("recognition agrees with permutation brute force on small graphs")
{
    // exhaustive on <= 5 vertices, sampled beyond
    for (int n = 0; n <= 5; ++n) {
        int pc = pair_count(n);
        for (uint64_t mask = 0; mask < (uint64_t(1) << pc); ++mask) {
            Graph g = graph_from_mask(n, mask);
            bool brute = brute_is_proper_interval(g);
            auto ord = umbrella_ordering(g);
            REQUIRE(ord.has_value() == brute);
            if (ord)
                CHECK(verify_umbrella(g, *ord));
        }
    }
    for (uint32_t seed = 0; seed < 400; ++seed) {
        int n = 6 + seed % 2;
        Graph g = random_graph(n, 0.2 + 0.06 * (seed % 11), 5000 + seed);
        auto ord = umbrella_ordering(g);
        CHECK(ord.has_value() == brute_is_proper_interval(g));
        if (ord)
            CHECK(verify_umbrella(g, *ord));
    }
}

TEST_CASE("orderings are deterministic and keep twin classes consecutive")
{
    for (uint32_t seed = 0; seed < 200; ++seed) {
        Graph g = random_graph(7, 0.35, 6000 + seed);
        auto a = umbrella_ordering(g);
        auto b = umbrella_ordering(g);
        REQUIRE(a == b);
        if (!a)
            continue;
        auto classes = true_twin_classes(g);
        std::vector<int> pos(g.capacity(), -1);
        for (size_t p = 0; p < a->size(); ++p)
            pos[(*a)[p]] = static_cast<int>(p);
        for (auto& cls : classes) {
            int lo = g.capacity() + 1, hi = -1;
            for (int v : cls) {
                lo = std::min(lo, pos[v]);
                hi = std::max(hi, pos[v]);
            }
            CHECK(hi - lo + 1 == static_cast<int>(cls.size()));
        }
    }
}

TEST_CASE("extremal edges")
{
    Graph p4 = path(4);
    CHECK(extremal_edges(p4, {0, 1, 2, 3}) == EdgeSet{{0, 1}, {1, 2}, {2, 3}});

    Graph k3 = clique(3);
    CHECK(extremal_edges(k3, {0, 1, 2}) == EdgeSet{{0, 2}});

    Graph e(2);
    e.add_edge(0, 1);
    CHECK(extremal_edges(e, {0, 1}) == EdgeSet{{0, 1}});

    CHECK_THROWS_AS(extremal_edges(p4, {1, 0, 2, 3}), std::invalid_argument);

    // every extremal edge is an edge, and no edge dominates another
    for (uint32_t seed = 0; seed < 100; ++seed) {
        Graph g = random_graph(8, 0.45, 6500 + seed);
        auto ord = umbrella_ordering(g);
        if (!ord)
            continue;
        std::vector<int> pos(g.capacity(), -1);
        for (size_t p = 0; p < ord->size(); ++p)
            pos[(*ord)[p]] = static_cast<int>(p);
        EdgeSet ex = extremal_edges(g, *ord);
        for (auto [u, v] : ex) {
            CHECK(g.has_edge(u, v));
            int pu = std::min(pos[u], pos[v]), pv = std::max(pos[u], pos[v]);
            for (auto [a, b] : g.edges()) {
                int pa = std::min(pos[a], pos[b]), pb = std::max(pos[a], pos[b]);
                if (pa == pu && pb == pv)
                    continue;
                CHECK_FALSE((pa <= pu && pv <= pb));
            }
        }
    }
}

namespace {

// independent check: no induced C4, C5 or 3K1 among <= 5-vertex subsets
bool brute_biclique_chain(const Graph& g)
{
    VertexSet vs = g.vertices();
    int n = static_cast<int>(vs.size());
    // 3K1
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l)
                if (!g.has_edge(vs[i], vs[j]) && !g.has_edge(vs[i], vs[l]) && !g.has_edge(vs[j], vs[l]))
                    return false;
    // induced cycles C4/C5 by subset scan
    for (int size : {4, 5}) {
        if (n < size)
            continue;
        std::vector<char> chosen(n, 0);
        // iterate subsets of the given size
        std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
            if (depth == size) {
                VertexSet sub;
                for (int i = 0; i < n; ++i)
                    if (chosen[i])
                        sub.push_back(vs[i]);
                auto [h, map] = induced_subgraph(g, sub);
                // induced cycle: every degree 2, connected, |E| = size
                if (h.edge_count() != size)
                    return false;
                for (int v : h.vertices())
                    if (h.degree(v) != 2)
                        return false;
                return connected_components(h).size() == 1;
            }
            for (int i = start; i < n; ++i) {
                chosen[i] = 1;
                if (rec(i + 1, depth + 1))
                    return true;
                chosen[i] = 0;
            }
            return false;
        };
        if (rec(0, 0))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("bi-clique chain recognition")
{
    auto k4 = is_biclique_chain(clique(4));
    REQUIRE(k4.has_value());

    CHECK_FALSE(is_biclique_chain(empty_graph(3)).has_value());

    // cliques {0,1}, {2,3} with nested join edges 0-2, 1-2
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    auto w = is_biclique_chain(g);
    REQUIRE(w.has_value());
    CHECK(brute_biclique_chain(g));

    CHECK_FALSE(is_biclique_chain(cycle(4)).has_value());
    CHECK_FALSE(is_biclique_chain(cycle(5)).has_value());
    CHECK(is_biclique_chain(empty_graph(0)).has_value());
    CHECK(is_biclique_chain(empty_graph(2)).has_value());
}

TEST_CASE("witness structure: prefix and suffix cliques, join between them")
{
    for (uint32_t seed = 0; seed < 300; ++seed) {
        int n = 1 + seed % 7;
        Graph g = random_graph(n, 0.3 + 0.07 * (seed % 9), 7700 + seed);
        auto w = is_biclique_chain(g);
        CHECK(w.has_value() == brute_biclique_chain(g));
        if (!w)
            continue;
        CHECK(verify_umbrella(g, w->order));
        for (int i = 0; i < w->split; ++i)
            for (int j = i + 1; j < w->split; ++j)
                CHECK(g.has_edge(w->order[i], w->order[j]));
        for (int i = w->split; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                CHECK(g.has_edge(w->order[i], w->order[j]));
        // suffix neighborhoods into the prefix are nested (join)
        std::vector<int> prefix(w->order.begin(), w->order.begin() + w->split);
        std::sort(prefix.begin(), prefix.end());
        std::vector<int> suffix_rev(w->order.rbegin(), w->order.rend() - w->split);
        CHECK(is_join(g, suffix_rev, prefix));
    }
}

TEST_CASE("biclique chain agrees with complement being a bipartite chain")
{
    // complement bipartite with nested neighborhoods <=> bi-clique chain
    for (uint32_t seed = 0; seed < 200; ++seed) {
        int n = 1 + seed % 7;
        Graph g = random_graph(n, 0.5, 8800 + seed);
        Graph c = complement(g);
        bool mine = is_biclique_chain(g).has_value();

        // brute: c is bipartite chain iff some bipartition into two
        // independent sets exists whose neighborhoods are nested
        bool chain = false;
        for (uint32_t mask = 0; mask < (1u << n) && !chain; ++mask) {
            VertexSet a, b;
            for (int i = 0; i < n; ++i)
                ((mask >> i) & 1u ? a : b).push_back(i);
            bool ok = true;
            for (size_t i = 0; i < a.size() && ok; ++i)
                for (size_t j = i + 1; j < a.size(); ++j)
                    if (c.has_edge(a[i], a[j])) {
                        ok = false;
                        break;
                    }
            for (size_t i = 0; i < b.size() && ok; ++i)
                for (size_t j = i + 1; j < b.size(); ++j)
                    if (c.has_edge(b[i], b[j])) {
                        ok = false;
                        break;
                    }
            if (!ok)
                continue;
            // neighborhoods of a into b nested under some order: sort by degree
            std::vector<int> byd(a);
            std::sort(byd.begin(), byd.end(), [&](int x, int y) { return c.degree(x) < c.degree(y); });
            bool nested = true;
            for (size_t i = 0; i + 1 < byd.size() && nested; ++i)
                for (int w : c.neighbors(byd[i]))
                    if (!c.has_edge(byd[i + 1], w)) {
                        nested = false;
                        break;
                    }
            chain = nested;
        }
        CHECK(mine == chain);
    }
}
