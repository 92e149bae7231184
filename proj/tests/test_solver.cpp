#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pick/exact_solver.hpp"
#include "testutil.hpp"

using namespace pick;
using namespace testutil;

TEST_CASE("oracle golden values for the named obstructions")
{
    CHECK(oracle_opt(claw(), Problem::pic, 4) == 1);
    CHECK(oracle_opt(cycle(4), Problem::pic, 4) == 1);
    CHECK(oracle_opt(cycle(5), Problem::pic, 4) == 2);
    CHECK(oracle_opt(net(), Problem::pic, 4) == 2);
    CHECK(oracle_opt(sun3(), Problem::pic, 4) == 2);

    CHECK(oracle_opt(empty_graph(3), Problem::bcc, 4) == 1);
    CHECK(oracle_opt(cycle(4), Problem::bcc, 4) == 1);
    CHECK(oracle_opt(cycle(5), Problem::bcc, 4) == 2);

    CHECK(oracle_opt(path(5), Problem::pic, 0) == 0);
    CHECK_FALSE(oracle_opt(cycle(6), Problem::pic, 2).has_value()); // needs 3
}

TEST_CASE("branch solver agrees with the oracle on basic cases")
{
    Solution s = branch_solve(claw(), Problem::pic, 1);
    REQUIRE(s.feasible);
    CHECK(s.completion.size() == 1);
    CHECK(verify_solution(claw(), Problem::pic, s.completion));

    CHECK_FALSE(branch_solve(cycle(5), Problem::pic, 1).feasible);
    CHECK(branch_solve(cycle(5), Problem::pic, 2).feasible);

    Solution pi = branch_solve(path(6), Problem::pic, 0);
    CHECK(pi.feasible);
    CHECK(pi.completion.empty());

    CHECK(branch_solve(empty_graph(3), Problem::bcc, 1).feasible);
    CHECK_FALSE(branch_solve(empty_graph(3), Problem::bcc, 0).feasible);
}

TEST_CASE("long holes are pruned without chord branching")
{
    for (int q = 6; q <= 10; ++q) {
        SearchStats st;
        Solution s = branch_solve(cycle(q), Problem::pic, q - 4, &st);
        CHECK_FALSE(s.feasible);
        CHECK(st.hole_prunes > 0);
        CHECK(st.chord_branches == 0);
    }
    // with enough budget the chords are expanded and a completion found
    SearchStats st;
    Solution s = branch_solve(cycle(6), Problem::pic, 3, &st);
    CHECK(s.feasible);
    CHECK(st.chord_branches > 0);
}

TEST_CASE("solver decision matches the oracle exhaustively on small graphs")
{
    long bad = 0;
    for (int n = 0; n <= 6; ++n) {
        int pc = pair_count(n);
        for (uint64_t mask = 0; mask < (uint64_t(1) << pc); ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (int k = 0; k <= 2; ++k) {
                if (branch_solve(g, Problem::pic, k).feasible !=
                    oracle_opt(g, Problem::pic, k).has_value())
                    ++bad;
                if (branch_solve(g, Problem::bcc, k).feasible !=
                    oracle_opt(g, Problem::bcc, k).has_value())
                    ++bad;
            }
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("solver decision matches the oracle on random graphs up to ten vertices")
{
    for (uint32_t seed = 0; seed < 1000; ++seed) {
        int n = 4 + seed % 7; // 4..10
        double d = 0.2 + 0.06 * (seed % 11);
        Graph g = random_graph(n, d, 61000 + seed);
        int k = seed % 4;
        Problem p = (seed % 2 == 0) ? Problem::pic : Problem::bcc;
        auto opt = oracle_opt(g, p, k);
        Solution s = branch_solve(g, p, k);
        REQUIRE_MESSAGE(s.feasible == opt.has_value(), "seed=", seed, " n=", n, " k=", k);
        if (s.feasible) {
            CHECK(static_cast<int>(s.completion.size()) <= k);
            CHECK(verify_solution(g, p, s.completion));
        }
    }
}

TEST_CASE("feasibility is monotone in the budget")
{
    for (uint32_t seed = 0; seed < 120; ++seed) {
        Graph g = random_graph(6 + seed % 3, 0.4, 63000 + seed);
        bool prev = false;
        for (int k = 0; k <= 4; ++k) {
            bool now = branch_solve(g, Problem::pic, k).feasible;
            if (prev)
                CHECK(now);
            prev = now;
        }
    }
}

TEST_CASE("solve_optimum equals the oracle optimum")
{
    for (uint32_t seed = 0; seed < 80; ++seed) {
        Graph g = random_graph(5 + seed % 4, 0.35, 65000 + seed);
        for (Problem p : {Problem::pic, Problem::bcc}) {
            int opt = solve_optimum(g, p);
            auto oracle = oracle_opt(g, p, opt);
            REQUIRE(oracle.has_value());
            CHECK(*oracle == opt);
            if (opt > 0)
                CHECK_FALSE(oracle_opt(g, p, opt - 1).has_value());
        }
    }
}

TEST_CASE("verify_solution rejects overlaps and checks membership")
{
    CHECK_THROWS_AS(verify_solution(path(3), Problem::pic, {{0, 1}}), std::invalid_argument);
    CHECK_FALSE(verify_solution(claw(), Problem::pic, {}));
    CHECK(verify_solution(cycle(4), Problem::pic, {{0, 2}}));
    CHECK(verify_solution(cycle(4), Problem::bcc, {{0, 2}}));
}

TEST_CASE("extremal edges of an optimal completion's ordering lie in the original graph")
{
    for (uint32_t seed = 0; seed < 150; ++seed) {
        Graph g = random_graph(5 + seed % 4, 0.4, 67000 + seed);
        int opt = solve_optimum(g, Problem::pic);
        if (opt == 0)
            continue;
        Solution s = branch_solve(g, Problem::pic, opt);
        REQUIRE(s.feasible);
        REQUIRE(static_cast<int>(s.completion.size()) == opt);
        Graph h = g;
        for (auto [u, v] : s.completion)
            h.add_edge(u, v);
        auto ord = umbrella_ordering(h);
        REQUIRE(ord.has_value());
        for (auto [u, v] : extremal_edges(h, *ord))
            CHECK(g.has_edge(u, v));
    }
}
