#include <gtest/gtest.h>

#include <random>

#include "cspt/solver.hpp"
#include "oracles.hpp"

using namespace cspt;

namespace {

ListAssignment random_lists(std::size_t n, int k, int max_len, std::mt19937_64& rng) {
    ListAssignment la{k, {}};
    for (std::size_t v = 0; v < n; ++v) {
        ColourMask m = 0;
        const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
        while (std::popcount(m) < std::min(len, k)) m |= colour_bit(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k)));
        la.lists.push_back(m);
    }
    return la;
}

} // namespace

TEST(Solver, ListColouringMatchesEnumeration) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(trial % 7);
        const int k = 2 + trial % 3;
        const Graph g = oracle::random_graph(n, 0.25 + 0.1 * (trial % 5), 1000 + static_cast<std::uint64_t>(trial));
        const auto la = random_lists(n, k, k, rng);
        const bool expect = oracle::colour_by_enumeration(g, k, la.lists).has_value();
        const auto a = solve_list_colouring(g, la);
        const auto b = solve_list_colouring_search(g, la);
        const auto c = solve_list_colouring_cdcl(g, la);
        ASSERT_EQ(a.has_value(), expect) << "trial " << trial;
        ASSERT_EQ(b.has_value(), expect) << "trial " << trial;
        ASSERT_EQ(c.has_value(), expect) << "trial " << trial;
        for (const auto* col : {&a, &b, &c})
            if (*col) { EXPECT_TRUE(is_valid_colouring(g, **col, &la)); }
    }
}

TEST(Solver, TwoListPathAgreesWithEnumeration) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 4 + static_cast<std::size_t>(trial % 6);
        const int k = 3 + trial % 3;
        const Graph g = oracle::random_graph(n, 0.4, 77 + static_cast<std::uint64_t>(trial));
        const auto la = random_lists(n, k, 2, rng);
        const bool expect = oracle::colour_by_enumeration(g, k, la.lists).has_value();
        const auto two = solve_two_list_colouring(g, la);
        ASSERT_EQ(two.has_value(), expect) << "trial " << trial;
        if (two) { EXPECT_TRUE(is_valid_colouring(g, *two, &la)); }
    }
}

TEST(Solver, KColouringCountsAgree) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Graph g = oracle::random_graph(4 + seed % 5, 0.5, seed);
        for (int k = 1; k <= 4; ++k) {
            const bool expect = oracle::count_colourings(g, k) > 0;
            const auto c = find_k_colouring(g, k);
            ASSERT_EQ(c.has_value(), expect) << "seed " << seed << " k " << k;
            if (c) { EXPECT_TRUE(is_valid_colouring(g, *c)); }
        }
    }
}

TEST(Solver, ChromaticNumbers) {
    EXPECT_EQ(chromatic_number(empty_graph(0), 3), 0);
    EXPECT_EQ(chromatic_number(empty_graph(4), 3), 1);
    EXPECT_EQ(chromatic_number(path_graph(6), 3), 2);
    EXPECT_EQ(chromatic_number(cycle_graph(7), 3), 3);
    EXPECT_EQ(chromatic_number(complete_graph(6), 6), 6);
    EXPECT_EQ(chromatic_number(wheel5_graph(), 5), 3); // hub plus C4
    EXPECT_THROW(chromatic_number(complete_graph(5), 4), GuardError);
}

TEST(Solver, MonotoneInK) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Graph g = oracle::random_graph(9, 0.45, seed);
        bool prev = false;
        for (int k = 1; k <= 6; ++k) {
            const bool now = is_k_colourable(g, k);
            EXPECT_TRUE(!prev || now);
            prev = now;
        }
    }
}

TEST(Solver, ShrinkingListsNeverHelps) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(8, 0.4, 500 + static_cast<std::uint64_t>(trial));
        auto la = random_lists(8, 4, 4, rng);
        const bool before = solve_list_colouring(g, la).has_value();
        const Vertex v = static_cast<Vertex>(rng() % 8);
        if (std::popcount(la.lists[v]) > 1) la.lists[v] &= la.lists[v] - 1;
        const bool after = solve_list_colouring(g, la).has_value();
        EXPECT_TRUE(before || !after);
    }
}

TEST(Solver, Precolouring) {
    const Graph g = path_graph(3);
    Precolouring pre{2, {{0, 1}, {2, 2}}};
    EXPECT_FALSE(extend_precolouring(g, 2, pre).has_value());
    pre.assignment[2] = 1;
    const auto c = extend_precolouring(g, 2, pre);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->colour, (std::vector<int>{1, 2, 1}));
    EXPECT_THROW(extend_precolouring(g, 2, Precolouring{2, {{0, 3}}}), PreconditionError);
    EXPECT_THROW(extend_precolouring(g, 2, Precolouring{2, {{0, 1}, {1, 1}}}), PreconditionError);
}

TEST(Solver, ForcedRelations) {
    // in a 3-colouring of the diamond the two degree-2 vertices agree
    Graph diamond(4);
    diamond.add_edge(0, 1);
    diamond.add_edge(0, 2);
    diamond.add_edge(1, 2);
    diamond.add_edge(1, 3);
    diamond.add_edge(2, 3);
    EXPECT_TRUE(forced_equal(diamond, 3, 0, 3));
    EXPECT_FALSE(forced_equal(diamond, 4, 0, 3));
    EXPECT_TRUE(forced_distinct(diamond, 3, 1, 2));
    EXPECT_FALSE(forced_distinct(path_graph(3), 2, 0, 2));
    EXPECT_TRUE(forced_distinct(path_graph(4), 2, 0, 3));
    EXPECT_THROW(forced_equal(diamond, 3, 1, 2), PreconditionError);
    EXPECT_THROW(forced_equal(complete_graph(4), 3, 0, 1), PreconditionError);
}

TEST(Solver, InputValidation) {
    const Graph g = path_graph(3);
    EXPECT_THROW(solve_list_colouring(g, ListAssignment{2, {1, 1}}), PreconditionError);
    EXPECT_FALSE(solve_list_colouring(g, ListAssignment{2, {1, 0, 1}}).has_value());
    EXPECT_THROW(solve_list_colouring(g, ListAssignment{2, {1, 4, 1}}), PreconditionError);
    EXPECT_THROW(find_k_colouring(g, 0), PreconditionError);
}

TEST(Solver, Deterministic) {
    const Graph g = oracle::random_graph(40, 0.15, 9);
    EXPECT_EQ(find_k_colouring(g, 4), find_k_colouring(g, 4));
    const auto la = ListAssignment::full(40, 4);
    EXPECT_EQ(solve_list_colouring(g, la), solve_list_colouring(g, la));
}

TEST(Solver, BudgetedSearchHandsOff) {
    // a one-node budget cannot finish, the full solver still must
    const Graph g = oracle::random_graph(60, 0.12, 4);
    detail::ListColouringSearch tiny(g, ListAssignment::full(60, 3), false, 1);
    const auto r = tiny.run();
    if (!r) { EXPECT_TRUE(tiny.exhausted()); }
    EXPECT_EQ(solve_list_colouring(g, ListAssignment::full(60, 3)).has_value(),
              solve_list_colouring_cdcl(g, ListAssignment::full(60, 3)).has_value());
}
