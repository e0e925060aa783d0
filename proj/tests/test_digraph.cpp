#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "perdet/core.hpp"
#include "perdet/digraph.hpp"
#include "perdet/errors.hpp"
#include "perdet/oracle.hpp"

using namespace perdet;

TEST_CASE("digraph construction") {
    CHECK(build_digraph(SquareMatrix::identity(4)).arc_count() == 0);

    const Digraph g = build_digraph(perm_matrix(fixtures::cycle8()));
    const std::vector<std::pair<int, int>> expected{{1, 4}, {2, 1}, {3, 2}, {4, 3},
                                                    {5, 8}, {6, 5}, {7, 6}, {8, 7}};
    CHECK(g.arcs() == expected);

    CHECK_THROWS_AS(Digraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(3, {{1, 4}}), std::invalid_argument);
    CHECK(Digraph(3, {{1, 2}, {1, 2}}).arc_count() == 1); // duplicates collapse

    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const SquareMatrix a =
            generate({5, Rational(1, 2), EntryKind::small_rational, seed, false});
        CHECK(build_digraph(a) == build_digraph(phi(a)));
    }
}

TEST_CASE("dicycle enumeration") {
    CHECK(enumerate_dicycles(Digraph(4, {})).empty());

    const auto cycles = enumerate_dicycles(build_digraph(perm_matrix(fixtures::cycle8())));
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].vertices == std::vector<int>{1, 4, 3, 2});
    CHECK(cycles[1].vertices == std::vector<int>{5, 8, 7, 6});
    CHECK(cycles[0].length() == 4);
    CHECK(cycles[1].length() == 4);

    // The walk fixture's digraph has only odd dicycles.
    const auto walk_cycles = enumerate_dicycles(build_digraph(fixtures::walk_b()));
    CHECK(!walk_cycles.empty());
    for (const auto& c : walk_cycles) CHECK(c.length() % 2 == 1);
}

TEST_CASE("enumeration is canonical, sorted, valid, deterministic") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const SquareMatrix a = generate({6, Rational(2, 5), EntryKind::zero_one, seed, false});
        const Digraph g = build_digraph(a);
        const auto cycles = enumerate_dicycles(g);
        CHECK(cycles == enumerate_dicycles(g));
        for (std::size_t t = 0; t < cycles.size(); ++t) {
            const Dicycle& c = cycles[t];
            CHECK(cycle_in_digraph(c, g));
            CHECK(*std::min_element(c.vertices.begin(), c.vertices.end()) == c.vertices[0]);
            if (t > 0) {
                const Dicycle& prev = cycles[t - 1];
                const bool ordered =
                    prev.length() < c.length() ||
                    (prev.length() == c.length() && prev.vertices < c.vertices);
                CHECK(ordered);
            }
        }
    }
}

TEST_CASE("enumeration cap") {
    // complete digraph on 5 vertices has far more than 3 dicycles
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            if (i != j) arcs.emplace_back(i, j);
    CHECK_THROWS_AS(enumerate_dicycles(Digraph(5, arcs), 3), CycleCapExceeded);
}

TEST_CASE("even dicycle search") {
    const auto even = find_even_dicycle(build_digraph(perm_matrix(fixtures::cycle8())));
    REQUIRE(even.has_value());
    CHECK(even->vertices == std::vector<int>{1, 4, 3, 2});

    const auto two = find_even_dicycle(Digraph(2, {{1, 2}, {2, 1}}));
    REQUIRE(two.has_value());
    CHECK(two->vertices == std::vector<int>{1, 2});

    CHECK(!find_even_dicycle(Digraph(3, {{1, 2}, {2, 3}, {3, 1}})).has_value());

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Digraph g = build_digraph(
            generate({6, Rational(3, 10), EntryKind::zero_one, seed * 13, false}));
        bool any_even = false;
        for (const auto& c : enumerate_dicycles(g)) any_even = any_even || c.even();
        CHECK(find_even_dicycle(g).has_value() == any_even);
    }
}

TEST_CASE("shortest dicycle") {
    CHECK(!shortest_dicycle(Digraph(3, {{1, 2}, {2, 3}})).has_value());
    const auto tri = shortest_dicycle(Digraph(3, {{1, 2}, {2, 3}, {3, 1}}));
    REQUIRE(tri.has_value());
    CHECK(tri->vertices == std::vector<int>{1, 2, 3});

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Digraph g = build_digraph(
            generate({6, Rational(7, 20), EntryKind::zero_one, seed * 29, false}));
        const auto cycles = enumerate_dicycles(g);
        const auto shortest = shortest_dicycle(g);
        CHECK(shortest.has_value() == !cycles.empty());
        if (shortest) {
            CHECK(cycle_in_digraph(*shortest, g));
            CHECK(shortest->length() == cycles.front().length());
        }
    }
}

TEST_CASE("walk counting") {
    CHECK(count_walks(Digraph(3, {}), 2) == SquareMatrix(3));

    const Digraph gb = build_digraph(fixtures::walk_b());
    CHECK(adjacency_matrix(gb) == fixtures::walk_b());
    CHECK(count_walks(gb, 2) == fixtures::walk_b2());
    CHECK(count_walks(gb, 4) == fixtures::walk_b4());

    CHECK_THROWS_AS(count_walks(gb, 0), std::invalid_argument);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Digraph g = build_digraph(
            generate({1 + static_cast<int>(seed % 6), Rational(2, 5), EntryKind::zero_one,
                      seed * 71, false}));
        for (int k = 1; k <= 4; ++k) {
            const SquareMatrix counted = count_walks(g, k);
            for (int i = 1; i <= g.n(); ++i)
                for (int j = 1; j <= g.n(); ++j)
                    CHECK(counted.at(i, j) == fixtures::count_walks_brute(g, i, j, k));
        }
    }
}
