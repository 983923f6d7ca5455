#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "satgame/canonical.hpp"
#include "satgame/digraph.hpp"
#include "satgame/errors.hpp"
#include "satgame/graph_io.hpp"
#include "satgame/ugraph.hpp"

using namespace satgame;

namespace {

Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
    Digraph g(n);
    std::bernoulli_distribution flip(p);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && flip(rng)) g.insert_arc(u, v);
    return g;
}

}  // namespace

TEST_CASE("add_arc inserts exactly one arc") {
    Digraph g(3);
    Digraph h = add_arc(g, {0, 1});
    CHECK(h.arc_count() == 1);
    CHECK(h.has_arc(0, 1));
    CHECK_FALSE(h.has_arc(1, 0));

    // anti-parallel arcs are distinct
    Digraph two = add_arc(h, {1, 0});
    CHECK(two.arc_count() == 2);
    CHECK(two.has_arc(1, 0));

    CHECK_THROWS_AS(add_arc(h, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(add_arc(h, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(add_arc(h, {0, 7}), std::invalid_argument);
}

TEST_CASE("missing_arcs enumerates complements in order") {
    Digraph e2(2);
    CHECK(missing_arcs(e2) == std::vector<Arc>{{0, 1}, {1, 0}});

    Digraph k3(3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            if (u != v) k3.insert_arc(u, v);
    CHECK(missing_arcs(k3).empty());

    Digraph one = add_arc(Digraph(2), {0, 1});
    CHECK(missing_arcs(one) == std::vector<Arc>{{1, 0}});
}

TEST_CASE("missing_arcs length matches arc count") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        Digraph g = random_digraph(n, 0.4, rng);
        CHECK(static_cast<int>(missing_arcs(g).size()) == n * (n - 1) - g.arc_count());
    }
}

TEST_CASE("arc count grows by one under add_arc") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        Digraph g = random_digraph(n, 0.3, rng);
        const auto missing = missing_arcs(g);
        if (missing.empty()) continue;
        const Arc a = missing[rng() % missing.size()];
        CHECK(add_arc(g, a).arc_count() == g.arc_count() + 1);
    }
}

TEST_CASE("canonical keys identify relabelled digraphs") {
    Digraph a = add_arc(Digraph(3), {0, 1});
    Digraph b = add_arc(Digraph(3), {2, 0});
    CHECK(canonical_key(a) == canonical_key(b));

    Digraph cyc = add_arc(add_arc(Digraph(3), {0, 1}), {1, 0});
    CHECK_FALSE(canonical_key(a) == canonical_key(cyc));

    Digraph p1 = add_arc(add_arc(Digraph(3), {0, 1}), {1, 2});
    Digraph p2 = add_arc(add_arc(Digraph(3), {2, 1}), {1, 0});
    CHECK(canonical_key(p1) == canonical_key(p2));

    CHECK_THROWS_AS(canonical_key(Digraph(9)), budget_error);
}

TEST_CASE("canonical keys are permutation invariant") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);  // n <= 7
        Digraph g = random_digraph(n, 0.35, rng);
        const CanonicalKey key = canonical_key(g);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int rep = 0; rep < 100; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_key(permute(g, perm)) == key);
        }
    }
}

TEST_CASE("digraph text round trip") {
    Digraph g = add_arc(add_arc(Digraph(4), {0, 2}), {3, 1});
    const std::string text = to_text(g);
    CHECK(text == "n 4\n0 2\n3 1\n");
    CHECK(digraph_from_text(text) == g);
    CHECK_THROWS_AS(digraph_from_text("bogus"), std::invalid_argument);
}

TEST_CASE("ugraph basics and text round trip") {
    UGraph g(5);
    g.insert_edge(1, 3);
    g.insert_edge(0, 4);
    CHECK(g.has_edge(3, 1));
    CHECK(g.edge_count() == 2);
    CHECK(to_text(g) == "n 5\n0 4\n1 3\n");
    CHECK(ugraph_from_text(to_text(g)) == g);
    CHECK_THROWS_AS(add_edge(g, {1, 3}), std::invalid_argument);

    UGraph big(400);
    big.insert_edge(0, 399);
    CHECK(big.has_edge(399, 0));
    CHECK(static_cast<int>(missing_edges(big).size()) == 400 * 399 / 2 - 1);
}
