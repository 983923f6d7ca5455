#include <random>
#include <stdexcept>

#include "doctest.h"
#include "satgame/errors.hpp"
#include "satgame/hom_search.hpp"
#include "satgame/oracle.hpp"
#include "satgame/walk_oracle.hpp"

using namespace satgame;

namespace {

Digraph from_mask(int n, std::uint32_t mask) {
    Digraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if ((mask >> bit) & 1) g.insert_arc(u, v);
            ++bit;
        }
    return g;
}

Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
    Digraph g(n);
    std::bernoulli_distribution flip(p);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && flip(rng)) g.insert_arc(u, v);
    return g;
}

// Independent longest-path-ending-at-v search: plain DFS over simple paths,
// no dynamic programming.
int longest_ending_at(const Digraph& g, int v) {
    int best = 1;
    struct Frame {
        int vertex;
        std::uint64_t visited;
        int length;
    };
    std::vector<Frame> work{{v, std::uint64_t{1} << v, 1}};
    while (!work.empty()) {
        Frame f = work.back();
        work.pop_back();
        best = std::max(best, f.length);
        const std::uint64_t preds = g.in_neighbours(f.vertex) & ~f.visited;
        for (int u = 0; u < g.order(); ++u)
            if ((preds >> u) & 1)
                work.push_back({u, f.visited | (std::uint64_t{1} << u), f.length + 1});
    }
    return best;
}

FamilySpec walk_hom_family(int k) {
    return FamilySpec::walk_on_k(k, ContainmentMode::homomorphism);
}

Digraph complete_bipartite_oneway(int left, int right) {
    Digraph g(left + right);
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v) g.insert_arc(u, left + v);
    return g;
}

Digraph transitive_tournament(int n) {
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.insert_arc(u, v);
    return g;
}

}  // namespace

TEST_CASE("longest_path_order") {
    CHECK_FALSE(longest_path_order(directed_path(3)).has_cycle);
    CHECK(longest_path_order(directed_path(3)).vertices == 3);

    Digraph cyc = add_arc(add_arc(Digraph(2), {0, 1}), {1, 0});
    CHECK(longest_path_order(cyc).has_cycle);

    CHECK(longest_path_order(Digraph(5)).vertices == 1);
}

TEST_CASE("walk_hom_exists base cases") {
    Digraph one = add_arc(Digraph(2), {0, 1});
    CHECK_FALSE(walk_hom_exists(3, one));
    CHECK(walk_hom_exists(2, one));

    Digraph cyc = add_arc(add_arc(Digraph(2), {0, 1}), {1, 0});
    CHECK(walk_hom_exists(10, cyc));
}

TEST_CASE("hom_exists") {
    CHECK(hom_exists(directed_path(3), directed_path(3)));
    CHECK_FALSE(hom_exists(directed_path(3), add_arc(Digraph(2), {0, 1})));

    Digraph two_cycle = add_arc(add_arc(Digraph(2), {0, 1}), {1, 0});
    CHECK_FALSE(hom_exists(two_cycle, transitive_tournament(4)));
    CHECK(hom_exists(two_cycle, two_cycle));
}

TEST_CASE("walk fast path agrees with general homomorphism search") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);  // n <= 6
        Digraph g = random_digraph(n, 0.3, rng);
        for (int k = 1; k <= 6; ++k)
            CHECK(walk_hom_exists(k, g) == hom_exists(directed_path(k), g));
    }
}

TEST_CASE("subdigraph_exists") {
    CHECK(subdigraph_exists(directed_path(3), directed_path(3)));

    Digraph two_cycle = add_arc(add_arc(Digraph(2), {0, 1}), {1, 0});
    CHECK_FALSE(subdigraph_exists(directed_path(3), two_cycle));

    // exhaustive check over injections: a 4-vertex pattern cannot embed in 3
    CHECK_FALSE(subdigraph_exists(directed_path(4), transitive_tournament(3)));
}

TEST_CASE("is_family_free") {
    CHECK(is_family_free(Digraph(5), walk_hom_family(3)));
    CHECK_FALSE(is_family_free(directed_path(3), walk_hom_family(3)));
    CHECK(is_family_free(complete_bipartite_oneway(2, 2), walk_hom_family(3)));

    FamilySpec expl = FamilySpec::explicit_digraphs({directed_path(2)},
                                                    ContainmentMode::subdigraph);
    CHECK(is_family_free(Digraph(3), expl));
    CHECK_FALSE(is_family_free(add_arc(Digraph(3), {0, 1}), expl));
}

TEST_CASE("vertex_classes") {
    const auto path = vertex_classes(directed_path(3), 4);
    CHECK(path.class_of == std::vector<int>{1, 2, 3});
    CHECK(path.sizes == std::vector<int>{1, 1, 1});

    const auto empty = vertex_classes(Digraph(4), 4);
    CHECK(empty.class_of == std::vector<int>{1, 1, 1, 1});

    Digraph join(3);
    join.insert_arc(0, 2);
    join.insert_arc(1, 2);
    const auto two_sources = vertex_classes(join, 3);
    CHECK(two_sources.class_of == std::vector<int>{1, 1, 2});
    CHECK(two_sources.sizes == std::vector<int>{2, 1});

    Digraph cyc = add_arc(add_arc(Digraph(2), {0, 1}), {1, 0});
    CHECK_THROWS_AS(vertex_classes(cyc, 4), std::invalid_argument);
    CHECK_THROWS_AS(vertex_classes(directed_path(4), 4), std::invalid_argument);
}

TEST_CASE("vertex classes match explicit per-vertex longest-path search") {
    std::mt19937_64 rng(37);
    int accepted = 0;
    while (accepted < 40) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Digraph g = random_digraph(n, 0.25, rng);
        const auto lp = longest_path_order(g);
        if (lp.has_cycle) continue;
        const int k = lp.vertices + 1;
        ++accepted;
        const auto classes = vertex_classes(g, k);
        for (int v = 0; v < n; ++v) CHECK(classes.class_of[v] == longest_ending_at(g, v));
    }
}

TEST_CASE("saturated_edge_count") {
    CHECK(saturated_edge_count({2, 2}, 4) == 4);
    CHECK(saturated_edge_count({1, 1, 1}, 3) == 3);
    CHECK(saturated_edge_count({3, 1, 1, 1}, 6) == 12);
    CHECK_THROWS_AS(saturated_edge_count({2, 2}, 5), std::invalid_argument);
}

TEST_CASE("is_saturated") {
    CHECK(is_saturated(transitive_tournament(3), walk_hom_family(4)));
    CHECK_FALSE(is_saturated(Digraph(3), walk_hom_family(3)));
    CHECK(is_saturated(complete_bipartite_oneway(2, 2), walk_hom_family(3)));
    CHECK_THROWS_AS(is_saturated(directed_path(3), walk_hom_family(3)),
                    std::invalid_argument);
}

TEST_CASE("adding arcs never restores family-freeness") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Digraph g = random_digraph(n, 0.35, rng);
        const FamilySpec fam = walk_hom_family(2 + static_cast<int>(rng() % 3));
        if (is_family_free(g, fam)) continue;
        for (const Arc& a : missing_arcs(g)) CHECK_FALSE(is_family_free(g.with_arc(a), fam));
    }
}

TEST_CASE("saturated digraphs decompose into full class layers") {
    // exhaustive over all digraphs on n <= 4 plus a seeded sample at n = 5
    auto check_graph = [](const Digraph& g, int k) {
        const FamilySpec fam = walk_hom_family(k);
        if (!is_family_free(g, fam)) return;
        if (!is_saturated(g, fam)) return;
        if (g.order() < k) return;
        const auto classes = vertex_classes(g, k);
        for (int size : classes.sizes) CHECK(size > 0);
        CHECK(g.arc_count() == saturated_edge_count(classes.sizes, g.order()));
    };
    for (int n = 2; n <= 4; ++n) {
        const int slots = n * (n - 1);
        for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
            const Digraph g = from_mask(n, mask);
            check_graph(g, 3);
            check_graph(g, 4);
        }
    }
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 4000; ++trial) {
        const Digraph g = random_digraph(5, 0.3, rng);
        check_graph(g, 3);
        check_graph(g, 4);
    }
}

TEST_CASE("orientation freeness brute force") {
    CHECK_FALSE(orientation_free_bruteforce(complete_graph(3), 2));
    CHECK(orientation_free_bruteforce(path_graph(3), 2));
    CHECK_FALSE(orientation_free_bruteforce(cycle_graph(5), 2));
    CHECK(orientation_free_bruteforce(cycle_graph(5), 3));
    CHECK_THROWS_AS(orientation_free_bruteforce(complete_graph(8), 3), budget_error);
}
