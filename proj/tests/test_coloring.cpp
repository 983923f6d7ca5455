#include <random>

#include "doctest.h"
#include "satgame/coloring.hpp"
#include "satgame/oracle.hpp"

using namespace satgame;

namespace {

UGraph from_mask(int n, std::uint32_t mask) {
    UGraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if ((mask >> bit) & 1) g.insert_edge(u, v);
            ++bit;
        }
    return g;
}

UGraph random_graph(int n, int max_edges, std::mt19937_64& rng) {
    UGraph g(n);
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    const int count = static_cast<int>(rng() % (max_edges + 1));
    for (int i = 0; i < count && i < static_cast<int>(all.size()); ++i)
        g.insert_edge(all[i].u, all[i].v);
    return g;
}

bool valid_colouring(const UGraph& g, const std::vector<std::uint8_t>& col, int k) {
    for (const Edge& e : g.edges())
        if (col[e.u] == col[e.v]) return false;
    for (int v = 0; v < g.order(); ++v)
        if (col[v] >= k) return false;
    return true;
}

}  // namespace

TEST_CASE("chromatic_at_most on fixed graphs") {
    CHECK_FALSE(chromatic_at_most(complete_graph(4), 3));
    CHECK(chromatic_at_most(complete_graph(4), 4));
    CHECK(chromatic_at_most(cycle_graph(5), 3));
    CHECK_FALSE(chromatic_at_most(cycle_graph(5), 2));
    CHECK(chromatic_at_most(UGraph(6), 1));
    CHECK_FALSE(chromatic_at_most(path_graph(2), 1));
}

TEST_CASE("witness colourings are proper") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        UGraph g = random_graph(n, n * (n - 1) / 2, rng);
        for (int k = 1; k <= 4; ++k) {
            const auto w = find_k_colouring(g, k);
            CHECK(w.has_value() == chromatic_at_most(g, k));
            if (w) CHECK(valid_colouring(g, *w, std::max(k, n)));
            const auto wd = find_k_colouring_decomposed(g, k);
            CHECK(wd.has_value() == w.has_value());
            if (wd) CHECK(valid_colouring(g, *wd, std::max(k, n)));
        }
    }
}

TEST_CASE("chromatic_number agrees with the threshold test") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        UGraph g = random_graph(n, n * (n - 1) / 2, rng);
        const int chi = chromatic_number(g);
        CHECK(chromatic_at_most(g, chi));
        CHECK_FALSE(chromatic_at_most(g, chi - 1));
    }
}

TEST_CASE("orientation freeness equals colourability, exhaustive n = 4") {
    for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
        const UGraph g = from_mask(4, mask);
        for (int k = 1; k <= 4; ++k)
            CHECK(orientation_free_bruteforce(g, k) == chromatic_at_most(g, k));
    }
}

TEST_CASE("orientation freeness equals colourability, sampled n <= 6") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        UGraph g = random_graph(n, 12, rng);
        for (int k = 2; k <= 4; ++k)
            CHECK(orientation_free_bruteforce(g, k) == chromatic_at_most(g, k));
    }
}
