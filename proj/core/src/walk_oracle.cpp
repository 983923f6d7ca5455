#include "satgame/walk_oracle.hpp"

#include <algorithm>
#include <bit>

namespace satgame {

namespace {

// Kahn topological order; returns false if a cycle remains.
bool topological_order(const Digraph& g, std::vector<int>& order) {
    const int n = g.order();
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u) {
        std::uint64_t row = g.out_neighbours(u);
        while (row) {
            ++indeg[std::countr_zero(row)];
            row &= row - 1;
        }
    }
    order.clear();
    order.reserve(n);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        order.push_back(u);
        std::uint64_t row = g.out_neighbours(u);
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            if (--indeg[v] == 0) queue.push_back(v);
        }
    }
    return static_cast<int>(order.size()) == n;
}

}  // namespace

LongestPathOrder longest_path_order(const Digraph& g) {
    const int n = g.order();
    std::vector<int> order;
    if (!topological_order(g, order)) return {true, 0};

    std::vector<int> ending(n, 1);
    int best = n > 0 ? 1 : 0;
    for (int u : order) {
        std::uint64_t row = g.out_neighbours(u);
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            ending[v] = std::max(ending[v], ending[u] + 1);
            best = std::max(best, ending[v]);
        }
    }
    return {false, best};
}

bool walk_hom_exists(int k, const Digraph& g) {
    if (k <= 0) return true;
    LongestPathOrder lp = longest_path_order(g);
    return lp.has_cycle || lp.vertices >= k;
}

WalkCaches compute_walk_caches(const Digraph& g) {
    const int n = g.order();
    WalkCaches c;
    c.ending.assign(n, 1);
    c.starting.assign(n, 1);
    c.reach.assign(n, 0);

    std::vector<int> order;
    topological_order(g, order);

    for (int u : order) {
        std::uint64_t row = g.out_neighbours(u);
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            c.ending[v] = std::max(c.ending[v], c.ending[u] + 1);
        }
    }
    // reverse topological order for suffix quantities
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        std::uint64_t row = g.out_neighbours(u);
        c.reach[u] = row;
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            c.starting[u] = std::max(c.starting[u], c.starting[v] + 1);
            c.reach[u] |= c.reach[v];
        }
    }
    return c;
}

std::vector<Arc> legal_walk_arcs(const Digraph& g, int k) {
    const int n = g.order();
    WalkCaches c = compute_walk_caches(g);
    std::vector<Arc> out;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && arc_keeps_walk_free(g, c, k, u, v)) out.push_back({u, v});
    return out;
}

}  // namespace satgame
