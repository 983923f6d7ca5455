#pragma once

#include <cstdint>
#include <vector>

#include "satgame/digraph.hpp"

namespace satgame {

// Longest directed path measured in vertices. A graph with a directed cycle
// hosts arbitrarily long walks, so the count is reported separately from the
// cycle flag.
struct LongestPathOrder {
    bool has_cycle = false;
    int vertices = 0;  // meaningful only when !has_cycle
};

// Dynamic programming over a topological order; detects cycles.
LongestPathOrder longest_path_order(const Digraph& g);

// True iff g contains a directed walk visiting k (not necessarily distinct)
// vertices: a cycle, or a directed path on >= k vertices.
bool walk_hom_exists(int k, const Digraph& g);

/**
 * Per-state caches that make single-arc legality O(1):
 *   ending[v]   vertices on the longest path ending at v
 *   starting[v] vertices on the longest path starting at v
 *   reach[v]    bitmask of vertices reachable from v (excluding v unless on a cycle)
 * Valid for acyclic g only.
 */
struct WalkCaches {
    std::vector<int> ending;
    std::vector<int> starting;
    std::vector<std::uint64_t> reach;
};

WalkCaches compute_walk_caches(const Digraph& g);

// Would g + (u -> v) still be free of k-vertex walks? Requires caches for g.
inline bool arc_keeps_walk_free(const Digraph& g, const WalkCaches& c, int k, int u, int v) {
    if (g.has_arc(u, v)) return false;
    if ((c.reach[v] >> u) & 1) return false;  // closes a cycle
    return c.ending[u] + c.starting[v] <= k - 1;
}

// All missing arcs whose addition keeps g free of k-vertex walks, ascending.
std::vector<Arc> legal_walk_arcs(const Digraph& g, int k);

}  // namespace satgame
