#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace satgame {

// Ordered pair u -> v, u != v.
struct Arc {
    int from = 0;
    int to = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend std::strong_ordering operator<=>(const Arc&, const Arc&) = default;
};

/**
 * Directed graph on at most 64 vertices, one out-neighbour bitmask per
 * vertex. No self-loops; anti-parallel arc pairs are representable and are
 * excluded (or not) by the forbidden-structure oracle, not here.
 *
 * Values are immutable from the engine's perspective: game transitions go
 * through the copy-and-insert operation with_arc / add_arc.
 */
class Digraph {
public:
    static constexpr int max_vertices = 64;

    Digraph() = default;
    explicit Digraph(int n);

    int order() const { return n_; }
    int arc_count() const { return arcs_; }

    bool has_arc(int u, int v) const { return (out_[u] >> v) & 1; }
    bool has_arc(Arc a) const { return has_arc(a.from, a.to); }

    std::uint64_t out_neighbours(int u) const { return out_[u]; }
    std::uint64_t in_neighbours(int v) const;

    int out_degree(int u) const;
    int in_degree(int v) const;
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    // Unchecked insertion; callers that need validation use add_arc.
    void insert_arc(int u, int v);

    Digraph with_arc(Arc a) const;

    std::vector<Arc> arcs() const;  // ascending (from, to)

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int n_ = 0;
    int arcs_ = 0;
    std::vector<std::uint64_t> out_;
};

// Validated copy-and-insert: rejects out-of-range endpoints, self-loops and
// duplicate arcs.
Digraph add_arc(const Digraph& g, Arc a);

// All ordered pairs (u, v), u != v, with no arc u -> v, ascending.
std::vector<Arc> missing_arcs(const Digraph& g);

// Relabel vertices: vertex v of g becomes perm[v] in the result.
Digraph permute(const Digraph& g, const std::vector<int>& perm);

// Directed path on k vertices 0 -> 1 -> ... -> k-1.
Digraph directed_path(int k);

}  // namespace satgame
