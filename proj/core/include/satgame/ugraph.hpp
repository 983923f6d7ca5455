#pragma once

#include <compare>
#include <vector>

#include "satgame/bits.hpp"

namespace satgame {

// Unordered pair {u, v}, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend std::strong_ordering operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Undirected simple graph with bitset adjacency rows. Orientation games run
 * on boards well past 64 vertices, so rows are multi-word; the cap is a
 * compile-time constant.
 */
class UGraph {
public:
    static constexpr int max_vertices = 512;

    UGraph() = default;
    explicit UGraph(int n);

    int order() const { return n_; }
    int edge_count() const { return edges_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    const bitset_row& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    void insert_edge(int u, int v);
    UGraph with_edge(Edge e) const;

    std::vector<Edge> edges() const;  // ascending (u, v)

    friend bool operator==(const UGraph&, const UGraph&) = default;

private:
    int n_ = 0;
    int edges_ = 0;
    std::vector<bitset_row> adj_;
};

// Validated copy-and-insert, mirroring add_arc.
UGraph add_edge(const UGraph& g, Edge e);

std::vector<Edge> missing_edges(const UGraph& g);

UGraph complete_graph(int n);
UGraph cycle_graph(int n);
UGraph path_graph(int n);

}  // namespace satgame
