#include "satgame/ugraph.hpp"

#include <stdexcept>
#include <string>

namespace satgame {

UGraph::UGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), bitset_row(n)) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("UGraph: order must be in [0, " +
                                    std::to_string(max_vertices) + "], got " + std::to_string(n));
}

void UGraph::insert_edge(int u, int v) {
    adj_[u].set(v);
    adj_[v].set(u);
    ++edges_;
}

UGraph UGraph::with_edge(Edge e) const {
    UGraph g = *this;
    g.insert_edge(e.u, e.v);
    return g;
}

std::vector<Edge> UGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v != -1; v = adj_[u].next(v + 1))
            out.push_back({u, v});
    return out;
}

UGraph add_edge(const UGraph& g, Edge e) {
    if (e.u < 0 || e.v >= g.order())
        throw std::invalid_argument("add_edge: endpoint out of range");
    if (e.u == e.v)
        throw std::invalid_argument("add_edge: self-loop rejected");
    if (g.has_edge(e))
        throw std::invalid_argument("add_edge: duplicate edge rejected");
    return g.with_edge(e);
}

std::vector<Edge> missing_edges(const UGraph& g) {
    std::vector<Edge> out;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.push_back({u, v});
    return out;
}

UGraph complete_graph(int n) {
    UGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.insert_edge(u, v);
    return g;
}

UGraph cycle_graph(int n) {
    UGraph g(n);
    for (int u = 0; u < n; ++u) g.insert_edge(u, (u + 1) % n);
    return g;
}

UGraph path_graph(int n) {
    UGraph g(n);
    for (int u = 0; u + 1 < n; ++u) g.insert_edge(u, u + 1);
    return g;
}

}  // namespace satgame
