#include "satgame/digraph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace satgame {

Digraph::Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("Digraph: order must be in [0, 64], got " + std::to_string(n));
}

std::uint64_t Digraph::in_neighbours(int v) const {
    std::uint64_t in = 0;
    for (int u = 0; u < n_; ++u)
        if ((out_[u] >> v) & 1) in |= std::uint64_t{1} << u;
    return in;
}

int Digraph::out_degree(int u) const { return std::popcount(out_[u]); }

int Digraph::in_degree(int v) const { return std::popcount(in_neighbours(v)); }

void Digraph::insert_arc(int u, int v) {
    out_[u] |= std::uint64_t{1} << v;
    ++arcs_;
}

Digraph Digraph::with_arc(Arc a) const {
    Digraph g = *this;
    g.insert_arc(a.from, a.to);
    return g;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(static_cast<std::size_t>(arcs_));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t row = out_[u];
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            out.push_back({u, v});
        }
    }
    return out;
}

Digraph add_arc(const Digraph& g, Arc a) {
    if (a.from < 0 || a.from >= g.order() || a.to < 0 || a.to >= g.order())
        throw std::invalid_argument("add_arc: endpoint out of range");
    if (a.from == a.to)
        throw std::invalid_argument("add_arc: self-loop rejected");
    if (g.has_arc(a))
        throw std::invalid_argument("add_arc: duplicate arc rejected");
    return g.with_arc(a);
}

std::vector<Arc> missing_arcs(const Digraph& g) {
    std::vector<Arc> out;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !g.has_arc(u, v)) out.push_back({u, v});
    return out;
}

Digraph permute(const Digraph& g, const std::vector<int>& perm) {
    Digraph h(g.order());
    for (const Arc& a : g.arcs()) h.insert_arc(perm[a.from], perm[a.to]);
    return h;
}

Digraph directed_path(int k) {
    Digraph g(k);
    for (int i = 0; i + 1 < k; ++i) g.insert_arc(i, i + 1);
    return g;
}

}  // namespace satgame
