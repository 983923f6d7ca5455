#include "satgame/coloring.hpp"

#include <algorithm>
#include <cstring>

#include "satgame/errors.hpp"

namespace satgame {

namespace {

constexpr std::uint64_t search_node_budget = 200'000'000;

// Exact k-colouring search. Colours are used contiguously (a vertex may open
// at most one new colour), which prunes colour permutations without losing
// completeness. Branch vertex: maximum saturation degree, then lowest index.
class ColouringSearch {
public:
    ColouringSearch(const UGraph& g, int k)
        : g_(g), n_(g.order()), k_(k),
          colour_(n_, -1),
          neighbour_colour_count_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(kel()), 0),
          saturation_(n_, 0) {}

    std::optional<std::vector<std::uint8_t>> run() {
        if (n_ == 0) return std::vector<std::uint8_t>{};
        if (k_ <= 0) return std::nullopt;
        if (!descend(0, 0)) return std::nullopt;
        std::vector<std::uint8_t> out(n_);
        for (int v = 0; v < n_; ++v) out[v] = static_cast<std::uint8_t>(colour_[v]);
        return out;
    }

private:
    int kel() const { return std::max(k_, 1); }

    int& count(int v, int c) { return neighbour_colour_count_[static_cast<std::size_t>(v) * kel() + c]; }

    void assign(int v, int c) {
        colour_[v] = c;
        for (int u = g_.neighbours(v).next(0); u != -1; u = g_.neighbours(v).next(u + 1)) {
            if (colour_[u] != -1) continue;
            if (count(u, c)++ == 0) ++saturation_[u];
        }
    }

    void unassign(int v, int c) {
        colour_[v] = -1;
        for (int u = g_.neighbours(v).next(0); u != -1; u = g_.neighbours(v).next(u + 1)) {
            if (colour_[u] != -1) continue;
            if (--count(u, c) == 0) --saturation_[u];
        }
    }

    bool descend(int coloured, int used) {
        if (coloured == n_) return true;
        if (++nodes_ > search_node_budget)
            throw budget_error("k-colouring search exceeded node budget");

        int v = -1;
        for (int u = 0; u < n_; ++u)
            if (colour_[u] == -1 && (v == -1 || saturation_[u] > saturation_[v])) v = u;

        if (saturation_[v] >= k_) return false;  // wipeout at the tightest vertex

        const int limit = std::min(k_ - 1, used);
        for (int c = 0; c <= limit; ++c) {
            if (count(v, c) != 0) continue;
            assign(v, c);
            if (descend(coloured + 1, std::max(used, c + 1))) return true;
            unassign(v, c);
        }
        return false;
    }

    const UGraph& g_;
    int n_, k_;
    std::vector<int> colour_;
    std::vector<int> neighbour_colour_count_;
    std::vector<int> saturation_;
    std::uint64_t nodes_ = 0;
};

// Connected components of the complement graph, via bitset frontier scans.
std::vector<std::vector<int>> complement_components(const UGraph& g) {
    const int n = g.order();
    bitset_row unvisited(n);
    for (int v = 0; v < n; ++v) unvisited.set(v);

    std::vector<std::vector<int>> comps;
    for (int s = unvisited.next(0); s != -1; s = unvisited.next(0)) {
        std::vector<int> comp, frontier{s};
        unvisited.reset(s);
        while (!frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            comp.push_back(v);
            // complement neighbours of v: unvisited vertices not adjacent to v
            bitset_row next = unvisited;
            next.subtract(g.neighbours(v));
            next.reset(v);
            for (int u = next.next(0); u != -1; u = next.next(u + 1)) {
                unvisited.reset(u);
                frontier.push_back(u);
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

UGraph induced_subgraph(const UGraph& g, const std::vector<int>& verts) {
    UGraph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) h.insert_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

int greedy_clique_lower_bound(const UGraph& g) {
    const int n = g.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) { ok = false; break; }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

}  // namespace

bool chromatic_at_most(const UGraph& g, int k) {
    if (k >= g.order()) return true;
    return ColouringSearch(g, k).run().has_value();
}

std::optional<std::vector<std::uint8_t>> find_k_colouring(const UGraph& g, int k) {
    const int n = g.order();
    if (k >= n) {
        std::vector<std::uint8_t> out(n);
        for (int v = 0; v < n; ++v) out[v] = static_cast<std::uint8_t>(v);
        return out;
    }
    return ColouringSearch(g, k).run();
}

int chromatic_number(const UGraph& g) {
    int total = 0;
    for (const auto& verts : complement_components(g)) {
        UGraph comp = induced_subgraph(g, verts);
        int lo = std::max(1, greedy_clique_lower_bound(comp));
        int chi = lo;
        while (!chromatic_at_most(comp, chi)) ++chi;
        total += chi;
    }
    return total;
}

std::optional<std::vector<std::uint8_t>> find_k_colouring_decomposed(const UGraph& g, int k) {
    const int n = g.order();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n), 0);
    int offset = 0;
    for (const auto& verts : complement_components(g)) {
        UGraph comp = induced_subgraph(g, verts);
        const int budget = k - offset;
        if (budget <= 0) return std::nullopt;
        int chi = std::max(1, greedy_clique_lower_bound(comp));
        if (chi > budget) return std::nullopt;
        std::optional<std::vector<std::uint8_t>> local;
        for (; chi <= budget; ++chi) {
            local = find_k_colouring(comp, chi);
            if (local) break;
        }
        if (!local) return std::nullopt;
        int used = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            out[static_cast<std::size_t>(verts[i])] =
                static_cast<std::uint8_t>(offset + (*local)[i]);
            used = std::max(used, static_cast<int>((*local)[i]) + 1);
        }
        offset += used;
    }
    return out;
}

}  // namespace satgame
