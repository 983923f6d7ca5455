#include "satgame/oracle.hpp"

#include <numeric>
#include <stdexcept>

#include "satgame/coloring.hpp"
#include "satgame/errors.hpp"
#include "satgame/hom_search.hpp"
#include "satgame/walk_oracle.hpp"

namespace satgame {

FamilySpec FamilySpec::walk_on_k(int k, ContainmentMode mode) {
    if (k < 1) throw std::invalid_argument("FamilySpec: walk length k must be >= 1");
    return FamilySpec{WalkOnK{k}, mode};
}

FamilySpec FamilySpec::explicit_digraphs(std::vector<Digraph> members, ContainmentMode mode) {
    if (members.empty()) throw std::invalid_argument("FamilySpec: explicit family must be non-empty");
    return FamilySpec{ExplicitDigraphs{std::move(members)}, mode};
}

bool is_family_free(const Digraph& g, const FamilySpec& fam) {
    if (fam.is_walk()) {
        if (fam.mode == ContainmentMode::homomorphism)
            return !walk_hom_exists(fam.walk_k(), g);
        return !subdigraph_exists(directed_path(fam.walk_k()), g);
    }
    for (const Digraph& f : fam.members()) {
        const bool contained = fam.mode == ContainmentMode::homomorphism
                                   ? hom_exists(f, g)
                                   : subdigraph_exists(f, g);
        if (contained) return false;
    }
    return true;
}

VertexClassAssignment vertex_classes(const Digraph& g, int k) {
    WalkCaches caches;
    {
        LongestPathOrder lp = longest_path_order(g);
        if (lp.has_cycle)
            throw std::invalid_argument("vertex_classes: graph has a directed cycle");
        if (lp.vertices > k - 1)
            throw std::invalid_argument("vertex_classes: longest path exceeds k-1 vertices");
        caches = compute_walk_caches(g);
    }
    VertexClassAssignment out;
    out.k_minus_1 = k - 1;
    out.class_of = caches.ending;
    out.sizes.assign(static_cast<std::size_t>(k - 1), 0);
    for (int v = 0; v < g.order(); ++v) ++out.sizes[static_cast<std::size_t>(out.class_of[v] - 1)];
    return out;
}

long long saturated_edge_count(const std::vector<int>& sizes, int n) {
    long long sum = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    if (sum != n)
        throw std::invalid_argument("saturated_edge_count: class sizes must sum to n");
    long long sq = 0;
    for (int s : sizes) sq += static_cast<long long>(s) * s;
    return (static_cast<long long>(n) * n - sq) / 2;
}

bool is_saturated(const Digraph& g, const FamilySpec& fam) {
    if (!is_family_free(g, fam))
        throw std::invalid_argument("is_saturated: graph already contains a forbidden structure");
    if (fam.is_walk() && fam.mode == ContainmentMode::homomorphism)
        return legal_walk_arcs(g, fam.walk_k()).empty();
    for (const Arc& a : missing_arcs(g))
        if (is_family_free(g.with_arc(a), fam)) return false;
    return true;
}

bool is_orientation_free(const UGraph& g, int k) { return chromatic_at_most(g, k); }

bool is_orientation_saturated(const UGraph& g, int k) {
    if (!chromatic_at_most(g, k))
        throw std::invalid_argument("is_orientation_saturated: board is not k-colourable");
    for (const Edge& e : missing_edges(g))
        if (chromatic_at_most(g.with_edge(e), k)) return false;
    return true;
}

bool orientation_free_bruteforce(const UGraph& g, int k) {
    const std::vector<Edge> edges = g.edges();
    if (edges.size() > 24)
        throw budget_error("orientation_free_bruteforce: more than 24 edges");
    const Digraph pattern = directed_path(k + 1);
    const std::uint64_t total = std::uint64_t{1} << edges.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Digraph oriented(g.order());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if ((mask >> i) & 1)
                oriented.insert_arc(edges[i].u, edges[i].v);
            else
                oriented.insert_arc(edges[i].v, edges[i].u);
        }
        if (!subdigraph_exists(pattern, oriented)) return true;
    }
    return false;
}

}  // namespace satgame
