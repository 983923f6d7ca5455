#include "satgame/hom_search.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "satgame/walk_oracle.hpp"

namespace satgame {

namespace {

bool is_directed_path(const Digraph& f) {
    if (f.order() == 0) return false;
    if (f.arc_count() != f.order() - 1) return false;
    LongestPathOrder lp = longest_path_order(f);
    return !lp.has_cycle && lp.vertices == f.order();
}

// Backtracking over images of f's vertices in index order. `injective`
// switches between homomorphism and subdigraph search.
bool extend(const Digraph& f, const Digraph& g, std::vector<int>& img, int next,
            std::uint64_t used, bool injective) {
    if (next == f.order()) return true;
    for (int cand = 0; cand < g.order(); ++cand) {
        if (injective && ((used >> cand) & 1)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev) {
            if (f.has_arc(prev, next) && !g.has_arc(img[prev], cand)) ok = false;
            if (f.has_arc(next, prev) && !g.has_arc(cand, img[prev])) ok = false;
        }
        if (f.has_arc(next, next)) ok = false;  // self-loops never embed
        if (!ok) continue;
        img[next] = cand;
        if (extend(f, g, img, next + 1, used | (std::uint64_t{1} << cand), injective))
            return true;
    }
    return false;
}

}  // namespace

bool hom_exists(const Digraph& f, const Digraph& g) {
    if (f.order() == 0) return true;
    if (g.order() == 0) return false;
    if (is_directed_path(f)) return walk_hom_exists(f.order(), g);
    std::vector<int> img(f.order(), -1);
    return extend(f, g, img, 0, 0, /*injective=*/false);
}

bool subdigraph_exists(const Digraph& f, const Digraph& g) {
    if (f.order() > g.order()) return false;
    if (f.order() == 0) return true;
    std::vector<int> img(f.order(), -1);
    return extend(f, g, img, 0, 0, /*injective=*/true);
}

}  // namespace satgame
