#include "satgame/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "satgame/errors.hpp"

namespace satgame {

namespace {

// Pack the permuted adjacency matrix row-major into one word (n <= 8).
std::uint64_t encode(const Digraph& g, const std::array<int, 8>& perm, int n) {
    // row r of the encoding is the out-row of the vertex mapped onto r
    std::array<int, 8> inv{};
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    std::uint64_t bits = 0;
    for (int r = 0; r < n; ++r) {
        const int u = inv[r];
        std::uint64_t row = 0;
        for (int c = 0; c < n; ++c)
            if (g.has_arc(u, inv[c])) row |= std::uint64_t{1} << c;
        bits |= row << (8 * r);
    }
    return bits;
}

}  // namespace

CanonicalKey canonical_key(const Digraph& g) {
    const int n = g.order();
    if (n > canonical_max_order)
        throw budget_error("canonical_key: order above exact bound, use raw key");

    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, encode(g, perm, n));
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return {n, best};
}

}  // namespace satgame
