#pragma once

#include <cstdint>
#include <functional>

#include "satgame/digraph.hpp"

namespace satgame {

// Orders above this use raw adjacency bits as solver keys (no isomorph
// merging); the exact minimum-encoding search is n! and stops paying here.
inline constexpr int canonical_max_order = 8;

/**
 * Identifies a digraph up to vertex relabelling. For n <= canonical_max_order
 * the packed bits are the lexicographic minimum of the adjacency encoding
 * over all n! permutations, so keys are collision-free: equal iff isomorphic
 * (on equal order).
 */
struct CanonicalKey {
    int n = 0;
    std::uint64_t bits = 0;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

// Throws budget_error above canonical_max_order; callers fall back to the
// raw encoding.
CanonicalKey canonical_key(const Digraph& g);

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const {
        return std::hash<std::uint64_t>{}(k.bits * 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(k.n));
    }
};

}  // namespace satgame
