#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satgame/ugraph.hpp"

namespace satgame {

// Exact k-colourability by backtracking; branch order is saturation degree,
// ties broken by lowest index.
bool chromatic_at_most(const UGraph& g, int k);

// Exact colouring witness, or nullopt if chi(g) > k.
std::optional<std::vector<std::uint8_t>> find_k_colouring(const UGraph& g, int k);

// Exact chromatic number via join decomposition: colour classes cannot span
// connected components of the complement, so chi adds up across them.
int chromatic_number(const UGraph& g);

// Exact witness search routed through the join decomposition; much faster
// than the flat search on near-saturated boards, identical answers.
std::optional<std::vector<std::uint8_t>> find_k_colouring_decomposed(const UGraph& g, int k);

}  // namespace satgame
