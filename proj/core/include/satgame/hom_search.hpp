#pragma once

#include "satgame/digraph.hpp"

namespace satgame {

// Is there an arc-preserving vertex map f -> g (not necessarily injective)?
// Backtracking over vertex images; directed-path patterns take the walk fast
// path.
bool hom_exists(const Digraph& f, const Digraph& g);

// Is there an injective arc-preserving map f -> g?
bool subdigraph_exists(const Digraph& f, const Digraph& g);

}  // namespace satgame
