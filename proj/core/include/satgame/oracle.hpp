#pragma once

#include <vector>

#include "satgame/digraph.hpp"
#include "satgame/family.hpp"
#include "satgame/ugraph.hpp"

namespace satgame {

/**
 * The class decomposition of a walk-saturated digraph: class_of[v] is the
 * number of vertices on the longest directed path ending at v, so every arc
 * goes from a lower class to a higher one.
 */
struct VertexClassAssignment {
    int k_minus_1 = 0;                 // number of classes
    std::vector<int> class_of;         // per vertex, in [1, k-1]
    std::vector<int> sizes;            // sizes[i] = |class i+1|
};

bool is_family_free(const Digraph& g, const FamilySpec& fam);

// Requires g acyclic with longest path at most k-1 vertices.
VertexClassAssignment vertex_classes(const Digraph& g, int k);

// Edge count of a class-saturated digraph: (n^2 - sum sizes_i^2) / 2.
long long saturated_edge_count(const std::vector<int>& sizes, int n);

// No missing arc can be added keeping family-freeness. Precondition: g is
// family-free.
bool is_saturated(const Digraph& g, const FamilySpec& fam);

// Orientation-game analogues on undirected boards: legality is k-colourability.
bool is_orientation_free(const UGraph& g, int k);
bool is_orientation_saturated(const UGraph& g, int k);

// Literal enumeration over all 2^e orientations, each checked for a directed
// path on k+1 distinct vertices. Test oracle only; edge count capped at 24.
bool orientation_free_bruteforce(const UGraph& g, int k);

}  // namespace satgame
