#pragma once

#include <vector>

#include "satgame/bounds.hpp"

namespace satgame {

// Sum of squared class densities (d_i/r)^2 over an r-vertex set. Convex in
// the densities; lower is better for the maximiser.
Rational normalised_score(const std::vector<long long>& class_sizes, long long r);

// Building blocks of the structure strategy: a path on lambda+1 vertices
// extendable at both ends (A), one end (B), or neither (C), plus a bounded
// budget of off-path vertices.
enum class StructureKind { A, B, C };

// Worst-case normalised score of a structure, as an exact rational:
//   s(A_l) = (l + (l+1)^2) / (2l+1)^2      l >= 0
//   s(B_l) = 1/4 + 1/(4l)                  l >= 1
//   s(C_l) = (l + (l-1)^2) / (2l-1)^2      l >= 2
Rational structure_score(StructureKind kind, long long lambda);

}  // namespace satgame
