#pragma once

#include <optional>
#include <utility>

#include <boost/rational.hpp>

namespace satgame {

using Rational = boost::rational<long long>;

// Exact directed-game score where a closed form exists: 0 for k <= 2,
// floor(n^2/4) for k = 3. For k >= 4 only asymptotics are known, signalled
// by nullopt.
std::optional<long long> theorem1_value(long long n, long long k);

// Upper bound enforced by the path-building minimiser strategy, k >= 4:
// (n^2 - k + 4 - 2*floor((n-k+4)/3)^2 - ceil((n-k+4)/3)^2) / 2.
Rational shortener_bound(long long n, long long k);

struct LowerBound {
    Rational value;
    // The quadratic term's base n-k-14 went negative; the term is suppressed
    // and the bound carries no content beyond the first two terms.
    bool vacuous = false;
};

// Lower bound from the structure-building maximiser strategy, k >= 4:
// C(k-1,2) + (n-k+1)(k-2) + (1/2)(n-k-14)^2 * (2/3).
LowerBound prolonger_bound(long long n, long long k);

// Bias constants for the orientation game:
// lambda_minus = floor(b/2a) / (1 + floor(b/2a)),
// lambda_plus  = 1 / (1 + floor(a/2b)).
std::pair<Rational, Rational> lambda_bounds(long long a, long long b);

// Conjectured sharp constant 2a / (b + 2a).
Rational conjectured_lambda(long long a, long long b);

struct OrientationBound {
    Rational value;
    bool vacuous = false;  // lambda = 0
};

// C(n,2) * (1 - 1/(lambda*k)).
OrientationBound orientation_bound(long long n, long long k, const Rational& lambda);

}  // namespace satgame
