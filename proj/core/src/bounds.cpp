#include "satgame/bounds.hpp"

#include <stdexcept>

namespace satgame {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

std::optional<long long> theorem1_value(long long n, long long k) {
    require(n >= 1 && k >= 1, "theorem1_value: n, k must be >= 1");
    if (k <= 2) return 0;
    if (k == 3) return n * n / 4;
    return std::nullopt;
}

Rational shortener_bound(long long n, long long k) {
    require(n >= k && k >= 4, "shortener_bound: requires n >= k >= 4");
    const long long m = n - k + 4;
    const long long lo = m / 3;            // floor, m >= 4 > 0
    const long long hi = (m + 2) / 3;      // ceil
    return Rational(n * n - k + 4 - 2 * lo * lo - hi * hi, 2);
}

LowerBound prolonger_bound(long long n, long long k) {
    require(n >= k && k >= 4, "prolonger_bound: requires n >= k >= 4");
    const Rational base = Rational((k - 1) * (k - 2), 2) + Rational((n - k + 1) * (k - 2));
    const long long q = n - k - 14;
    if (q < 0) return {base, true};
    return {base + Rational(q * q, 2) * Rational(2, 3), false};
}

std::pair<Rational, Rational> lambda_bounds(long long a, long long b) {
    require(a >= 1 && b >= 1, "lambda_bounds: bias parts must be >= 1");
    const long long fb = b / (2 * a);
    const long long fa = a / (2 * b);
    return {Rational(fb, 1 + fb), Rational(1, 1 + fa)};
}

Rational conjectured_lambda(long long a, long long b) {
    require(a >= 1 && b >= 1, "conjectured_lambda: bias parts must be >= 1");
    return Rational(2 * a, b + 2 * a);
}

OrientationBound orientation_bound(long long n, long long k, const Rational& lambda) {
    require(k >= 1 && lambda >= Rational(0), "orientation_bound: requires k >= 1, lambda >= 0");
    const Rational pairs(n * (n - 1), 2);
    if (lambda.numerator() == 0) return {Rational(0), true};
    return {pairs * (Rational(1) - Rational(1) / (lambda * Rational(k))), false};
}

}  // namespace satgame
