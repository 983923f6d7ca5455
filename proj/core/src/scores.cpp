#include "satgame/scores.hpp"

#include <numeric>
#include <stdexcept>

namespace satgame {

Rational normalised_score(const std::vector<long long>& class_sizes, long long r) {
    if (r <= 0) throw std::invalid_argument("normalised_score: r must be positive");
    const long long sum = std::accumulate(class_sizes.begin(), class_sizes.end(), 0LL);
    if (sum != r)
        throw std::invalid_argument("normalised_score: class sizes must sum to r");
    Rational s(0);
    for (long long d : class_sizes) s += Rational(d, r) * Rational(d, r);
    return s;
}

Rational structure_score(StructureKind kind, long long lambda) {
    switch (kind) {
        case StructureKind::A:
            if (lambda < 0) throw std::invalid_argument("structure_score: A requires lambda >= 0");
            return Rational(lambda + (lambda + 1) * (lambda + 1),
                            (2 * lambda + 1) * (2 * lambda + 1));
        case StructureKind::B:
            if (lambda < 1) throw std::invalid_argument("structure_score: B requires lambda >= 1");
            return Rational(1, 4) + Rational(1, 4 * lambda);
        case StructureKind::C:
            if (lambda < 2) throw std::invalid_argument("structure_score: C requires lambda >= 2");
            return Rational(lambda + (lambda - 1) * (lambda - 1),
                            (2 * lambda - 1) * (2 * lambda - 1));
    }
    throw std::invalid_argument("structure_score: unknown kind");
}

}  // namespace satgame
