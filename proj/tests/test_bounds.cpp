#include "doctest.h"
#include "satgame/bounds.hpp"
#include "satgame/scores.hpp"

using namespace satgame;

TEST_CASE("theorem1_value") {
    CHECK(theorem1_value(6, 2) == 0);
    CHECK(theorem1_value(5, 1) == 0);
    CHECK(theorem1_value(6, 3) == 9);
    CHECK(theorem1_value(5, 3) == 6);
    CHECK_FALSE(theorem1_value(20, 4).has_value());
}

TEST_CASE("shortener_bound") {
    CHECK(shortener_bound(8, 4) == Rational(47, 2));
    CHECK(shortener_bound(4, 4) == Rational(5));
    CHECK(shortener_bound(10, 5) == Rational(36));
    CHECK_THROWS_AS(shortener_bound(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(shortener_bound(10, 3), std::invalid_argument);
}

TEST_CASE("prolonger_bound") {
    const LowerBound at18 = prolonger_bound(18, 4);
    CHECK_FALSE(at18.vacuous);
    CHECK(at18.value == Rational(33));

    const LowerBound at21 = prolonger_bound(21, 4);
    CHECK_FALSE(at21.vacuous);
    CHECK(at21.value == Rational(42));

    const LowerBound small = prolonger_bound(10, 4);
    CHECK(small.vacuous);
    CHECK(small.value == Rational(3 + 7 * 2));
}

TEST_CASE("lambda_bounds and the conjectured constant") {
    const auto [lo12, hi12] = lambda_bounds(1, 2);
    CHECK(lo12 == Rational(1, 2));
    CHECK(hi12 == Rational(1));

    const auto [lo41, hi41] = lambda_bounds(4, 1);
    CHECK(lo41 == Rational(0));
    CHECK(hi41 == Rational(1, 3));

    CHECK(conjectured_lambda(1, 1) == Rational(2, 3));
    CHECK(conjectured_lambda(1, 2) == Rational(1, 2));
}

TEST_CASE("orientation_bound") {
    CHECK(orientation_bound(10, 5, Rational(1)).value == Rational(36));
    CHECK(orientation_bound(10, 5, Rational(1, 2)).value == Rational(27));
    CHECK(orientation_bound(10, 5, Rational(0)).vacuous);
}

TEST_CASE("normalised_score") {
    CHECK(normalised_score({1, 1, 1}, 3) == Rational(1, 3));
    CHECK(normalised_score({3, 0, 0}, 3) == Rational(1));
    CHECK(normalised_score({2, 2}, 4) == Rational(1, 2));
    CHECK_THROWS_AS(normalised_score({2, 1}, 4), std::invalid_argument);
}

TEST_CASE("structure_score fixed values") {
    CHECK(structure_score(StructureKind::B, 3) == Rational(1, 3));
    CHECK(structure_score(StructureKind::C, 2) == Rational(1, 3));
    CHECK(structure_score(StructureKind::A, 6) == Rational(55, 169));
    CHECK(structure_score(StructureKind::A, 6) <= Rational(1, 3));
    CHECK_THROWS_AS(structure_score(StructureKind::B, 0), std::invalid_argument);
    CHECK_THROWS_AS(structure_score(StructureKind::C, 1), std::invalid_argument);
}

TEST_CASE("structure scores strictly decrease in lambda") {
    for (long long l = 2; l < 50; ++l) {
        CHECK(structure_score(StructureKind::A, l + 1) < structure_score(StructureKind::A, l));
        CHECK(structure_score(StructureKind::B, l + 1) < structure_score(StructureKind::B, l));
        CHECK(structure_score(StructureKind::C, l + 1) < structure_score(StructureKind::C, l));
    }
}
