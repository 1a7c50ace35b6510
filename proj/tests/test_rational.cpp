#include <doctest.h>

#include <stdexcept>

#include "fup/rational.hpp"

using fup::Rational;

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b) == Rational(1, 2));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 18));
    CHECK((a / b) == Rational(2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
}

TEST_CASE("rational comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 7) == Rational(1));
    CHECK(Rational(2, 4) <= Rational(1, 2));
}

TEST_CASE("rational edge cases") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 3) / Rational(0), std::invalid_argument);
    // (2^62)/1 * 4 overflows the reduced result
    Rational big(std::int64_t(1) << 62);
    CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
    // but cancellation keeps intermediate products legal
    CHECK((big * Rational(1, 1 << 20)) == Rational(std::int64_t(1) << 42));
}

TEST_CASE("pow_int matches repeated multiplication") {
    CHECK(Rational::pow_int(3, 4) == Rational(81));
    CHECK(Rational::pow_int(5, 0) == Rational(1));
    CHECK(Rational(1, 1) / Rational::pow_int(3, 3) == Rational(1, 27));
}

TEST_CASE("to_double is the quotient") {
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(Rational(-7, 2).to_double() == -3.5);
}
