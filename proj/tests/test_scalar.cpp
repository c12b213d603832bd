#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cybe/scalar.hpp"

using namespace cybe;

TEST_CASE("rational arithmetic is exact") {
    Scalar a(1, 3), b(2, 5);
    CHECK(a + b == Scalar(11, 15));
    CHECK(a * b == Scalar(2, 15));
    CHECK(a / b == Scalar(5, 6));
    CHECK((a - a).is_zero());
}

TEST_CASE("square roots adjoin one discriminant") {
    Scalar r5 = Scalar::sqrt_of(Rational(5));
    CHECK(r5.disc() == 5);
    CHECK(r5 * r5 == Scalar(5));
    Scalar x = Scalar(1, 2) + Scalar(3, 2) * r5;
    CHECK(x * x.inverse() == Scalar(1));
    CHECK(x.conjugate() * x == Scalar(Rational(1, 4) - Rational(9, 4) * 5));
}

TEST_CASE("sqrt of squares and square multiples normalizes") {
    CHECK(Scalar::sqrt_of(Rational(16)) == Scalar(4));
    CHECK(Scalar::sqrt_of(Rational(9, 4)) == Scalar(3, 2));
    Scalar tw = Scalar::sqrt_of(Rational(20)); // 2 sqrt(5)
    CHECK(tw.disc() == 5);
    CHECK(tw == Scalar(Rational(0), Rational(2), 5));
}

TEST_CASE("mixing two different discriminants is rejected") {
    Scalar r5 = Scalar::sqrt_of(Rational(5));
    Scalar r2 = Scalar::sqrt_of(Rational(2));
    CHECK_THROWS_AS(r5 + r2, TowerError);
    CHECK_THROWS_AS(r5 * r2, TowerError);
    CHECK_NOTHROW(r5 + Scalar(7)); // rationals promote
}

TEST_CASE("string round trip") {
    for (const char* txt : {"3", "-3", "1/2", "-7/3", "0"}) {
        Scalar s = Scalar::parse(txt);
        CHECK(Scalar::parse(s.str()) == s);
    }
    Scalar x = Scalar(1, 2) - Scalar(2, 3) * Scalar::sqrt_of(Rational(5));
    CHECK(x.str() == "1/2-2/3*sqrt(5)");
    CHECK(Scalar::parse(x.str()) == x);
    Scalar y = Scalar(0) + Scalar(1, 1) * Scalar::sqrt_of(Rational(3));
    CHECK(Scalar::parse(y.str()) == y);
}

TEST_CASE("squarefree split") {
    auto [s, d] = squarefree_split(mpz_class(360)); // 360 = 36 * 10
    CHECK(s == 6);
    CHECK(d == 10);
}
