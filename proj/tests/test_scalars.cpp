#include "doctest.h"

#include "coda/scalar.hpp"

#include <random>

using namespace coda;

namespace {

Scalar c() { return Scalar::parameter(); }

Scalar random_scalar(std::mt19937& rng, bool allow_parameter) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    Scalar s(Rational(num(rng), den(rng)));
    if (allow_parameter && rng() % 2) {
        Scalar lin = c() * Scalar(num(rng)) + Scalar(num(rng));
        s = s + lin;
    }
    return s;
}

}  // namespace

TEST_CASE("rationals canonicalize on construction") {
    CHECK(make_rational(2, 4) == Rational(1, 2));
    CHECK(make_rational(-3, -6) == Rational(1, 2));
    CHECK(make_rational(0, 5) == Rational(0));
    CHECK(denominator(make_rational(3, -9)) == 3);
    CHECK(numerator(make_rational(3, -9)) == -1);
    CHECK_THROWS_AS(make_rational(1, 0), MalformedScalarError);
}

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rational("5/7") == Rational(5, 7));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), MalformedScalarError);
    CHECK_THROWS_AS(parse_rational("x"), MalformedScalarError);
}

TEST_CASE("polynomial quotients reduce to canonical form") {
    // (c^2 - 1)/(c - 1) -> c + 1
    Polynomial num({std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}});
    Polynomial den({std::vector<Rational>{Rational(-1), Rational(1)}});
    RationalFunction f(num, den);
    CHECK(f.den() == Polynomial(Rational(1)));
    CHECK(f.num().coeff(0) == 1);
    CHECK(f.num().coeff(1) == 1);

    // denominator is made monic
    RationalFunction g(Polynomial(Rational(1)),
                       Polynomial(std::vector<Rational>{Rational(2), Rational(2)}));
    CHECK(g.den().leading() == 1);
    CHECK(g.num().coeff(0) == Rational(1, 2));
}

TEST_CASE("scalar arithmetic promotes and demotes across Q and Q(c)") {
    Scalar two_c = c() * Scalar(2);
    CHECK(!two_c.is_rational());
    CHECK(two_c == Scalar(2) * c());
    // (c + 1) - c demotes to the rational 1
    Scalar back = (c() + Scalar(1)) - c();
    CHECK(back.is_rational());
    CHECK(back == Scalar(1));
    CHECK(Scalar(Rational(1, 2)) == Scalar(Rational(2, 4)));
    CHECK(c() != Scalar(1));
}

TEST_CASE("evaluate_parameter substitutes and reports poles") {
    CHECK((c() + Scalar(1)).evaluate_parameter(3) == Rational(4));
    CHECK(Scalar(Rational(5, 7)).evaluate_parameter(2) == Rational(5, 7));
    Scalar pole = Scalar(1) / (c() - Scalar(1));
    CHECK_THROWS_AS(pole.evaluate_parameter(1), PoleError);
    CHECK(pole.evaluate_parameter(3) == Rational(1, 2));
}

TEST_CASE("field axioms hold on random canonical samples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(rng, true);
        Scalar b = random_scalar(rng, true);
        Scalar d = random_scalar(rng, true);
        CHECK((a + b) + d == a + (b + d));
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a + (-a) == Scalar(0));
        if (!a.is_zero())
            CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("evaluate_parameter is a ring homomorphism away from poles") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Scalar a = random_scalar(rng, true);
        Scalar b = random_scalar(rng, true);
        Scalar d = random_scalar(rng, true);
        Rational at(3, 2);
        CHECK((a * b + d).evaluate_parameter(at) ==
              a.evaluate_parameter(at) * b.evaluate_parameter(at) + d.evaluate_parameter(at));
    }
}

TEST_CASE("scalar text form round-trips through the polynomial printer") {
    Scalar s = (c() * c() + Scalar(1)) / (c() - Scalar(1));
    CHECK(s.str() == "(c^2 + 1)/(c - 1)");
    CHECK(Scalar(Rational(-3, 4)).str() == "-3/4");
}
