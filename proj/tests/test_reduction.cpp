#include "doctest.h"

#include "coda/families.hpp"
#include "coda/reduction.hpp"

using namespace coda;

namespace {

Scalar prodform(int m, int k) {
    Rational num((m - 1) % 2 == 0 ? 1 : -1);
    for (int i = 1; i <= m; ++i)
        num *= Rational(2 * i + 1);
    Rational den(1);
    for (int i = 0; i < m; ++i)
        den *= Rational(k + 1);
    den *= Rational(factorial(m));
    return Scalar(num / den);
}

}  // namespace

TEST_CASE("family parser recognizes d* tails") {
    DStarFamily fam = parse_dstar_family(d_kl(2, 5, Scalar(3), Scalar(7), 12));
    REQUIRE(fam.family2.size() == 1);
    REQUIRE(fam.family3.size() == 1);
    CHECK(fam.family2[0] == std::make_pair(2, Scalar(3)));
    CHECK(fam.family3[0] == std::make_pair(5, Scalar(7)));
    CHECK_THROWS_AS(parse_dstar_family(d22(10)), ParameterError);
}

TEST_CASE("the reduction bookkeeping identity holds") {
    // input = residue + [corrections, d] through the depth
    int depth = 12;
    Coderivation d = d_kl(2, 5, Scalar(1), Scalar(1), depth);
    Coderivation input = bracket(family_phi_prime(3), d, depth);
    ReducedSeries red = reduce_to_normal_series(d, input, depth);
    Coderivation recon = red.residue + bracket(red.corrections, d, depth);
    CHECK(recon == input);
    // only middle-zero terms remain
    for (const auto& [w, comp] : red.residue.components())
        for (const auto& [b, c] : comp.terms())
            CHECK(b.index.i2 == 0);
}

TEST_CASE("prodform values come out of the oracle") {
    for (auto [k, m] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 1}}) {
        int depth = m * (k + 1) + 4;
        Coderivation d = dstar_k(k, depth);
        Coderivation input = bracket(family_phi_prime(2 * m), d, depth);
        ReducedSeries red = reduce_to_normal_series(d, input, depth);
        CHECK(normal_coefficient(red, m * (k + 1), 3) == prodform(m, k));
        CHECK(red.residue.order() == m * (k + 1) + 1);
    }
}

TEST_CASE("case 2 hand-checked instances") {
    // (k,l) = (4,2): reduced D(phi'_2) has psi[1,0,4;3]-coefficient 1/7
    // after converting the second-kind residue through D(phi_n)
    int depth = 12;
    Coderivation d = d_kl(4, 2, Scalar(1), Scalar(1), depth);
    Coderivation input = bracket(family_phi_prime(2), d, depth);
    ReducedSeries to3 = reduce_to_normal_series(d, input, depth);
    CHECK(normal_coefficient(to3, 4, 3) == Scalar(Rational(1, 7)));
    // without conversions the same slot reads 5/7 and a second-kind term
    // survives at psi[1,0,6;2]
    ReducedSeries none = reduce_to_normal_series(d, input, depth, Conversion::none);
    CHECK(normal_coefficient(none, 4, 3) == Scalar(Rational(5, 7)));
    CHECK(normal_coefficient(none, 6, 2) == Scalar(2));
    // n = 3: -1/3 with conversions
    Coderivation input3 = bracket(family_phi_prime(3), d, depth);
    ReducedSeries red3 = reduce_to_normal_series(d, input3, depth);
    CHECK(normal_coefficient(red3, 6, 3) == Scalar(Rational(-1, 3)));
}

TEST_CASE("case 1 odd instance matches the hand computation") {
    // (k,l) = (2,5), n = 3: coefficient 19/72 at psi[1,0,8;3]
    int depth = 14;
    Coderivation d = d_kl(2, 5, Scalar(1), Scalar(1), depth);
    Coderivation input = bracket(family_phi_prime(3), d, depth);
    ReducedSeries red = reduce_to_normal_series(d, input, depth);
    CHECK(normal_coefficient(red, 8, 3) == Scalar(Rational(19, 72)));
}

TEST_CASE("to_second conversion eliminates third-kind residues") {
    int depth = 14;
    Coderivation d = d_kl(5, 2, Scalar(1), Scalar(1), depth);
    Coderivation input = bracket(family_phi_prime(2), d, depth);
    ReducedSeries red = reduce_to_normal_series(d, input, depth,
                                                Conversion::to_second);
    for (const auto& [w, comp] : red.residue.components())
        for (const auto& [b, c] : comp.terms()) {
            CHECK(b.index.i2 == 0);
            CHECK(b.target == 2);
        }
    Coderivation recon = red.residue + bracket(red.corrections, d, depth);
    CHECK(recon == input);
}

TEST_CASE("single basis terms reduce to the paper's endpoints") {
    // psi[1,2m,v;2] for b = 0 lands on psi[1,0,v+m(k+1);2]
    int k = 2, depth = 12;
    Coderivation d = dstar_k(k, depth);
    Coderivation input(depth);
    input.add(phi(1, 2, 1, 2));
    ReducedSeries red = reduce_to_normal_series(d, input, depth, Conversion::none);
    CHECK(red.residue.components().size() == 1);
    CHECK(!normal_coefficient(red, 1 + (k + 1), 2).is_zero());
}
