#include "doctest.h"

#include "coda/families.hpp"
#include "coda/homology.hpp"

using namespace coda;

TEST_CASE("named families have the published shapes") {
    CHECK(family_phi(3) == phi(1, 0, 2, 1) * Scalar(3) + phi(0, 0, 3, 3));
    CHECK(family_phi_prime(2) == phi(0, 2, 0, 2) + phi(0, 1, 1, 3));
    CHECK(family_alpha(1) == phi(1, 2, 1, 2) + phi(1, 1, 2, 3));
    CHECK(family_beta(1) == phi(0, 2, 1, 2) + phi(0, 1, 2, 3));
    CHECK(family_zeta(3, 1) == phi(1, 1, 1, 1) * Scalar(2) + phi(0, 1, 2, 3));
    CHECK(family_eta(4, 1, 2) ==
          phi(1, 1, 2, 1) * Scalar(Rational(1, 2)) +
              phi(0, 1, 3, 3) * Scalar(Rational(1, 2)));
}

TEST_CASE("phi_n and phi'_n are cocycles for d_*") {
    Coderivation d = d_star(10);
    for (int n = 1; n <= 6; ++n) {
        CHECK(is_cocycle(d, family_phi(n)).value);
        CHECK(is_cocycle(d, family_phi_prime(n)).value);
    }
}

TEST_CASE("theta ladders develop the printed coefficients") {
    // theta_{p,v} = phi[0,p,v+1;3] - k phi[1,p,v;1]
    //   + sum_i (-1)^i (b/a)^i (m-k) phi[1,p,v+i(m-k);1]
    int p = 1, v = 0, k = 2, m = 5;
    Scalar a(1), b(2);
    Coderivation theta = family_theta(p, v, k, m, a, b, 12);
    CHECK(theta.component(2)->coefficient(BasisCochain(MultiIndex(1, 1, 0), 1)) ==
          Scalar(-2));
    CHECK(theta.component(2)->coefficient(BasisCochain(MultiIndex(0, 1, 1), 3)) ==
          Scalar(1));
    // i = 1 rung: phi[1,1,3;1] with coefficient -(b/a)(m-k) = -6
    CHECK(theta.component(5)->coefficient(BasisCochain(MultiIndex(1, 1, 3), 1)) ==
          Scalar(-6));
    // i = 2 rung: +(b/a)^2 (m-k) = 12
    CHECK(theta.component(8)->coefficient(BasisCochain(MultiIndex(1, 1, 6), 1)) ==
          Scalar(12));
}

TEST_CASE("every catalog entry passes the codifferential check") {
    for (const auto& entry : catalog(10)) {
        CAPTURE(entry.id);
        CHECK(is_codifferential(entry.codifferential).value);
    }
}

TEST_CASE("catalog spec instances") {
    auto entries = catalog(8);
    auto find = [&](const std::string& id) -> const CatalogEntry& {
        for (const auto& e : entries)
            if (e.id == id)
                return e;
        throw std::logic_error("missing catalog id " + id);
    };
    CHECK(find("d_sharp").codifferential == d_sharp(8));
    CHECK(find("d_star").codifferential ==
          make_coderivation({phi(1, 1, 0, 3)}, 8));
    Coderivation dc_third = d_c(Scalar(Rational(1, 3)), 8);
    CHECK(dc_third.component(2)->coefficient(
              BasisCochain(MultiIndex(1, 0, 1), 3)) == Scalar(Rational(1, 3)));
    CHECK(!find("d_kl").constraint.empty());
    CHECK(!find("d_kl.special").constraint.empty());
}

TEST_CASE("parameterized families at sampled parameters stay codifferentials") {
    for (const Scalar& cval :
         {Scalar(Rational(1, 3)), Scalar(0), Scalar(Rational(-1, 3)), Scalar(-1)}) {
        CHECK(is_codifferential(d_c(cval, 10)).value);
    }
    CHECK(is_codifferential(d_0a(2, Scalar(5), 12)).value);
    CHECK(is_codifferential(d_ca(1, 4, 1, Scalar(2), 12)).value);
    CHECK(is_codifferential(d_ea(2, Scalar(3), 12)).value);
    CHECK(is_codifferential(d_kl(4, 2, Scalar(1), Scalar(1), 12)).value);
    CHECK(is_codifferential(d_klm_22(5, 2, 8, Scalar(1), Scalar(2), 14)).value);
    CHECK(is_codifferential(d_klm_32(2, 5, 9, Scalar(2), 14)).value);
}
