#include "doctest.h"

#include "coda/expr.hpp"
#include "coda/families.hpp"
#include "coda/replicate.hpp"

using namespace coda;

TEST_CASE("spec parse examples") {
    Coderivation dc = parse_coderivation("psi[1,1,0;2] + c*psi[1,0,1;3]");
    CHECK(dc == d_c(Scalar::parameter(), 12));

    Cochain p2 = parse_cochain("phi[0,2,0;2] + phi[0,1,1;3]");
    CHECK(p2 == family_phi_prime(2));

    CHECK_THROWS_AS(parse_cochain("psi[0,0,0;1]"), SyntaxError);
    CHECK_THROWS_AS(parse_cochain("phi[1,1,0;2]"), SyntaxError);  // wrong parity
    CHECK_THROWS_AS(parse_cochain("psi[1,1,0;2] + oops"), SyntaxError);
    CHECK_THROWS_AS(parse_cochain("psi[1,1,0;2] psi[1,0,1;3]"), SyntaxError);
}

TEST_CASE("scalar coefficients parse with precedence and parens") {
    Cochain f = parse_cochain("(1/2)*psi[0,2,0;1] - 3*psi[0,1,1;1]");
    CHECK(f == phi(0, 2, 0, 1) * Scalar(Rational(1, 2)) +
                   phi(0, 1, 1, 1) * Scalar(-3));
    Cochain g = parse_cochain("((c^2 + 1)/(c - 1))*psi[1,0,1;3]");
    Scalar cc = Scalar::parameter();
    CHECK(g == phi(1, 0, 1, 3) * ((cc * cc + Scalar(1)) / (cc - Scalar(1))));
    CHECK(parse_scalar("2^3/4") == Scalar(2));
    CHECK(parse_scalar("-c*-c") == Scalar::parameter() * Scalar::parameter());
}

TEST_CASE("round trips on the catalog and named families") {
    for (const auto& entry : catalog(10)) {
        CAPTURE(entry.id);
        std::string text = render(entry.codifferential);
        Coderivation back = parse_coderivation(text, 10);
        CHECK(back == entry.codifferential);
    }
    for (int n = 1; n <= 5; ++n) {
        for (const Cochain& f :
             {family_phi(n), family_phi_prime(n), family_alpha(n), family_beta(n)}) {
            CHECK(parse_cochain(render(f)) == f);
        }
    }
    Cochain tricky = phi(1, 0, 3, 2) * (Scalar::parameter() * Scalar(Rational(-2, 7)) +
                                        Scalar(Rational(1, 3)));
    CHECK(parse_cochain(render(tricky)) == tricky);
}

TEST_CASE("automorphism literals parse and render") {
    FormalAutomorphism g = parse_automorphism("lin(1; 2,0,0,1/2)");
    CHECK(g.linear.q == Scalar(1));
    CHECK(g.linear.r == Scalar(2));
    CHECK(g.linear.u == Scalar(Rational(1, 2)));
    CHECK(g.generators.empty());

    FormalAutomorphism h =
        parse_automorphism("lin(1; 1,0,0,1)*exp(phi[0,2,0;2])*exp(2*phi[0,0,3;3])");
    CHECK(h.generators.size() == 2);
    CHECK(h.generators.at(2) == phi(0, 2, 0, 2));
    CHECK(h.generators.at(3) == phi(0, 0, 3, 3) * Scalar(2));
    FormalAutomorphism back = parse_automorphism(render(h));
    CHECK(back.generators == h.generators);

    CHECK_THROWS_AS(parse_automorphism("lin(0; 1,0,0,1)"), SyntaxError);
    CHECK_THROWS_AS(parse_automorphism("lin(1; 1,0,0,1)*exp(psi[0,1,0;1])"),
                    ParityError);
}

TEST_CASE("json serialization carries the report fields") {
    TableReport t = replicate("sec6.stab");
    std::string j = to_json(t);
    CHECK(j.find("\"table_id\"") != std::string::npos);
    CHECK(j.find("\"citation\"") != std::string::npos);
    CHECK(j.find("precisely") == std::string::npos);  // wrong table
}
