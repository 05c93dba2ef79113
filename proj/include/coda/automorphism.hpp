#pragma once

/**
 * @file automorphism.hpp
 * @brief Linear and formal coalgebra automorphisms of S(W): the block
 *        matrix action on monomials, the pullback f -> g^{-1} f g on
 *        cochains, and truncated exp(-ad_alpha) conjugation.
 */

#include "coda/cochain.hpp"

#include <map>

namespace coda {

// Restriction to W in the standard basis: w1 -> q w1, w2 -> r w2 + s w3,
// w3 -> t w2 + u w3; invertible iff q(ru - st) != 0.
struct LinearAutomorphism {
    Scalar q, r, s, t, u;

    LinearAutomorphism();  // identity
    LinearAutomorphism(Scalar q_, Scalar r_, Scalar s_, Scalar t_, Scalar u_);

    Scalar delta() const { return delta_; }
    static LinearAutomorphism diagonal(const Scalar& q_, const Scalar& r_,
                                       const Scalar& u_);
    std::string str() const;  // lin(q; r,s,t,u)

  private:
    Scalar delta_;
};

// lambda(w_I) expanded in the monomial basis.
std::map<MultiIndex, Scalar> apply_linear_to_monomial(const LinearAutomorphism& g,
                                                      const Monomial& m);

LinearAutomorphism invert_linear(const LinearAutomorphism& g);
LinearAutomorphism compose(const LinearAutomorphism& a, const LinearAutomorphism& b);

// lambda^*(f) = lambda^{-1} f lambda
Cochain pullback_linear(const LinearAutomorphism& g, const Cochain& f);
Coderivation pullback_linear(const LinearAutomorphism& g, const Coderivation& d);

// sum_i (-ad_alpha)^i(x) / i! truncated at depth; alpha must be even of
// weight >= 2 so the series is weight-filtered.
Coderivation exp_ad(const Cochain& alpha, const Coderivation& x, int depth);

// Applies exp(-ad) factors of the components of a series, ascending in
// weight (the order the paper's descending product acts in).
Coderivation apply_exp_series(const Coderivation& alpha, const Coderivation& x,
                              int depth);

// g = lambda * prod_{k>=2} exp(alpha_k)
struct FormalAutomorphism {
    LinearAutomorphism linear;
    std::map<int, Cochain> generators;  // weight -> even cochain
    int truncation = 12;

    void set_generator(Cochain alpha);
    std::string str() const;
};

Coderivation pullback_formal(const FormalAutomorphism& g, const Coderivation& d,
                             int depth);

}  // namespace coda
