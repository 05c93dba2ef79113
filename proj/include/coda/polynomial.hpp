#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over Q and the rational-function
 *        field Q(c) in one formal parameter.
 */

#include "coda/rational.hpp"

#include <string>
#include <vector>

namespace coda {

// coeffs[i] is the coefficient of c^i; no trailing zeros are stored.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(Rational constant);  // NOLINT: implicit by design
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial variable();  // the parameter c

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    Rational coeff(long i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    // Euclidean division: *this = q * div + r with deg r < deg div.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& div) const;

    Polynomial monic() const;
    Rational evaluate(const Rational& value) const;
    std::string str() const;  // e.g. "c^2 - 2*c + 1"

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Quotient of polynomials in canonical form: denominator monic,
// gcd(num, den) = 1, and zero is 0/1.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    RationalFunction(Rational constant)  // NOLINT: implicit by design
        : num_(std::move(constant)), den_(Rational(1)) {}

    static RationalFunction variable();

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    RationalFunction inverse() const;
    // Substitutes the parameter; throws PoleError if the denominator vanishes.
    Rational evaluate(const Rational& value) const;
    std::string str() const;

  private:
    void normalize();
    Polynomial num_, den_;
};

}  // namespace coda
