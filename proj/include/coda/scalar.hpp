#pragma once

/**
 * @file scalar.hpp
 * @brief The coefficient field: a tagged union of Q and Q(c).
 *
 * Arithmetic promotes rationals into Q(c) when the two kinds meet, and
 * results that turn out constant demote back to Q, so every value has a
 * unique canonical form and equality is plain comparison.
 */

#include "coda/polynomial.hpp"

#include <string>
#include <variant>

namespace coda {

class Scalar {
  public:
    Scalar() : v_(Rational(0)) {}
    Scalar(int n) : v_(Rational(n)) {}  // NOLINT: implicit by design
    Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT
    Scalar(const RationalFunction& f) { assign(f); }  // NOLINT

    static Scalar parameter() { return Scalar(RationalFunction::variable()); }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_zero() const;
    const Rational& rational() const { return std::get<Rational>(v_); }
    RationalFunction as_function() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    // Substitutes the formal parameter; identity on plain rationals.
    Rational evaluate_parameter(const Rational& value) const;
    std::string str() const;

  private:
    void assign(const RationalFunction& f);
    std::variant<Rational, RationalFunction> v_;
};

inline Scalar operator*(int n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace coda
