#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic: arbitrary-precision integers and
 *        canonical-form rationals, plus small combinatorial helpers.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace coda {

using Int = boost::multiprecision::cpp_int;

// Always canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

struct MalformedScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw MalformedScalarError("rational with zero denominator");
    if (den < 0)
        return Rational(Int(-num), Int(-den));
    return Rational(num, den);
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

// Parses "p", "-p" or "p/q"; rejects malformed text and zero denominators.
Rational parse_rational(const std::string& text);

}  // namespace coda
