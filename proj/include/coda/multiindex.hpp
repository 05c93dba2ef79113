#pragma once

/**
 * @file multiindex.hpp
 * @brief The fixed 2|1-dimensional space W = <w1 odd; w2, w3 even>, its
 *        symmetric-coalgebra monomial basis and unshuffle combinatorics.
 *
 * A monomial w_I = w1^i1 w2^i2 w3^i3 is indexed by (i1,i2,i3) with
 * i1 in {0,1} since the odd generator squares to zero. With a single odd
 * generator, pulled to the front in generator order, every unshuffle sign
 * is +1; the SplitTerm keeps a sign field so that the convention is
 * explicit at the call sites.
 */

#include "coda/rational.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coda {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return Parity((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

struct OutOfRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MultiIndex {
    int i1 = 0, i2 = 0, i3 = 0;

    MultiIndex() = default;
    MultiIndex(int a, int b, int c) : i1(a), i2(b), i3(c) {
        if (a < 0 || a > 1 || b < 0 || c < 0)
            throw OutOfRangeError("bad multi-index (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
    }

    int weight() const { return i1 + i2 + i3; }
    Parity parity() const { return i1 ? Parity::odd : Parity::even; }

    auto operator<=>(const MultiIndex&) const = default;

    // Componentwise sum; empty when the odd generator would square.
    std::optional<MultiIndex> plus_generator(int j) const {
        if (j == 1)
            return i1 ? std::nullopt : std::optional<MultiIndex>(MultiIndex(1, i2, i3));
        if (j == 2)
            return MultiIndex(i1, i2 + 1, i3);
        return MultiIndex(i1, i2, i3 + 1);
    }

    std::string str() const;
};

using Monomial = MultiIndex;

// I! = i1! i2! i3!
inline Int multiindex_factorial(const MultiIndex& I) {
    return factorial(I.i1) * factorial(I.i2) * factorial(I.i3);
}

struct MonomialBasis {
    std::vector<MultiIndex> even;  // (0,p,n-p), p = 0..n
    std::vector<MultiIndex> odd;   // (1,q,n-q-1), q = 0..n-1
};

// Basis of S^n(W), sizes (n+1 | n); n = 0 is out of range.
MonomialBasis enumerate_monomials(int n);

// All weight-n monomials in canonical order (even block then odd block).
std::vector<MultiIndex> all_monomials(int n);

struct SplitTerm {
    MultiIndex inner, outer;
    Int multiplicity;  // number of unshuffles, prod_t binom(J_t, K_t)
    int sign = 1;      // always +1 under the pinned ordering
};

// All ways to split w_J into an inner block of weight n and its remainder.
std::vector<SplitTerm> split_monomial(const MultiIndex& J, int n);

}  // namespace coda
