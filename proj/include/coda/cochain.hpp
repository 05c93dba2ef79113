#pragma once

/**
 * @file cochain.hpp
 * @brief The graded Lie algebra L = Hom(S(W), W): basis cochains phi^I_j,
 *        homogeneous cochains, weight-filtered coderivations, the insertion
 *        product and the bracket [f,g] = f.g - (-1)^{|f||g|} g.f.
 *
 * phi^I_j sends w_J to I! delta^I_J w_j; odd cochains are written psi in
 * text form. A cochain is weight- and parity-homogeneous; mixed sums live
 * in Coderivation, which carries an explicit truncation degree.
 */

#include "coda/multiindex.hpp"
#include "coda/scalar.hpp"

#include <array>
#include <map>
#include <vector>

namespace coda {

struct ParityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BasisCochain {
    MultiIndex index;
    int target = 1;  // j in {1,2,3}

    BasisCochain() = default;
    BasisCochain(MultiIndex I, int j) : index(I), target(j) {
        if (j < 1 || j > 3)
            throw OutOfRangeError("cochain target must be 1, 2 or 3");
        if (I.weight() < 1)
            throw OutOfRangeError("cochain weight must be >= 1");
    }

    int weight() const { return index.weight(); }
    Parity parity() const {
        return index.parity() + (target == 1 ? Parity::odd : Parity::even);
    }
    auto operator<=>(const BasisCochain&) const = default;
    std::string str() const;  // phi[i1,i2,i3;j] or psi[i1,i2,i3;j]
};

class Cochain {
  public:
    Cochain() = default;
    Cochain(int weight, Parity parity) : weight_(weight), parity_(parity) {}

    int weight() const { return weight_; }
    Parity parity() const { return parity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisCochain, Scalar>& terms() const { return terms_; }

    Scalar coefficient(const BasisCochain& b) const;
    void add_term(const BasisCochain& b, const Scalar& coeff);

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator-() const;
    Cochain operator*(const Scalar& s) const;
    bool operator==(const Cochain& o) const;

    // Value on a monomial as coefficients of (w1, w2, w3); total: a weight
    // mismatch evaluates to zero.
    std::array<Scalar, 3> evaluate(const Monomial& m) const;

    std::string str() const;

  private:
    int weight_ = 0;
    Parity parity_ = Parity::even;
    std::map<BasisCochain, Scalar> terms_;
};

inline Cochain operator*(const Scalar& s, const Cochain& f) { return f * s; }

Cochain basis_cochain(const MultiIndex& I, int j);
inline Cochain phi(int a, int b, int c, int j) {
    return basis_cochain(MultiIndex(a, b, c), j);
}

// Canonical ordered basis of L_n (dim 6n+3): monomials in enumeration
// order (even block then odd block), targets 1,2,3 within each.
std::vector<BasisCochain> basis_cochains(int n);
std::vector<BasisCochain> basis_cochains(int n, Parity p);

// Insertion f(g(.)...): bilinear, weight m+n-1, parity |f|+|g|.
Cochain insertion(const Cochain& f, const Cochain& g);

// [f,g] = f.g - (-1)^{|f||g|} g.f
Cochain bracket(const Cochain& f, const Cochain& g);

struct Certified {
    bool value = false;
    int depth = 0;
};

// A weight-filtered sum d = sum_n d_n, truncated above N_max.
class Coderivation {
  public:
    explicit Coderivation(int truncation = 12) : truncation_(truncation) {}

    int truncation() const { return truncation_; }
    bool is_zero() const { return components_.empty(); }
    const std::map<int, Cochain>& components() const { return components_; }
    const Cochain* component(int n) const;
    Cochain component_or_zero(int n, Parity p) const;

    // Least weight with a nonzero component; 0 when empty.
    int order() const;
    Parity parity() const;
    void set_component(Cochain f);
    void add(const Cochain& f);

    Coderivation operator+(const Coderivation& o) const;
    Coderivation operator-(const Coderivation& o) const;
    Coderivation operator*(const Scalar& s) const;
    bool operator==(const Coderivation& o) const;

    std::string str() const;

  private:
    int truncation_;
    std::map<int, Cochain> components_;
};

Coderivation make_coderivation(std::vector<Cochain> parts, int truncation = 12);

// [f, d] truncated: components of weight <= depth.
Coderivation bracket(const Cochain& f, const Coderivation& d, int depth);
Coderivation bracket(const Coderivation& a, const Coderivation& b, int depth);

// True iff all components of [d,d] vanish up to the truncation degree;
// mixed parity input is a parity error.
Certified is_codifferential(const Coderivation& d);

}  // namespace coda
