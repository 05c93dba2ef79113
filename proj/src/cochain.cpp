#include "coda/cochain.hpp"

#include <sstream>

namespace coda {

std::string BasisCochain::str() const {
    std::ostringstream os;
    os << (parity() == Parity::odd ? "psi" : "phi");
    os << "[" << index.i1 << "," << index.i2 << "," << index.i3 << ";" << target << "]";
    return os.str();
}

Scalar Cochain::coefficient(const BasisCochain& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Cochain::add_term(const BasisCochain& b, const Scalar& coeff) {
    if (coeff.is_zero())
        return;
    if (terms_.empty() && weight_ == 0) {
        weight_ = b.weight();
        parity_ = b.parity();
    }
    if (b.weight() != weight_)
        throw OutOfRangeError("mixed weights in homogeneous cochain");
    if (b.parity() != parity_)
        throw ParityError("mixed parities in homogeneous cochain");
    auto [it, inserted] = terms_.emplace(b, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (is_zero())
        return o;
    Cochain r = *this;
    for (const auto& [b, c] : o.terms_)
        r.add_term(b, c);
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
    return *this + (-o);
}

Cochain Cochain::operator-() const {
    Cochain r = *this;
    for (auto& [b, c] : r.terms_)
        c = -c;
    return r;
}

Cochain Cochain::operator*(const Scalar& s) const {
    if (s.is_zero())
        return Cochain(weight_, parity_);
    Cochain r = *this;
    for (auto& [b, c] : r.terms_)
        c *= s;
    return r;
}

bool Cochain::operator==(const Cochain& o) const {
    if (is_zero() || o.is_zero())
        return is_zero() && o.is_zero();
    return terms_ == o.terms_;
}

std::array<Scalar, 3> Cochain::evaluate(const Monomial& m) const {
    std::array<Scalar, 3> out{Scalar(0), Scalar(0), Scalar(0)};
    if (m.weight() != weight_)
        return out;
    Scalar norm(Rational(multiindex_factorial(m)));
    for (int j = 1; j <= 3; ++j) {
        auto it = terms_.find(BasisCochain(m, j));
        if (it != terms_.end())
            out[static_cast<size_t>(j - 1)] = it->second * norm;
    }
    return out;
}

std::string Cochain::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        Scalar coeff = c;
        bool negative = coeff.is_rational() && coeff.rational() < 0;
        if (first) {
            if (negative) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (negative ? " - " : " + ");
            if (negative)
                coeff = -coeff;
        }
        first = false;
        if (!(coeff == Scalar(1))) {
            std::string cs = coeff.str();
            bool atomic = coeff.is_rational() && coeff.rational() >= 0 &&
                          denominator(coeff.rational()) == 1;
            os << (atomic ? cs : "(" + cs + ")") << "*";
        }
        os << b.str();
    }
    return os.str();
}

Cochain basis_cochain(const MultiIndex& I, int j) {
    Cochain f;
    f.add_term(BasisCochain(I, j), Scalar(1));
    return f;
}

std::vector<BasisCochain> basis_cochains(int n) {
    std::vector<BasisCochain> out;
    out.reserve(static_cast<size_t>(6 * n + 3));
    for (const auto& I : all_monomials(n))
        for (int j = 1; j <= 3; ++j)
            out.emplace_back(I, j);
    return out;
}

std::vector<BasisCochain> basis_cochains(int n, Parity p) {
    std::vector<BasisCochain> out;
    for (const auto& b : basis_cochains(n))
        if (b.parity() == p)
            out.push_back(b);
    return out;
}

Cochain insertion(const Cochain& f, const Cochain& g) {
    int m = f.weight(), n = g.weight();
    Cochain result(m + n - 1, f.parity() + g.parity());
    if (f.is_zero() || g.is_zero())
        return result;
    for (const auto& J : all_monomials(m + n - 1)) {
        std::array<Scalar, 3> val{Scalar(0), Scalar(0), Scalar(0)};
        for (const auto& split : split_monomial(J, n)) {
            std::array<Scalar, 3> gval = g.evaluate(split.inner);
            Scalar mult(Rational(split.multiplicity * split.sign));
            for (int j = 1; j <= 3; ++j) {
                const Scalar& gj = gval[static_cast<size_t>(j - 1)];
                if (gj.is_zero())
                    continue;
                auto arg = split.outer.plus_generator(j);
                if (!arg)
                    continue;
                std::array<Scalar, 3> fval = f.evaluate(*arg);
                for (size_t t = 0; t < 3; ++t)
                    if (!fval[t].is_zero())
                        val[t] += mult * gj * fval[t];
            }
        }
        Scalar norm(Rational(multiindex_factorial(J)));
        for (size_t t = 0; t < 3; ++t)
            if (!val[t].is_zero())
                result.add_term(BasisCochain(J, static_cast<int>(t) + 1), val[t] / norm);
    }
    return result;
}

Cochain bracket(const Cochain& f, const Cochain& g) {
    Cochain fg = insertion(f, g);
    Cochain gf = insertion(g, f);
    if (f.parity() == Parity::odd && g.parity() == Parity::odd)
        return fg + gf;
    return fg - gf;
}

const Cochain* Coderivation::component(int n) const {
    auto it = components_.find(n);
    return it == components_.end() ? nullptr : &it->second;
}

Cochain Coderivation::component_or_zero(int n, Parity p) const {
    const Cochain* f = component(n);
    return f ? *f : Cochain(n, p);
}

int Coderivation::order() const {
    return components_.empty() ? 0 : components_.begin()->first;
}

Parity Coderivation::parity() const {
    if (components_.empty())
        return Parity::odd;
    return components_.begin()->second.parity();
}

void Coderivation::set_component(Cochain f) {
    if (f.is_zero()) {
        components_.erase(f.weight());
        return;
    }
    if (f.weight() > truncation_)
        return;
    components_[f.weight()] = std::move(f);
}

void Coderivation::add(const Cochain& f) {
    if (f.is_zero() || f.weight() > truncation_)
        return;
    auto it = components_.find(f.weight());
    if (it == components_.end()) {
        components_.emplace(f.weight(), f);
        return;
    }
    it->second = it->second + f;
    if (it->second.is_zero())
        components_.erase(it);
}

Coderivation Coderivation::operator+(const Coderivation& o) const {
    Coderivation r = *this;
    for (const auto& [n, f] : o.components_)
        r.add(f);
    return r;
}

Coderivation Coderivation::operator-(const Coderivation& o) const {
    return *this + o * Scalar(-1);
}

Coderivation Coderivation::operator*(const Scalar& s) const {
    Coderivation r(truncation_);
    if (s.is_zero())
        return r;
    for (const auto& [n, f] : components_)
        r.set_component(f * s);
    return r;
}

bool Coderivation::operator==(const Coderivation& o) const {
    return components_ == o.components_;
}

std::string Coderivation::str() const {
    if (components_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, f] : components_) {
        std::string part = f.str();
        if (!first) {
            if (part.rfind('-', 0) == 0) {
                os << " - ";
                part = part.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        os << part;
    }
    return os.str();
}

Coderivation make_coderivation(std::vector<Cochain> parts, int truncation) {
    Coderivation d(truncation);
    for (auto& f : parts)
        d.add(f);
    return d;
}

Coderivation bracket(const Cochain& f, const Coderivation& d, int depth) {
    Coderivation out(depth);
    for (const auto& [n, dn] : d.components()) {
        if (f.weight() + n - 1 > depth)
            break;
        out.add(bracket(f, dn));
    }
    return out;
}

Coderivation bracket(const Coderivation& a, const Coderivation& b, int depth) {
    Coderivation out(depth);
    for (const auto& [i, ai] : a.components()) {
        if (i + b.order() - 1 > depth)
            break;
        for (const auto& [j, bj] : b.components()) {
            if (i + j - 1 > depth)
                break;
            out.add(bracket(ai, bj));
        }
    }
    return out;
}

Certified is_codifferential(const Coderivation& d) {
    for (const auto& [n, f] : d.components())
        if (f.parity() != Parity::odd)
            throw ParityError("codifferential check requires odd components");
    Coderivation sq = bracket(d, d, d.truncation());
    return Certified{sq.is_zero(), d.truncation()};
}

}  // namespace coda
