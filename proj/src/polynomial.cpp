#include "coda/polynomial.hpp"

#include <sstream>

namespace coda {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw MalformedScalarError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::exception& e) {
        throw MalformedScalarError("bad rational literal '" + text + "'");
    }
}

Polynomial::Polynomial(Rational constant) {
    if (constant != 0)
        coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty())
        throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size()))
        return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& a : r.coeffs_)
        a = -a;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        out[i] += o.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero())
        return Polynomial();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& div) const {
    if (div.is_zero())
        throw MalformedScalarError("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<Rational> q;
    if (rem.degree() >= div.degree())
        q.assign(static_cast<size_t>(rem.degree() - div.degree()) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= div.degree()) {
        long shift = rem.degree() - div.degree();
        Rational factor = rem.leading() / div.leading();
        q[static_cast<size_t>(shift)] = factor;
        std::vector<Rational> sub(static_cast<size_t>(shift), Rational(0));
        for (const auto& a : div.coeffs())
            sub.push_back(a * factor);
        rem = rem - Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return *this;
    Polynomial r = *this;
    Rational lead = leading();
    for (auto& a : r.coeffs_)
        a /= lead;
    return r;
}

Rational Polynomial::evaluate(const Rational& value) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * value + *it;
    return acc;
}

std::string Polynomial::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        Rational a = coeff(i);
        if (a == 0)
            continue;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        if (i == 0 || a != 1)
            os << to_string(a);
        if (i > 0) {
            if (a != 1)
                os << "*";
            os << "c";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw MalformedScalarError("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::variable() {
    return RationalFunction(Polynomial::variable(), Polynomial(Rational(1)));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        std::vector<Rational> n = num_.coeffs(), d = den_.coeffs();
        for (auto& a : n)
            a /= lead;
        for (auto& a : d)
            a /= lead;
        num_ = Polynomial(std::move(n));
        den_ = Polynomial(std::move(d));
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant())
        throw std::logic_error("rational function is not constant");
    if (num_.is_zero())
        return Rational(0);
    return num_.coeff(0) / den_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero())
        throw MalformedScalarError("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero())
        throw MalformedScalarError("inverse of zero");
    return RationalFunction(den_, num_);
}

Rational RationalFunction::evaluate(const Rational& value) const {
    Rational d = den_.evaluate(value);
    if (d == 0)
        throw PoleError("denominator vanishes at c = " + to_string(value));
    return num_.evaluate(value) / d;
}

std::string RationalFunction::str() const {
    if (den_ == Polynomial(Rational(1)))
        return num_.str();
    std::string n = num_.str();
    if (num_.degree() > 0)
        n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
}

}  // namespace coda
