#include "coda/automorphism.hpp"

#include <sstream>

namespace coda {

namespace {

Scalar power(const Scalar& base, int e) {
    Scalar acc(1);
    for (int i = 0; i < e; ++i)
        acc *= base;
    return acc;
}

struct InvalidAutomorphismError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace

LinearAutomorphism::LinearAutomorphism()
    : q(1), r(1), s(0), t(0), u(1), delta_(1) {}

LinearAutomorphism::LinearAutomorphism(Scalar q_, Scalar r_, Scalar s_, Scalar t_,
                                       Scalar u_)
    : q(std::move(q_)), r(std::move(r_)), s(std::move(s_)), t(std::move(t_)),
      u(std::move(u_)) {
    delta_ = r * u - s * t;
    if (q.is_zero() || delta_.is_zero())
        throw InvalidAutomorphismError("q(ru - st) must be nonzero");
}

LinearAutomorphism LinearAutomorphism::diagonal(const Scalar& q_, const Scalar& r_,
                                                const Scalar& u_) {
    return LinearAutomorphism(q_, r_, Scalar(0), Scalar(0), u_);
}

std::string LinearAutomorphism::str() const {
    std::ostringstream os;
    os << "lin(" << q.str() << "; " << r.str() << "," << s.str() << "," << t.str()
       << "," << u.str() << ")";
    return os.str();
}

std::map<MultiIndex, Scalar> apply_linear_to_monomial(const LinearAutomorphism& g,
                                                      const Monomial& m) {
    std::map<MultiIndex, Scalar> out;
    int z = m.i1, x = m.i2, y = m.i3;
    Scalar qz = power(g.q, z);
    for (int i = 0; i <= x; ++i) {
        for (int j = 0; j <= y; ++j) {
            Scalar coeff = qz * Scalar(Rational(binomial(x, i) * binomial(y, j))) *
                           power(g.r, i) * power(g.s, x - i) * power(g.t, j) *
                           power(g.u, y - j);
            if (coeff.is_zero())
                continue;
            MultiIndex target(z, i + j, x + y - i - j);
            auto [it, inserted] = out.emplace(target, coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
    }
    return out;
}

LinearAutomorphism invert_linear(const LinearAutomorphism& g) {
    Scalar d = g.delta();
    return LinearAutomorphism(g.q.inverse(), g.u / d, -g.s / d, -g.t / d, g.r / d);
}

LinearAutomorphism compose(const LinearAutomorphism& a, const LinearAutomorphism& b) {
    // (a.b)(w) = a(b(w))
    return LinearAutomorphism(a.q * b.q, a.r * b.r + a.t * b.s, a.s * b.r + a.u * b.s,
                              a.r * b.t + a.t * b.u, a.s * b.t + a.u * b.u);
}

Cochain pullback_linear(const LinearAutomorphism& g, const Cochain& f) {
    if (f.is_zero())
        return f;
    LinearAutomorphism inv = invert_linear(g);
    Cochain out(f.weight(), f.parity());
    for (const auto& J : all_monomials(f.weight())) {
        std::array<Scalar, 3> v{Scalar(0), Scalar(0), Scalar(0)};
        for (const auto& [K, coeff] : apply_linear_to_monomial(g, J)) {
            std::array<Scalar, 3> fv = f.evaluate(K);
            for (size_t i = 0; i < 3; ++i)
                if (!fv[i].is_zero())
                    v[i] += coeff * fv[i];
        }
        // apply lambda^{-1} on the value in W
        std::array<Scalar, 3> w{inv.q * v[0], inv.r * v[1] + inv.t * v[2],
                                inv.s * v[1] + inv.u * v[2]};
        Scalar norm(Rational(multiindex_factorial(J)));
        for (size_t i = 0; i < 3; ++i)
            if (!w[i].is_zero())
                out.add_term(BasisCochain(J, static_cast<int>(i) + 1), w[i] / norm);
    }
    return out;
}

Coderivation pullback_linear(const LinearAutomorphism& g, const Coderivation& d) {
    Coderivation out(d.truncation());
    for (const auto& [n, f] : d.components())
        out.add(pullback_linear(g, f));
    return out;
}

Coderivation exp_ad(const Cochain& alpha, const Coderivation& x, int depth) {
    if (alpha.parity() != Parity::even)
        throw ParityError("exp_ad generator must be even");
    if (alpha.weight() < 2)
        throw ParameterError("exp_ad generator must have weight >= 2");
    Coderivation acc(depth);
    for (const auto& [n, f] : x.components())
        if (n <= depth)
            acc.add(f);
    Coderivation cur = acc;
    long i = 1;
    while (!cur.is_zero()) {
        cur = bracket(alpha, cur, depth) * Scalar(Rational(-1, i));
        if (cur.is_zero())
            break;
        acc = acc + cur;
        ++i;
    }
    return acc;
}

Coderivation apply_exp_series(const Coderivation& alpha, const Coderivation& x,
                              int depth) {
    Coderivation out = x;
    for (const auto& [k, gen] : alpha.components())
        out = exp_ad(gen, out, depth);
    return out;
}

void FormalAutomorphism::set_generator(Cochain alpha) {
    if (alpha.parity() != Parity::even)
        throw ParityError("formal automorphism generators must be even");
    if (alpha.weight() < 2)
        throw ParameterError("formal automorphism generators must have weight >= 2");
    if (alpha.is_zero())
        generators.erase(alpha.weight());
    else
        generators[alpha.weight()] = std::move(alpha);
}

std::string FormalAutomorphism::str() const {
    std::ostringstream os;
    os << linear.str();
    for (const auto& [k, gen] : generators)
        os << "*exp(" << gen.str() << ")";
    return os.str();
}

Coderivation pullback_formal(const FormalAutomorphism& g, const Coderivation& d,
                             int depth) {
    Coderivation out = pullback_linear(g.linear, d);
    for (const auto& [k, gen] : g.generators)
        out = exp_ad(gen, out, depth);
    return out;
}

}  // namespace coda
