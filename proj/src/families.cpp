#include "coda/families.hpp"

namespace coda {

Cochain family_phi(int n) {
    return phi(1, 0, n - 1, 1) * Scalar(n) + phi(0, 0, n, 3);
}

Cochain family_phi_prime(int n) {
    return phi(0, n, 0, 2) + phi(0, n - 1, 1, 3);
}

Cochain family_eta(int n, int p, int l) {
    return phi(1, p, n - p - 1, 1) * Scalar(Rational(n - p - l, l)) +
           phi(0, p, n - p, 3) * Scalar(Rational(1, l));
}

Cochain family_zeta(int n, int p) {
    return phi(1, p, n - p - 1, 1) * Scalar(n - p) + phi(0, p, n - p, 3);
}

Cochain family_alpha(int k) {
    return phi(1, k + 1, k, 2) + phi(1, k, k + 1, 3);
}

Cochain family_beta(int k) {
    return phi(0, k + 1, k, 2) + phi(0, k, k + 1, 3);
}

Coderivation family_theta(int p, int v, int k, int m, const Scalar& a,
                          const Scalar& b, int depth) {
    Coderivation theta(depth);
    theta.add(phi(0, p, v + 1, 3));
    theta.add(phi(1, p, v, 1) * Scalar(-k));
    Scalar ratio = b / a;
    Scalar coeff(1);
    for (int i = 1; p + 1 + v + i * (m - k) <= depth; ++i) {
        coeff *= -ratio;
        theta.add(phi(1, p, v + i * (m - k), 1) * (coeff * Scalar(m - k)));
    }
    return theta;
}

Coderivation family_theta_cap(int p, int v, int k, int m, const Scalar& a,
                              const Scalar& b, int depth) {
    Coderivation cap = family_theta(p, v, k, m, a, b, depth);
    Scalar ratio = b / a;
    Scalar coeff(1);
    for (int i = 1; p + 1 + v + i * (m - k) <= depth; ++i) {
        coeff *= -ratio;
        Scalar factor = coeff * Scalar(m - k) / Scalar(v + m + 1);
        cap = cap + family_theta(p, v + i * (m - k), k, m, a, b, depth) * factor;
    }
    return cap;
}

Coderivation d1_first(int depth) {
    return make_coderivation({phi(1, 0, 0, 2)}, depth);
}

Coderivation d1_second(int depth) {
    return make_coderivation({phi(0, 1, 0, 1)}, depth);
}

Coderivation d22(int depth) {
    return make_coderivation({phi(0, 2, 0, 1)}, depth);
}

Coderivation d211(int depth) {
    return make_coderivation({phi(0, 1, 1, 1)}, depth);
}

Coderivation d_sharp(int depth) {
    return make_coderivation({phi(1, 1, 0, 2), phi(1, 1, 0, 3), phi(1, 0, 1, 3)}, depth);
}

Coderivation d_c(const Scalar& c, int depth) {
    return make_coderivation({phi(1, 1, 0, 2), phi(1, 0, 1, 3) * c}, depth);
}

Coderivation d_star(int depth) {
    return make_coderivation({phi(1, 1, 0, 3)}, depth);
}

Coderivation sec6_extension(int k, const Scalar& a, int depth) {
    return make_coderivation({phi(0, 2, 0, 1), phi(0, 0, k, 1) * a}, depth);
}

Coderivation sec711_extension(int m, int depth) {
    Coderivation d = d_c(Scalar(Rational(1, m)), depth);
    d.add(phi(1, 0, m, 2));
    return d;
}

Coderivation sec712_extension(int k, int depth) {
    return make_coderivation({phi(1, 1, 0, 2), phi(1, 0, k, 3)}, depth);
}

Coderivation d_0a(int k, const Scalar& a, int depth) {
    Coderivation d = sec712_extension(k, depth);
    d.add(phi(1, 0, 2 * k - 1, 3) * a);
    return d;
}

Coderivation sec713_extension(int rr, int ss, int k, int depth) {
    // c/(c-1) = rr/ss in lowest terms, so c = rr/(rr-ss)
    Scalar c(make_rational(rr, rr - ss));
    Coderivation d = d_c(c, depth);
    d.add(phi(1, k * rr, k * (ss - rr) + 1, 3));
    return d;
}

Coderivation d_ca(int rr, int ss, int k, const Scalar& a, int depth) {
    Coderivation d = sec713_extension(rr, ss, k, depth);
    d.add(phi(1, 2 * k * rr, 2 * k * (ss - rr) + 1, 3) * a);
    return d;
}

Coderivation sec714_extension(int k, int depth) {
    Coderivation d = d_c(Scalar(-1), depth);
    d.add(family_alpha(k));
    return d;
}

Coderivation d_ea(int k, const Scalar& a, int depth) {
    Coderivation d = sec714_extension(k, depth);
    d.add(family_alpha(2 * k) * a);
    return d;
}

Coderivation dstar_k(int k, int depth) {
    return make_coderivation({phi(1, 1, 0, 3), phi(1, 0, k, 2)}, depth);
}

Coderivation dstar_l(int l, int depth) {
    return make_coderivation({phi(1, 1, 0, 3), phi(1, 0, l, 3)}, depth);
}

Coderivation d_kl(int k, int l, const Scalar& a, const Scalar& b, int depth) {
    return make_coderivation(
        {phi(1, 1, 0, 3), phi(1, 0, k, 2) * a, phi(1, 0, l, 3) * b}, depth);
}

Coderivation d_klm_32(int k, int l, int m, const Scalar& b, int depth) {
    Coderivation d = d_kl(k, l, Scalar(1), Scalar(1), depth);
    d.add(phi(1, 0, m, 3) * b);
    return d;
}

Coderivation d_klm_22(int k, int l, int m, const Scalar& a, const Scalar& b,
                      int depth) {
    return make_coderivation({phi(1, 1, 0, 3), phi(1, 0, l, 3), phi(1, 0, k, 2) * a,
                              phi(1, 0, m, 2) * b},
                             depth);
}

std::vector<CatalogEntry> catalog(int depth) {
    std::vector<CatalogEntry> out;
    auto put = [&](std::string id, Coderivation d, std::string locus,
                   std::string constraint) {
        out.push_back({std::move(id), std::move(d), std::move(locus),
                       std::move(constraint)});
    };
    put("d1.first", d1_first(depth), "sec. 4, first kind", "");
    put("d1.second", d1_second(depth), "sec. 4, second kind", "");
    put("d22", d22(depth), "sec. 6", "");
    put("d211", d211(depth), "sec. 6", "");
    put("d_sharp", d_sharp(depth), "sec. 7 representative list", "");
    put("d_c", d_c(Scalar::parameter(), depth), "sec. 7 representative list",
        "|c| <= 1");
    put("d_star", d_star(depth), "sec. 7 representative list", "");
    put("sec6.de", sec6_extension(3, Scalar(1), depth), "sec. 6 extension", "k > 2");
    put("sec711.de", sec711_extension(3, depth), "sec. 7.1.1", "1/c = m > 2 integer");
    put("sec712.de", sec712_extension(2, depth), "sec. 7.1.2", "k > 1");
    put("d_0a", d_0a(2, Scalar(1), depth), "sec. 7.1.2", "k > 1, a != 0");
    put("sec713.de", sec713_extension(1, 4, 1, depth), "sec. 7.1.3",
        "c = rr/(rr-ss), 0 < rr/ss < 1/2 lowest terms");
    put("d_ca", d_ca(1, 4, 1, Scalar(1), depth), "sec. 7.1.3", "same as sec713.de");
    put("sec714.de", sec714_extension(1, depth), "sec. 7.1.4", "k >= 1");
    put("d_ea", d_ea(1, Scalar(1), depth), "sec. 7.1.4", "k >= 1");
    put("dstar.k", dstar_k(2, depth), "sec. 7.2.1", "k >= 2");
    put("dstar.l", dstar_l(2, depth), "sec. 7.2.2", "l >= 2");
    put("d_kl", d_kl(2, 5, Scalar(1), Scalar(1), depth), "sec. 7.2.3",
        "2l != k+1; l not a multiple of k+1 when k < l");
    put("d_klm.32", d_klm_32(2, 5, 9, Scalar(1), std::max(depth, 16)),
        "sec. 7.2.3 case 1", "m not excluded by the case-1 index rules");
    put("d_klm.22", d_klm_22(5, 2, 8, Scalar(1), Scalar(1), std::max(depth, 16)),
        "sec. 7.2.3 case 2", "m > k, m avoids (x-1)l + k");
    put("d_kl.special", d_kl(3, 2, Scalar(1), Scalar(1), depth), "sec. 7.2.4",
        "k+1 = 2l; coefficient a on psi[1,0,k;2] not normalizable");
    return out;
}

}  // namespace coda
