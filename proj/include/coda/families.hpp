#pragma once

/**
 * @file families.hpp
 * @brief Named cochain families and the catalog of representative
 *        codifferentials with their extension families.
 */

#include "coda/cochain.hpp"

#include <string>
#include <vector>

namespace coda {

// phi_n = n phi[1,0,n-1;1] + phi[0,0,n;3]
Cochain family_phi(int n);
// phi'_n = phi[0,n,0;2] + phi[0,n-1,1;3]
Cochain family_phi_prime(int n);
// eta_n^p = phi[1,p,n-p-1;1] (n-p-l)/l + phi[0,p,n-p;3] / l
Cochain family_eta(int n, int p, int l);
// zeta_n^p = phi[1,p,n-p-1;1] (n-p) + phi[0,p,n-p;3]
Cochain family_zeta(int n, int p);
// alpha_k = psi[1,k+1,k;2] + psi[1,k,k+1;3]
Cochain family_alpha(int k);
// beta_k = phi[0,k+1,k;2] + phi[0,k,k+1;3]
Cochain family_beta(int k);

// theta_{p,v} and its middle-index-stabilized version Theta_{p,v}, the
// infinite preimage ladders for d = d* + a psi[1,0,k;2] + psi[1,0,l;3]
// + b psi[1,0,m;2], truncated at the working degree.
Coderivation family_theta(int p, int v, int k, int m, const Scalar& a,
                          const Scalar& b, int depth);
Coderivation family_theta_cap(int p, int v, int k, int m, const Scalar& a,
                              const Scalar& b, int depth);

// --- representative codifferentials -------------------------------------

Coderivation d1_first(int depth = 12);             // psi[1,0,0;2]
Coderivation d1_second(int depth = 12);            // psi[0,1,0;1]
Coderivation d22(int depth = 12);                  // psi[0,2,0;1]
Coderivation d211(int depth = 12);                 // psi[0,1,1;1]
Coderivation d_sharp(int depth = 12);
Coderivation d_c(const Scalar& c, int depth = 12); // psi[1,1,0;2] + c psi[1,0,1;3]
Coderivation d_star(int depth = 12);               // psi[1,1,0;3]

// second kind, degree 2: psi[0,2,0;1] + a psi[0,0,k;1]
Coderivation sec6_extension(int k, const Scalar& a, int depth = 12);
// 1/c = m integer: d_c + psi[1,0,m;2]
Coderivation sec711_extension(int m, int depth = 12);
// c = 0: psi[1,1,0;2] + psi[1,0,k;3], and its extension d_{0,a}
Coderivation sec712_extension(int k, int depth = 12);
Coderivation d_0a(int k, const Scalar& a, int depth = 12);
// c = rr/(rr-ss) negative rational in lowest terms: d_c + psi[1,k*rr,k*(ss-rr)+1;3]
Coderivation sec713_extension(int rr, int ss, int k, int depth = 12);
Coderivation d_ca(int rr, int ss, int k, const Scalar& a, int depth = 12);
// c = -1: d_{-1} + alpha_k, and d_{e,a} = ... + a alpha_{2k}
Coderivation sec714_extension(int k, int depth = 12);
Coderivation d_ea(int k, const Scalar& a, int depth = 12);
// d* extensions
Coderivation dstar_k(int k, int depth = 12);       // + psi[1,0,k;2]
Coderivation dstar_l(int l, int depth = 12);       // + psi[1,0,l;3]
Coderivation d_kl(int k, int l, const Scalar& a, const Scalar& b, int depth = 12);
// d_{k,l} + b psi[1,0,m;3]  (the exrec shape)
Coderivation d_klm_32(int k, int l, int m, const Scalar& b, int depth = 16);
// d* + psi[1,0,l;3] + a psi[1,0,k;2] + b psi[1,0,m;2]  (the recur shape)
Coderivation d_klm_22(int k, int l, int m, const Scalar& a, const Scalar& b,
                      int depth = 16);

struct CatalogEntry {
    std::string id;
    Coderivation codifferential;
    std::string paper_locus;
    std::string constraint;  // validity condition on the parameter slots
};

// Every representative and extension family, instantiated at the
// documented sample parameters.
std::vector<CatalogEntry> catalog(int depth = 12);

}  // namespace coda
