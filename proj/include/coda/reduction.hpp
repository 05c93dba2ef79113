#pragma once

/**
 * @file reduction.hpp
 * @brief The reduction oracle for extensions of d* = psi[1,1,0;3]: rewrites
 *        odd series modulo exact coboundaries until only middle-index-zero
 *        terms remain, the normal form whose leading coefficients the
 *        coefficient formulas describe.
 *
 * Moves, all computed through the engine bracket and solved exactly:
 *   - a middle-index P >= 1 term of the third kind is traded through a
 *     phi[0,P-1,V+1;3] / phi[1,P-1,*;1]-ladder preimage chosen so that no
 *     second-kind corrections appear;
 *   - a middle-index P >= 2 term of the second kind goes through the
 *     phi[0,P-1,V+1;2] / phi[1,P-2,*;1] / phi[0,P-2,*;2] ladder with all
 *     third-kind corrections cancelled;
 *   - psi[1,1,V;2] converts through phi[0,0,V+1;2];
 *   - a middle-zero second-kind term psi[1,0,X;2] with X >= min k_i is
 *     eliminated against D(phi_n), feeding third-kind residues.
 */

#include "coda/cochain.hpp"

#include <vector>

namespace coda {

struct DStarFamily {
    std::vector<std::pair<int, Scalar>> family2;  // (k_i, a_i), ascending k
    std::vector<std::pair<int, Scalar>> family3;  // (l_j, b_j), ascending l
};

// Recognizes d = psi[1,1,0;3] + sum a_i psi[1,0,k_i;2] + sum b_j psi[1,0,l_j;3].
DStarFamily parse_dstar_family(const Coderivation& d);

struct ReducedSeries {
    Coderivation residue;      // middle-zero terms by weight
    Coderivation corrections;  // eta with input = residue + [eta, d] up to depth
    int depth = 0;
};

// After middle indices are cleared, middle-zero terms of one kind can be
// traded against D(phi_n) into the other kind: keep both, push everything
// to the third kind, or to the second kind.
enum class Conversion { none, to_third, to_second };

ReducedSeries reduce_to_normal_series(const Coderivation& d, const Coderivation& x,
                                      int depth,
                                      Conversion mode = Conversion::to_third);

// Coefficient of psi[1,0,X;family] in the residue.
Scalar normal_coefficient(const ReducedSeries& r, int x, int family);

}  // namespace coda
