#pragma once

/**
 * @file homology.hpp
 * @brief Coboundary operators D = [., d], graded cohomology for
 *        pure-degree codifferentials, and the weight-filtered solvers
 *        (leading coboundary terms, cocycle extension, filtered
 *        cohomology, reduction to a canonical normal form).
 *
 * For mixed-degree d the spaces H^n are read off the weight filtration:
 * the weight-n part is (leading terms of cocycle series) modulo (leading
 * terms of coboundary series), both computed by exact triangular solves
 * certified up to a stated depth.
 */

#include "coda/cochain.hpp"
#include "coda/linalg.hpp"

namespace coda {

struct NotACocycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Vec vectorize(const Cochain& f, const std::vector<BasisCochain>& basis);
Cochain devectorize(const Vec& v, const std::vector<BasisCochain>& basis);

// Matrix of f -> [f, g] from L_i(parity p) into L_{i+|g|-1}(p + |g|),
// in the canonical bases on both sides.
Matrix bracket_matrix(const Cochain& g, int i, Parity p);

// Full-basis coboundary matrix of a pure-degree codifferential,
// L_n -> L_{n+N-1}; columns run over the 6n+3 canonical basis cochains.
struct CoboundaryMatrix {
    int source_weight = 0;
    int target_weight = 0;
    Matrix matrix;
};
CoboundaryMatrix coboundary_matrix(const Coderivation& d, int n);

struct CohomologyReport {
    int weight = 0;
    int even_dim = 0;
    int odd_dim = 0;
    std::vector<Coderivation> representatives;   // cocycles, leading weight n
    std::vector<Coderivation> coboundary_basis;  // preimages' coboundaries
    int certified_to = 0;
};

// Exact kernel/image computation for a single-weight codifferential;
// mixed-degree input is redirected to filtered_cohomology.
CohomologyReport graded_cohomology(const Coderivation& d, int n);

Certified is_cocycle(const Coderivation& d, const Cochain& f);
Certified is_cocycle(const Coderivation& d, const Coderivation& series);

struct LeadingSolve {
    Cochain target;
    Coderivation preimage;  // alpha with [alpha, d] = target + higher order
    bool achieved = false;
    int depth = 0;
};

// Triangular solve for alpha with all components of [alpha,d] below the
// target weight zero and the component at the target weight equal to the
// target. min_alpha_weight = 2 restricts the move to formal automorphisms.
LeadingSolve is_leading_coboundary(const Coderivation& d, const Cochain& target,
                                   int depth, int min_alpha_weight = 1);

// Basis (as vectors over basis_cochains(n, p)) of the space of weight-n
// leading terms of coboundary series whose preimages have all components
// of weight >= min_alpha_weight.
std::vector<Vec> leading_coboundary_space(const Coderivation& d, int n, Parity p,
                                          int min_alpha_weight = 1);

// Solves [alpha, d] = target with every component through the depth
// matched exactly (not merely the leading one).
LeadingSolve solve_exact_coboundary(const Coderivation& d, const Coderivation& target,
                                    int depth, int min_alpha_weight = 1);

struct ExtensionResult {
    bool extended = false;
    Coderivation series;        // f + higher components, when extended
    int obstruction_weight = 0; // first weight where no solution exists
    Cochain obstruction;        // the unsolvable right-hand side there
};

// Extends a cocycle of the leading-term operator to a D-cocycle series up
// to depth, or reports the first obstruction.
ExtensionResult extend_cocycle(const Coderivation& d, const Cochain& f, int depth);

CohomologyReport filtered_cohomology(const Coderivation& d, int n, int depth);

// Canonical representative of f modulo weight-|f| leading coboundary
// terms; pivots prefer to eliminate high middle indices, so normal forms
// concentrate on the paper's psi[1,0,x;j]-style cochains.
Cochain reduce_mod_leading_coboundaries(const Coderivation& d, const Cochain& f,
                                        int depth);

// Pivot priority used for normal forms: middle index descending, then
// i1 descending, then target ascending.
std::vector<size_t> reduction_priority(const std::vector<BasisCochain>& basis);

}  // namespace coda
