#pragma once

/**
 * @file classification.hpp
 * @brief Extension obstructions, standard-form elimination of removable
 *        terms, and the degree-by-degree equivalence search that probes
 *        formal equivalence of extensions.
 */

#include "coda/automorphism.hpp"
#include "coda/homology.hpp"

#include <optional>

namespace coda {

struct PreconditionError : std::runtime_error {
    int failing_index;
    PreconditionError(const std::string& msg, int index)
        : std::runtime_error(msg), failing_index(index) {}
};

struct ObstructionReport {
    int weight = 0;       // weight of the right-hand side (= n + N)
    Cochain rhs;          // -1/2 sum [d_k, d_{n+N-k+1}]
    bool rhs_is_cocycle = false;
    bool solvable = false;
    std::optional<Cochain> solution;  // a particular next component d_{n+1}
};

// Right-hand side of the extension relation at level n for a partial
// extension satisfying it through n-1; throws PreconditionError with the
// first failing index otherwise.
ObstructionReport obstruction(const Coderivation& partial, int n);

struct EliminationResult {
    Coderivation result;
    bool removed = false;
    Coderivation generators;  // even exp-series applied (empty if not removed)
};

// Removes the weight-k component by exp conjugation when it is the
// leading term of a coboundary reachable with formal generators.
EliminationResult eliminate_term(const Coderivation& d, int k, int depth);

// Iterated elimination from the lowest removable weight upwards.
Coderivation normal_form(const Coderivation& d, int depth,
                         std::vector<int>* removed_weights = nullptr);

struct SearchResult {
    bool found = false;
    bool leading_terms_differ = false;
    LinearAutomorphism linear_part;
    std::vector<Coderivation> moves;  // exp-generator series in application order
    int stuck_weight = 0;
    Cochain discrepancy;  // first discrepancy that is not a leading coboundary
    int certified_depth = 0;
};

// Searches for a formal automorphism g (optionally seeded with a linear
// part from the candidate list) with g*(d) = d' up to depth. A failed
// search certifies that the first surviving discrepancy is not the
// leading term of a coboundary within the depth.
SearchResult equivalence_search(const Coderivation& d, const Coderivation& dprime,
                                int depth,
                                const std::vector<LinearAutomorphism>& linear_candidates = {});

}  // namespace coda
