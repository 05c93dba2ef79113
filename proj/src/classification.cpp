#include "coda/classification.hpp"

namespace coda {

namespace {

// -1/2 sum_{k=N+1}^{m} [d_k, d_{m+N-k+1}]
Cochain extension_rhs(const Coderivation& d, int m, int level_weight) {
    int N = d.order();
    Cochain rhs(level_weight, Parity::even);
    for (int k = N + 1; k <= m; ++k) {
        const Cochain* a = d.component(k);
        const Cochain* b = d.component(m + N - k + 1);
        if (!a || !b)
            continue;
        rhs = rhs + bracket(*a, *b) * Scalar(Rational(-1, 2));
    }
    return rhs;
}

}  // namespace

ObstructionReport obstruction(const Coderivation& partial, int n) {
    int N = partial.order();
    if (N == 0)
        throw ParameterError("empty coderivation");
    const Cochain& dN = *partial.component(N);
    if (!bracket(dN, dN).is_zero())
        throw PreconditionError("leading term is not a codifferential", N);
    // the relation must hold for the indices below n
    for (int m = N; m <= n - 1; ++m) {
        Cochain lhs = partial.component_or_zero(m + 1, Parity::odd);
        Cochain want = extension_rhs(partial, m, m + N);
        if (!(bracket(lhs, dN) == want))
            throw PreconditionError("extension relation fails below the requested level",
                                    m);
    }
    ObstructionReport report;
    report.weight = n + N;
    report.rhs = extension_rhs(partial, n, n + N);
    Coderivation lead(partial.truncation());
    lead.add(dN);
    report.rhs_is_cocycle = report.rhs.is_zero() || is_cocycle(lead, report.rhs).value;
    if (report.rhs.is_zero()) {
        report.solvable = true;
        report.solution = Cochain(n + 1, Parity::odd);
        return report;
    }
    Matrix a = bracket_matrix(dN, n + 1, Parity::odd);
    auto basis = basis_cochains(n + N, Parity::even);
    auto x = solve(a, vectorize(report.rhs, basis));
    report.solvable = x.has_value();
    if (x)
        report.solution = devectorize(*x, basis_cochains(n + 1, Parity::odd));
    return report;
}

EliminationResult eliminate_term(const Coderivation& d, int k, int depth) {
    EliminationResult out;
    out.result = d;
    out.generators = Coderivation(depth);
    const Cochain* dk = d.component(k);
    if (!dk || k == d.order())
        return out;
    LeadingSolve ls = is_leading_coboundary(d, *dk, depth, 2);
    if (!ls.achieved)
        return out;
    Coderivation conjugated = apply_exp_series(ls.preimage, d, depth);
    out.result = conjugated;
    out.removed = true;
    out.generators = ls.preimage;
    return out;
}

Coderivation normal_form(const Coderivation& d, int depth,
                         std::vector<int>* removed_weights) {
    Coderivation cur = d;
    for (int k = cur.order() + 1; k <= depth; ++k) {
        if (!cur.component(k))
            continue;
        EliminationResult step = eliminate_term(cur, k, depth);
        if (step.removed) {
            cur = step.result;
            if (removed_weights)
                removed_weights->push_back(k);
        }
    }
    return cur;
}

SearchResult equivalence_search(const Coderivation& d, const Coderivation& dprime,
                                int depth,
                                const std::vector<LinearAutomorphism>& linear_candidates) {
    SearchResult report;
    report.certified_depth = depth;
    int N = d.order();
    if (N != dprime.order() ||
        !(d.component_or_zero(N, Parity::odd) ==
          dprime.component_or_zero(N, Parity::odd))) {
        report.leading_terms_differ = true;
        return report;
    }
    std::vector<LinearAutomorphism> candidates = linear_candidates;
    if (candidates.empty())
        candidates.emplace_back();

    SearchResult first_failure;
    bool have_failure = false;
    for (const auto& lin : candidates) {
        Coderivation e = pullback_linear(lin, d);
        SearchResult attempt;
        attempt.certified_depth = depth;
        attempt.linear_part = lin;
        bool stuck = false;
        while (true) {
            Coderivation diff = e - dprime;
            if (diff.is_zero()) {
                attempt.found = true;
                break;
            }
            int w = diff.order();
            Cochain target = *diff.component(w);  // want [alpha, e] = e - d'
            LeadingSolve ls = is_leading_coboundary(e, target, depth, 2);
            if (!ls.achieved) {
                attempt.stuck_weight = w;
                attempt.discrepancy = target;
                stuck = true;
                break;
            }
            e = apply_exp_series(ls.preimage, e, depth);
            attempt.moves.push_back(ls.preimage);
        }
        if (attempt.found)
            return attempt;
        if (stuck && !have_failure) {
            first_failure = attempt;
            have_failure = true;
        }
    }
    return have_failure ? first_failure : report;
}

}  // namespace coda
