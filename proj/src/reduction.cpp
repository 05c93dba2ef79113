#include "coda/reduction.hpp"

#include "coda/families.hpp"
#include "coda/linalg.hpp"

#include <algorithm>
#include <map>

namespace coda {

namespace {

bool is_single(const Cochain& f, const BasisCochain& b, Scalar* coeff) {
    if (f.terms().size() != 1)
        return false;
    const auto& [key, value] = *f.terms().begin();
    if (!(key == b))
        return false;
    if (coeff)
        *coeff = value;
    return true;
}

// Solves for the preimage in the given generator support such that
// [eta, d] has the prescribed coefficient on target and zero on every
// basis term whose target index lies in the forbidden family.
Coderivation constrained_preimage(const Coderivation& d,
                                  const std::vector<Cochain>& support,
                                  const BasisCochain& target, const Scalar& value,
                                  int forbidden_family, int depth) {
    std::vector<Coderivation> images;
    images.reserve(support.size());
    std::map<std::pair<int, BasisCochain>, size_t> slots;
    auto slot_of = [&](int w, const BasisCochain& b) {
        return slots.emplace(std::make_pair(w, b), slots.size()).first->second;
    };
    slot_of(target.weight(), target);
    for (const auto& gen : support) {
        images.push_back(bracket(gen, d, depth));
        for (const auto& [w, comp] : images.back().components())
            for (const auto& [b, c] : comp.terms())
                if (b.target == forbidden_family && b.index.i1 == 1)
                    slot_of(w, b);
    }
    Matrix m(slots.size(), support.size());
    for (size_t col = 0; col < support.size(); ++col)
        for (const auto& [key, row] : slots) {
            const Cochain* comp = images[col].component(key.first);
            if (comp)
                m.at(row, col) = comp->coefficient(key.second);
        }
    Vec rhs(slots.size(), Scalar(0));
    rhs[slots.at({target.weight(), target})] = value;
    auto x = solve(m, rhs);
    if (!x)
        throw ParameterError("reduction move has no constrained preimage");
    Coderivation eta(depth);
    for (size_t i = 0; i < support.size(); ++i)
        if (!(*x)[i].is_zero())
            eta.add(support[i] * (*x)[i]);
    return eta;
}

}  // namespace

DStarFamily parse_dstar_family(const Coderivation& d) {
    DStarFamily fam;
    Scalar lead;
    const Cochain* d2 = d.component(2);
    if (!d2 || !is_single(*d2, BasisCochain(MultiIndex(1, 1, 0), 3), &lead) ||
        !(lead == Scalar(1)))
        throw ParameterError("reduction oracle needs leading term psi[1,1,0;3]");
    for (const auto& [w, comp] : d.components()) {
        if (w == 2)
            continue;
        for (const auto& [b, c] : comp.terms()) {
            if (b.index.i1 != 1 || b.index.i2 != 0 || b.target == 1)
                throw ParameterError("reduction oracle supports psi[1,0,x;2|3] tails");
            if (b.target == 2)
                fam.family2.emplace_back(b.index.i3, c);
            else
                fam.family3.emplace_back(b.index.i3, c);
        }
    }
    std::sort(fam.family2.begin(), fam.family2.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    std::sort(fam.family3.begin(), fam.family3.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    return fam;
}

ReducedSeries reduce_to_normal_series(const Coderivation& d, const Coderivation& x,
                                      int depth, Conversion mode) {
    DStarFamily fam = parse_dstar_family(d);
    ReducedSeries out;
    out.depth = depth;
    out.residue = Coderivation(depth);
    out.corrections = Coderivation(depth);
    Coderivation work(depth);
    for (const auto& [w, comp] : x.components())
        work.add(comp);

    auto apply = [&](const Coderivation& eta) {
        out.corrections = out.corrections + eta;
        work = work - bracket(eta, d, depth);
    };

    for (int w = 2; w <= depth; ++w) {
        // clear positive middle indices, highest first
        while (true) {
            const Cochain* comp = work.component(w);
            if (!comp)
                break;
            BasisCochain best;
            Scalar coeff;
            bool found = false;
            for (const auto& [b, c] : comp->terms()) {
                if (b.index.i1 != 1 || b.target == 1)
                    throw ParameterError("reduction oracle met a second-kind term");
                if (b.index.i2 < 1)
                    continue;
                if (!found || b.index.i2 > best.index.i2 ||
                    (b.index.i2 == best.index.i2 && b.target > best.target)) {
                    best = b;
                    coeff = c;
                    found = true;
                }
            }
            if (!found)
                break;
            int p = best.index.i2, v = best.index.i3;
            std::vector<Cochain> support;
            if (best.target == 3) {
                support.push_back(phi(0, p - 1, v + 1, 3));
                for (int z = 0; p + v + z <= depth - 1; ++z)
                    support.push_back(phi(1, p - 1, v + z, 1));
                apply(constrained_preimage(d, support, best, coeff, 2, depth));
            } else if (p >= 2) {
                support.push_back(phi(0, p - 1, v + 1, 2));
                for (int z = 0; p - 1 + v + 1 + z <= depth - 1; ++z)
                    support.push_back(phi(1, p - 2, v + 1 + z, 1));
                for (int y = v + 2; p - 2 + y <= depth - 1; ++y)
                    support.push_back(phi(0, p - 2, y, 2));
                apply(constrained_preimage(d, support, best, coeff, 3, depth));
            } else {
                // psi[1,1,v;2] through phi[0,0,v+1;2]
                Cochain gen = phi(0, 0, v + 1, 2);
                Scalar t = bracket(gen, d, depth).component(w)->coefficient(best);
                Coderivation eta(depth);
                eta.add(gen * (coeff / t));
                apply(eta);
            }
        }
        // middle-zero terms: the terminal kind is residue; the other kind
        // converts through D(phi_n) when the index allows it
        int keep_family = mode == Conversion::to_second ? 2 : 3;
        while (true) {
            const Cochain* comp = work.component(w);
            if (!comp || comp->is_zero())
                break;
            const auto& [b, c] = *comp->terms().begin();
            Cochain single;
            single.add_term(b, c);
            bool convertible = false;
            int n = 0;
            if (mode == Conversion::to_third && b.target == 2 && !fam.family2.empty() &&
                b.index.i3 >= fam.family2.front().first) {
                convertible = true;
                n = b.index.i3 - fam.family2.front().first + 1;
            }
            if (mode == Conversion::to_second && b.target == 3 && !fam.family3.empty() &&
                b.index.i3 >= fam.family3.front().first) {
                convertible = true;
                n = b.index.i3 - fam.family3.front().first + 1;
            }
            if (!convertible) {
                out.residue.add(single);
                work.add(-single);
                continue;
            }
            Cochain gen = family_phi(n);
            Coderivation image = bracket(gen, d, depth);
            Scalar t = image.component(w)->coefficient(b);
            Scalar scale = c / t;
            out.corrections.add(gen * scale);
            Coderivation delta = image * scale;
            // the cancelling term and any convertible leftovers stay in
            // work; terminal-kind output goes straight to the residue
            for (const auto& [wd, dc] : delta.components()) {
                for (const auto& [db, dcc] : dc.terms()) {
                    Cochain piece;
                    piece.add_term(db, dcc);
                    if (db.target == keep_family && db.index.i2 == 0)
                        out.residue.add(-piece);
                    else
                        work.add(-piece);
                }
            }
        }
    }
    if (!work.is_zero())
        throw ParameterError("reduction did not terminate inside the depth bound");
    return out;
}

Scalar normal_coefficient(const ReducedSeries& r, int x, int family) {
    const Cochain* comp = r.residue.component(x + 1);
    if (!comp)
        return Scalar(0);
    return comp->coefficient(BasisCochain(MultiIndex(1, 0, x), family));
}

}  // namespace coda
