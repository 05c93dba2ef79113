#include "coda/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coda {

namespace {

std::map<BasisCochain, size_t> index_of(const std::vector<BasisCochain>& basis) {
    std::map<BasisCochain, size_t> idx;
    for (size_t i = 0; i < basis.size(); ++i)
        idx.emplace(basis[i], i);
    return idx;
}

Parity opposite(Parity p) { return p + Parity::odd; }

// Unknown layout for a series with components in [lo, hi] of parity p.
struct SeriesLayout {
    int lo = 1, hi = 0;
    Parity parity = Parity::even;
    std::vector<size_t> offset;  // per weight, index lo..hi
    size_t total = 0;

    SeriesLayout(int lo_, int hi_, Parity p) : lo(lo_), hi(hi_), parity(p) {
        for (int i = lo; i <= hi; ++i) {
            offset.push_back(total);
            total += basis_cochains(i, p).size();
        }
    }
    size_t offset_of(int i) const { return offset[static_cast<size_t>(i - lo)]; }

    Coderivation devectorize_series(const Vec& x, int truncation) const {
        Coderivation out(truncation);
        for (int i = lo; i <= hi; ++i) {
            auto basis = basis_cochains(i, parity);
            Vec part(x.begin() + static_cast<long>(offset_of(i)),
                     x.begin() + static_cast<long>(offset_of(i)) +
                         static_cast<long>(basis.size()));
            out.add(coda::devectorize(part, basis));
        }
        return out;
    }
};

// Matrix of alpha -> components of [alpha, d] in weights [wlo, whi],
// for alpha a series over the layout.
Matrix series_bracket_matrix(const Coderivation& d, const SeriesLayout& in,
                             int wlo, int whi) {
    Parity out_parity = opposite(in.parity);
    std::vector<size_t> row_offset;
    size_t rows = 0;
    for (int w = wlo; w <= whi; ++w) {
        row_offset.push_back(rows);
        rows += basis_cochains(w, out_parity).size();
    }
    Matrix m(rows, in.total);
    for (int i = in.lo; i <= in.hi; ++i) {
        for (const auto& [weight, dw] : d.components()) {
            int w = i + weight - 1;
            if (w < wlo || w > whi)
                continue;
            Matrix block = bracket_matrix(dw, i, in.parity);
            size_t r0 = row_offset[static_cast<size_t>(w - wlo)];
            size_t c0 = in.offset_of(i);
            for (size_t r = 0; r < block.rows(); ++r)
                for (size_t c = 0; c < block.cols(); ++c)
                    if (!block.at(r, c).is_zero())
                        m.at(r0 + r, c0 + c) += block.at(r, c);
        }
    }
    return m;
}

}  // namespace

Vec vectorize(const Cochain& f, const std::vector<BasisCochain>& basis) {
    auto idx = index_of(basis);
    Vec v(basis.size(), Scalar(0));
    for (const auto& [b, coeff] : f.terms()) {
        auto it = idx.find(b);
        if (it == idx.end())
            throw OutOfRangeError("cochain term outside basis");
        v[it->second] = coeff;
    }
    return v;
}

Cochain devectorize(const Vec& v, const std::vector<BasisCochain>& basis) {
    Cochain f;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero())
            f.add_term(basis[i], v[i]);
    return f;
}

Matrix bracket_matrix(const Cochain& g, int i, Parity p) {
    auto source = basis_cochains(i, p);
    auto target = basis_cochains(i + g.weight() - 1, p + g.parity());
    auto idx = index_of(target);
    Matrix m(target.size(), source.size());
    for (size_t col = 0; col < source.size(); ++col) {
        Cochain image = bracket(basis_cochain(source[col].index, source[col].target), g);
        for (const auto& [b, coeff] : image.terms())
            m.at(idx.at(b), col) = coeff;
    }
    return m;
}

CoboundaryMatrix coboundary_matrix(const Coderivation& d, int n) {
    if (d.components().size() != 1)
        throw ParameterError("coboundary matrix needs a pure-degree codifferential");
    const Cochain& dN = d.components().begin()->second;
    int target_weight = n + d.order() - 1;
    auto source = basis_cochains(n);
    auto target = basis_cochains(target_weight);
    auto idx = index_of(target);
    CoboundaryMatrix out;
    out.source_weight = n;
    out.target_weight = target_weight;
    out.matrix = Matrix(target.size(), source.size());
    for (size_t col = 0; col < source.size(); ++col) {
        Cochain image = bracket(basis_cochain(source[col].index, source[col].target), dN);
        for (const auto& [b, coeff] : image.terms())
            out.matrix.at(idx.at(b), col) = coeff;
    }
    return out;
}

CohomologyReport graded_cohomology(const Coderivation& d, int n) {
    if (d.is_zero())
        throw ParameterError("zero codifferential");
    if (d.components().size() != 1)
        throw ParameterError(
            "mixed-degree codifferential: use filtered_cohomology instead");
    int N = d.order();
    const Cochain& dN = *d.component(N);
    CohomologyReport report;
    report.weight = n;
    report.certified_to = d.truncation();
    for (Parity p : {Parity::even, Parity::odd}) {
        Matrix a = bracket_matrix(dN, n, p);
        auto cocycles = kernel_basis(a);
        auto basis = basis_cochains(n, p);
        EchelonSpan classes(basis.size());
        if (n - N + 1 >= 1) {
            Matrix b = bracket_matrix(dN, n - N + 1, opposite(p));
            for (size_t col = 0; col < b.cols(); ++col) {
                Vec v(b.rows(), Scalar(0));
                for (size_t r = 0; r < b.rows(); ++r)
                    v[r] = b.at(r, col);
                if (classes.add(std::move(v))) {
                    Coderivation cb(d.truncation());
                    cb.add(devectorize(classes.rows().back(), basis));
                    report.coboundary_basis.push_back(cb);
                }
            }
        }
        size_t image_rank = classes.rank();
        size_t kept = 0;
        for (const auto& v : cocycles) {
            if (classes.add(v)) {
                Coderivation rep(d.truncation());
                rep.add(devectorize(v, basis));
                report.representatives.push_back(rep);
                ++kept;
            }
        }
        (void)image_rank;
        if (p == Parity::even)
            report.even_dim = static_cast<int>(kept);
        else
            report.odd_dim = static_cast<int>(kept);
    }
    return report;
}

Certified is_cocycle(const Coderivation& d, const Cochain& f) {
    return Certified{bracket(f, d, d.truncation()).is_zero(), d.truncation()};
}

Certified is_cocycle(const Coderivation& d, const Coderivation& series) {
    return Certified{bracket(series, d, d.truncation()).is_zero(), d.truncation()};
}

LeadingSolve is_leading_coboundary(const Coderivation& d, const Cochain& target,
                                   int depth, int min_alpha_weight) {
    LeadingSolve out;
    out.target = target;
    out.depth = depth;
    int t = target.weight();
    if (depth < t)
        throw ParameterError("depth below the target weight");
    if (target.is_zero()) {
        out.achieved = true;
        out.preimage = Coderivation(depth);
        return out;
    }
    int N = d.order();
    if (N == 0)
        return out;
    Parity alpha_parity = target.parity() + d.parity();
    int hi = t - N + 1;
    if (hi < min_alpha_weight)
        return out;
    SeriesLayout layout(min_alpha_weight, hi, alpha_parity);
    int wlo = min_alpha_weight + N - 1;
    Matrix m = series_bracket_matrix(d, layout, wlo, t);
    Vec rhs(m.rows(), Scalar(0));
    auto target_basis = basis_cochains(t, target.parity());
    Vec tv = vectorize(target, target_basis);
    for (size_t i = 0; i < tv.size(); ++i)
        rhs[m.rows() - tv.size() + i] = tv[i];
    auto x = solve(m, rhs);
    if (!x)
        return out;
    out.achieved = true;
    out.preimage = layout.devectorize_series(*x, depth);
    return out;
}

LeadingSolve solve_exact_coboundary(const Coderivation& d, const Coderivation& target,
                                    int depth, int min_alpha_weight) {
    LeadingSolve out;
    out.depth = depth;
    if (target.is_zero()) {
        out.achieved = true;
        out.preimage = Coderivation(depth);
        return out;
    }
    int N = d.order();
    if (N == 0)
        return out;
    Parity alpha_parity = target.parity() + d.parity();
    int hi = depth - N + 1;
    if (hi < min_alpha_weight)
        return out;
    SeriesLayout layout(min_alpha_weight, hi, alpha_parity);
    int wlo = min_alpha_weight + N - 1;
    if (target.order() < wlo)
        return out;
    Matrix m = series_bracket_matrix(d, layout, wlo, depth);
    Vec rhs(m.rows(), Scalar(0));
    size_t offset = 0;
    for (int w = wlo; w <= depth; ++w) {
        auto basis = basis_cochains(w, target.parity());
        const Cochain* comp = target.component(w);
        if (comp) {
            Vec tv = vectorize(*comp, basis);
            for (size_t i = 0; i < tv.size(); ++i)
                rhs[offset + i] = tv[i];
        }
        offset += basis.size();
    }
    auto x = solve(m, rhs);
    if (!x)
        return out;
    out.achieved = true;
    out.preimage = layout.devectorize_series(*x, depth);
    return out;
}

std::vector<Vec> leading_coboundary_space(const Coderivation& d, int n, Parity p,
                                          int min_alpha_weight) {
    std::vector<Vec> basis_vectors;
    int N = d.order();
    if (N == 0)
        return basis_vectors;
    Parity alpha_parity = p + d.parity();
    int hi = n - N + 1;
    if (hi < min_alpha_weight)
        return basis_vectors;
    SeriesLayout layout(min_alpha_weight, hi, alpha_parity);
    int wlo = min_alpha_weight + N - 1;
    std::vector<Vec> feasible;
    if (wlo <= n - 1) {
        Matrix constraints = series_bracket_matrix(d, layout, wlo, n - 1);
        feasible = kernel_basis(constraints);
    } else {
        for (size_t i = 0; i < layout.total; ++i) {
            Vec e(layout.total, Scalar(0));
            e[i] = Scalar(1);
            feasible.push_back(std::move(e));
        }
    }
    Matrix at_n = series_bracket_matrix(d, layout, n, n);
    auto basis = basis_cochains(n, p);
    EchelonSpan span(basis.size(), reduction_priority(basis));
    for (const auto& k : feasible)
        span.add(at_n.apply(k));
    return span.rows();
}

ExtensionResult extend_cocycle(const Coderivation& d, const Cochain& f, int depth) {
    ExtensionResult out;
    int N = d.order();
    const Cochain& dN = *d.component(N);
    if (!bracket(f, dN).is_zero())
        throw NotACocycleError("not a cocycle of the leading-term operator");
    if (f.weight() + 1 > depth - N + 1) {
        out.extended = bracket(f, d, depth).is_zero();
        out.series = Coderivation(depth);
        out.series.add(f);
        if (!out.extended) {
            Coderivation img = bracket(f, d, depth);
            out.obstruction_weight = img.order();
            out.obstruction = *img.component(img.order());
        }
        return out;
    }

    // joint triangular solve: the higher components are free to change at
    // every level, so a greedy choice never blocks a later one
    SeriesLayout layout(f.weight() + 1, depth - N + 1, f.parity());
    Parity out_parity = f.parity() + d.parity();
    std::vector<Vec> base;  // -[f, d]_w per constraint weight
    std::vector<int> weights;
    for (int w = f.weight() + N; w <= depth; ++w)
        weights.push_back(w);
    Coderivation fd = bracket(f, d, depth);
    Matrix full = series_bracket_matrix(d, layout, weights.front(), weights.back());
    std::vector<size_t> row_offset;
    size_t rows = 0;
    for (int w : weights) {
        row_offset.push_back(rows);
        rows += basis_cochains(w, out_parity).size();
    }
    Vec rhs_all(rows, Scalar(0));
    for (size_t i = 0; i < weights.size(); ++i) {
        const Cochain* c = fd.component(weights[i]);
        if (!c)
            continue;
        Vec v = vectorize(-(*c), basis_cochains(weights[i], out_parity));
        for (size_t j = 0; j < v.size(); ++j)
            rhs_all[row_offset[i] + j] = v[j];
    }

    std::optional<Vec> last_good;
    size_t good_rows = 0;
    size_t failed_level = weights.size();
    for (size_t lvl = 0; lvl < weights.size(); ++lvl) {
        size_t upto = lvl + 1 < weights.size() ? row_offset[lvl + 1] : rows;
        Matrix sub(upto, full.cols());
        for (size_t r = 0; r < upto; ++r)
            for (size_t c = 0; c < full.cols(); ++c)
                sub.at(r, c) = full.at(r, c);
        Vec rhs(rhs_all.begin(), rhs_all.begin() + static_cast<long>(upto));
        auto x = solve(sub, rhs);
        if (!x) {
            failed_level = lvl;
            break;
        }
        last_good = x;
        good_rows = upto;
    }

    if (failed_level == weights.size()) {
        out.extended = true;
        out.series = layout.devectorize_series(*last_good, depth);
        out.series.add(f);
        return out;
    }

    out.extended = false;
    int w = weights[failed_level];
    out.obstruction_weight = w;
    auto target_basis = basis_cochains(w, out_parity);
    // residual at the failing level for the best lower solution, reduced
    // modulo everything reachable without disturbing the lower levels
    Vec residual = vectorize(fd.component(w) ? *fd.component(w)
                                             : Cochain(w, out_parity),
                             target_basis);
    if (last_good) {
        Vec reach = full.apply(*last_good);
        for (size_t j = 0; j < target_basis.size(); ++j)
            residual[j] += reach[row_offset[failed_level] + j];
    }
    (void)good_rows;
    Matrix lower(row_offset[failed_level], full.cols());
    for (size_t r = 0; r < lower.rows(); ++r)
        for (size_t c = 0; c < full.cols(); ++c)
            lower.at(r, c) = full.at(r, c);
    EchelonSpan reachable(target_basis.size(), reduction_priority(target_basis));
    for (const auto& k : kernel_basis(lower)) {
        Vec v = full.apply(k);
        reachable.add(Vec(v.begin() + static_cast<long>(row_offset[failed_level]),
                          v.begin() + static_cast<long>(row_offset[failed_level]) +
                              static_cast<long>(target_basis.size())));
    }
    out.obstruction = devectorize(reachable.reduce(residual), target_basis);
    out.series = Coderivation(depth);
    out.series.add(f);
    if (last_good) {
        Coderivation partial = layout.devectorize_series(*last_good, depth);
        out.series = out.series + partial;
    }
    return out;
}

CohomologyReport filtered_cohomology(const Coderivation& d, int n, int depth) {
    if (depth < n)
        throw ParameterError("depth below the requested weight");
    int N = d.order();
    if (N == 0)
        throw ParameterError("zero codifferential");
    CohomologyReport report;
    report.weight = n;
    report.certified_to = depth;
    for (Parity p : {Parity::even, Parity::odd}) {
        auto basis = basis_cochains(n, p);
        auto lead_cobounds = leading_coboundary_space(d, n, p);
        EchelonSpan span(basis.size(), reduction_priority(basis));
        for (const auto& v : lead_cobounds) {
            if (span.add(v)) {
                Coderivation cb(depth);
                cb.add(devectorize(span.rows().back(), basis));
                report.coboundary_basis.push_back(cb);
            }
        }
        size_t cobound_rank = span.rank();
        (void)cobound_rank;

        SeriesLayout layout(n, depth, p);
        Matrix constraints = series_bracket_matrix(d, layout, n + N - 1, depth);
        auto cocycle_series = kernel_basis(constraints);
        int dim = 0;
        for (const auto& k : cocycle_series) {
            Vec lead(k.begin(), k.begin() + static_cast<long>(basis.size()));
            if (span.add(std::move(lead))) {
                ++dim;
                report.representatives.push_back(layout.devectorize_series(k, depth));
            }
        }
        if (p == Parity::even)
            report.even_dim = dim;
        else
            report.odd_dim = dim;
    }
    return report;
}

Cochain reduce_mod_leading_coboundaries(const Coderivation& d, const Cochain& f,
                                        int depth) {
    if (f.is_zero())
        return f;
    if (depth < f.weight())
        throw ParameterError("depth below the cochain weight");
    auto basis = basis_cochains(f.weight(), f.parity());
    EchelonSpan span(basis.size(), reduction_priority(basis));
    for (const auto& v : leading_coboundary_space(d, f.weight(), f.parity()))
        span.add(v);
    return devectorize(span.reduce(vectorize(f, basis)), basis);
}

std::vector<size_t> reduction_priority(const std::vector<BasisCochain>& basis) {
    std::vector<size_t> order(basis.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const BasisCochain& x = basis[a];
        const BasisCochain& y = basis[b];
        if (x.index.i2 != y.index.i2)
            return x.index.i2 > y.index.i2;
        if (x.index.i1 != y.index.i1)
            return x.index.i1 > y.index.i1;
        return x.target < y.target;
    });
    return order;
}

}  // namespace coda
