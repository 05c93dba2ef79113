#include "coda/multiindex.hpp"

#include <sstream>

namespace coda {

std::string MultiIndex::str() const {
    if (weight() == 0)
        return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](int gen, int exp) {
        if (exp == 0)
            return;
        if (!first)
            os << " ";
        first = false;
        os << "w" << gen;
        if (exp > 1)
            os << "^" << exp;
    };
    emit(1, i1);
    emit(2, i2);
    emit(3, i3);
    return os.str();
}

MonomialBasis enumerate_monomials(int n) {
    if (n < 1)
        throw OutOfRangeError("monomial weight must be >= 1");
    MonomialBasis basis;
    basis.even.reserve(static_cast<size_t>(n) + 1);
    for (int p = 0; p <= n; ++p)
        basis.even.emplace_back(0, p, n - p);
    basis.odd.reserve(static_cast<size_t>(n));
    for (int q = 0; q <= n - 1; ++q)
        basis.odd.emplace_back(1, q, n - q - 1);
    return basis;
}

std::vector<MultiIndex> all_monomials(int n) {
    MonomialBasis basis = enumerate_monomials(n);
    std::vector<MultiIndex> all = std::move(basis.even);
    all.insert(all.end(), basis.odd.begin(), basis.odd.end());
    return all;
}

std::vector<SplitTerm> split_monomial(const MultiIndex& J, int n) {
    std::vector<SplitTerm> out;
    if (n < 0 || n > J.weight())
        return out;
    for (int k1 = 0; k1 <= J.i1; ++k1) {
        for (int k2 = 0; k2 <= J.i2; ++k2) {
            int k3 = n - k1 - k2;
            if (k3 < 0 || k3 > J.i3)
                continue;
            SplitTerm term;
            term.inner = MultiIndex(k1, k2, k3);
            term.outer = MultiIndex(J.i1 - k1, J.i2 - k2, J.i3 - k3);
            term.multiplicity = binomial(J.i1, k1) * binomial(J.i2, k2) * binomial(J.i3, k3);
            term.sign = 1;
            out.push_back(std::move(term));
        }
    }
    return out;
}

}  // namespace coda
