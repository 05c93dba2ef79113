#include "coda/linalg.hpp"

#include <numeric>

namespace coda {

Vec Matrix::row(size_t r) const {
    return Vec(data_.begin() + static_cast<long>(r * cols_),
               data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vec Matrix::apply(const Vec& x) const {
    Vec out(rows_, Scalar(0));
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) {
            const Scalar& a = at(r, c);
            if (!a.is_zero() && !x[c].is_zero())
                out[r] += a * x[c];
        }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    Matrix out(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero())
                continue;
            for (size_t c = 0; c < o.cols_; ++c)
                if (!o.at(k, c).is_zero())
                    out.at(r, c) += a * o.at(k, c);
        }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& a : data_)
        if (!a.is_zero())
            return false;
    return true;
}

EchelonSpan::EchelonSpan(size_t dim) {
    priority_.resize(dim);
    std::iota(priority_.begin(), priority_.end(), size_t{0});
    row_at_.assign(dim, std::nullopt);
}

EchelonSpan::EchelonSpan(size_t dim, std::vector<size_t> column_priority)
    : priority_(std::move(column_priority)) {
    if (priority_.size() != dim)
        throw std::logic_error("column priority does not cover the space");
    row_at_.assign(dim, std::nullopt);
}

std::optional<size_t> EchelonSpan::pivot_of(const Vec& v) const {
    for (size_t k = 0; k < priority_.size(); ++k)
        if (!v[priority_[k]].is_zero())
            return k;
    return std::nullopt;
}

Vec EchelonSpan::reduce(Vec v) const {
    for (size_t k = 0; k < priority_.size(); ++k) {
        if (v[priority_[k]].is_zero() || !row_at_[k])
            continue;
        Scalar factor = v[priority_[k]];
        const Vec& row = rows_[*row_at_[k]];
        for (size_t c = 0; c < v.size(); ++c)
            if (!row[c].is_zero())
                v[c] -= factor * row[c];
    }
    return v;
}

bool EchelonSpan::add(Vec v) {
    v = reduce(std::move(v));
    auto piv = pivot_of(v);
    if (!piv)
        return false;
    Scalar lead = v[priority_[*piv]];
    for (auto& a : v)
        a /= lead;
    // keep the span fully reduced
    for (auto& row : rows_) {
        Scalar factor = row[priority_[*piv]];
        if (factor.is_zero())
            continue;
        for (size_t c = 0; c < row.size(); ++c)
            if (!v[c].is_zero())
                row[c] -= factor * v[c];
    }
    row_at_[*piv] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
}

bool EchelonSpan::contains(Vec v) const {
    v = reduce(std::move(v));
    for (const auto& a : v)
        if (!a.is_zero())
            return false;
    return true;
}

size_t rank(Matrix a) {
    size_t rk = 0;
    for (size_t col = 0; col < a.cols() && rk < a.rows(); ++col) {
        size_t sel = rk;
        while (sel < a.rows() && a.at(sel, col).is_zero())
            ++sel;
        if (sel == a.rows())
            continue;
        for (size_t c = 0; c < a.cols(); ++c)
            std::swap(a.at(rk, c), a.at(sel, c));
        Scalar lead = a.at(rk, col);
        for (size_t r = rk + 1; r < a.rows(); ++r) {
            if (a.at(r, col).is_zero())
                continue;
            Scalar factor = a.at(r, col) / lead;
            for (size_t c = col; c < a.cols(); ++c)
                if (!a.at(rk, c).is_zero())
                    a.at(r, c) -= factor * a.at(rk, c);
        }
        ++rk;
    }
    return rk;
}

std::vector<Vec> kernel_basis(const Matrix& a) {
    EchelonSpan span(a.cols());
    std::vector<Vec> reduced_rows;
    for (size_t r = 0; r < a.rows(); ++r)
        span.add(a.row(r));

    std::vector<std::optional<size_t>> pivot_row(a.cols());
    for (size_t i = 0; i < span.rows().size(); ++i) {
        const Vec& row = span.rows()[i];
        for (size_t c = 0; c < a.cols(); ++c)
            if (!row[c].is_zero()) {
                pivot_row[c] = i;
                break;
            }
    }
    std::vector<Vec> kernel;
    for (size_t c = 0; c < a.cols(); ++c) {
        if (pivot_row[c])
            continue;
        Vec v(a.cols(), Scalar(0));
        v[c] = Scalar(1);
        for (size_t pc = 0; pc < a.cols(); ++pc)
            if (pivot_row[pc])
                v[pc] = -span.rows()[*pivot_row[pc]][c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    // reduced echelon on the augmented system
    Matrix m(a.rows(), a.cols() + 1);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c);
        m.at(r, a.cols()) = b[r];
    }
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    size_t rk = 0;
    for (size_t col = 0; col < a.cols() && rk < m.rows(); ++col) {
        size_t sel = rk;
        while (sel < m.rows() && m.at(sel, col).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        for (size_t c = 0; c <= a.cols(); ++c)
            std::swap(m.at(rk, c), m.at(sel, c));
        Scalar lead = m.at(rk, col);
        for (size_t c = col; c <= a.cols(); ++c)
            m.at(rk, c) /= lead;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == rk || m.at(r, col).is_zero())
                continue;
            Scalar factor = m.at(r, col);
            for (size_t c = col; c <= a.cols(); ++c)
                if (!m.at(rk, c).is_zero())
                    m.at(r, c) -= factor * m.at(rk, c);
        }
        pivots.emplace_back(rk, col);
        ++rk;
    }
    for (size_t r = rk; r < m.rows(); ++r)
        if (!m.at(r, a.cols()).is_zero())
            return std::nullopt;
    Vec x(a.cols(), Scalar(0));
    for (const auto& [r, c] : pivots)
        x[c] = m.at(r, a.cols());
    return x;
}

}  // namespace coda
