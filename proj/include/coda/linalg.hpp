#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact Gaussian elimination over the Scalar field, plus an
 *        incremental reduced-echelon span with a configurable pivot order
 *        (the basis-order knob behind canonical representatives).
 */

#include "coda/scalar.hpp"

#include <optional>
#include <vector>

namespace coda {

using Vec = std::vector<Scalar>;

class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Vec row(size_t r) const;
    Vec apply(const Vec& x) const;      // A x
    Matrix operator*(const Matrix& o) const;
    bool is_zero() const;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

// Incrementally maintained reduced echelon basis of a row span. Pivots are
// chosen by the given column priority (defaults to natural order), so
// reduce() is a canonical projection onto the complement of the span.
class EchelonSpan {
  public:
    explicit EchelonSpan(size_t dim);
    EchelonSpan(size_t dim, std::vector<size_t> column_priority);

    // Reduces v against the span; inserts the residue when nonzero.
    bool add(Vec v);
    Vec reduce(Vec v) const;
    bool contains(Vec v) const;
    size_t rank() const { return rows_.size(); }
    size_t dim() const { return priority_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }

  private:
    std::optional<size_t> pivot_of(const Vec& v) const;
    std::vector<size_t> priority_;           // priority index -> column
    std::vector<Vec> rows_;                  // reduced rows
    std::vector<std::optional<size_t>> row_at_;  // priority index -> row id
};

size_t rank(Matrix a);

// Basis of {x : A x = 0}, deterministic (free variables in column order).
std::vector<Vec> kernel_basis(const Matrix& a);

// One solution of A x = b with free variables set to zero, if consistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace coda
