#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "logtangent/rat.hpp"

namespace logtangent {

/// Dense row-major matrix of rationals.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const = default;

    RatMatrix transposed() const;
    std::vector<Rat> row(std::size_t i) const;
    std::vector<Rat> col(std::size_t j) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& v);
std::vector<Rat> vec_mat(const std::vector<Rat>& v, const RatMatrix& a);
Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// Exact rank via fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
std::size_t rank(const RatMatrix& m);

/// Basis of the right kernel, each vector scaled to primitive integers.
/// Deterministic: fraction-free Gauss-Jordan, free columns left to right.
std::vector<std::vector<Int>> kernel_basis(const RatMatrix& m);

/// Exact determinant of the submatrix selected by (row_idx, col_idx).
/// Empty index sets give 1 (empty determinant). Throws std::out_of_range on
/// bad indices, std::invalid_argument if the selection is not square.
Rat minor_det(const RatMatrix& m, const std::vector<std::size_t>& row_idx,
              const std::vector<std::size_t>& col_idx);

Rat determinant(const RatMatrix& m);

/// Reduced row echelon form over Q together with the pivot columns.
/// Plain rational elimination; used as the independent cross-check for the
/// fraction-free routines and for particular solutions.
struct Rref {
    RatMatrix mat;
    std::vector<std::size_t> pivot_cols;
};
Rref rref(const RatMatrix& m);

/// One solution of A x = b, or nullopt when inconsistent. Free variables are
/// set to zero, so the result is deterministic.
std::optional<std::vector<Rat>> solve_particular(const RatMatrix& a, const std::vector<Rat>& b);

/// Inverse of a square nonsingular matrix. Throws DegenerateInput if singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace logtangent
