#include "logtangent/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "logtangent/errors.hpp"

namespace logtangent {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Rat> RatMatrix::row(std::size_t i) const {
    std::vector<Rat> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

std::vector<Rat> RatMatrix::col(std::size_t j) const {
    std::vector<Rat> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<Rat> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

std::vector<Rat> vec_mat(const std::vector<Rat>& v, const RatMatrix& a) {
    if (a.rows() != v.size()) throw std::invalid_argument("vec_mat: shape mismatch");
    std::vector<Rat> r(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) r[j] += v[i] * a(i, j);
    return r;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Row-wise denominator clearing. Row scaling changes neither the rank nor
// the kernel; minor_det tracks the scale factors separately.
std::vector<std::vector<Int>> to_int_rows(const RatMatrix& m, std::vector<Int>* scales = nullptr) {
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) lcm = boost::multiprecision::lcm(lcm, m(i, j).den());
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).num() * (lcm / m(i, j).den());
        if (scales) scales->push_back(lcm);
    }
    return a;
}

Int exact_div(const Int& a, const Int& b) {
    assert(b != 0);
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    assert(r == 0 && "fraction-free elimination produced a non-exact division");
    return q;
}

// Forward fraction-free elimination. Returns the pivot (row-step, column)
// pairs; on exit rows below each pivot are zero in the pivot column. When
// sign != nullptr accumulates the row-swap sign.
std::vector<std::pair<std::size_t, std::size_t>> bareiss_forward(std::vector<std::vector<Int>>& a,
                                                                 int* sign = nullptr) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    Int prev = 1;
    std::size_t r = 0;
    if (sign) *sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            if (sign) *sign = -*sign;
        }
        const Int pivot = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = exact_div(a[i][j] * pivot - a[i][c] * a[r][j], prev);
            a[i][c] = 0;
        }
        prev = pivot;
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto a = to_int_rows(m);
    return bareiss_forward(a).size();
}

std::vector<std::vector<Int>> kernel_basis(const RatMatrix& m) {
    const std::size_t cols = m.cols();
    std::vector<std::vector<Int>> basis;
    if (cols == 0) return basis;
    if (m.rows() == 0) {
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<Int> v(cols, Int(0));
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Fraction-free Gauss-Jordan: one-step elimination applied to every row
    // other than the pivot row. All pivot entries end up equal to the final
    // pivot value d, and the kernel vector for a free column f reads off as
    // x[pivot col] = -a[row][f], x[f] = d.
    auto a = to_int_rows(m);
    const std::size_t rows = a.size();
    Int prev = 1;
    std::size_t r = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(a[p], a[r]);
        const Int pivot = a[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                a[i][j] = exact_div(a[i][j] * pivot - a[i][c] * a[r][j], prev);
            }
            a[i][c] = 0;
        }
        prev = pivot;
        pivots.emplace_back(r, c);
        ++r;
    }
    const Int d = prev;

    std::vector<bool> is_pivot_col(cols, false);
    for (auto& [pr, pc] : pivots) is_pivot_col[pc] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot_col[f]) continue;
        std::vector<Int> v(cols, Int(0));
        v[f] = d;
        for (auto& [pr, pc] : pivots) v[pc] = -a[pr][f];
        basis.push_back(primitive_int(v));
    }
    return basis;
}

Rat minor_det(const RatMatrix& m, const std::vector<std::size_t>& row_idx,
              const std::vector<std::size_t>& col_idx) {
    if (row_idx.size() != col_idx.size())
        throw std::invalid_argument("minor_det: index sets of different size");
    for (std::size_t i : row_idx)
        if (i >= m.rows()) throw std::out_of_range("minor_det: row index out of range");
    for (std::size_t j : col_idx)
        if (j >= m.cols()) throw std::out_of_range("minor_det: column index out of range");
    if (std::set<std::size_t>(row_idx.begin(), row_idx.end()).size() != row_idx.size() ||
        std::set<std::size_t>(col_idx.begin(), col_idx.end()).size() != col_idx.size())
        throw std::invalid_argument("minor_det: repeated index");

    const std::size_t n = row_idx.size();
    if (n == 0) return Rat(1);
    RatMatrix sub(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sub(i, j) = m(row_idx[i], col_idx[j]);
    return determinant(sub);
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    std::vector<Int> scales;
    auto a = to_int_rows(m, &scales);
    int sign = 1;
    auto pivots = bareiss_forward(a, &sign);
    if (pivots.size() < n) return Rat(0);
    // Bareiss leaves det(scaled) in the last pivot entry.
    Int det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    Int scale = 1;
    for (const Int& s : scales) scale *= s;
    return Rat(det, scale);
}

Rref rref(const RatMatrix& m) {
    Rref out;
    out.mat = m;
    RatMatrix& a = out.mat;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const Rat inv = Rat(1) / a(r, c);
        for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Rat f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

std::optional<std::vector<Rat>> solve_particular(const RatMatrix& a, const std::vector<Rat>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_particular: shape mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Rref red = rref(aug);
    for (std::size_t pc : red.pivot_cols)
        if (pc == a.cols()) return std::nullopt;  // inconsistent
    std::vector<Rat> x(a.cols());
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) x[red.pivot_cols[k]] = red.mat(k, a.cols());
    return x;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rat(1);
    }
    Rref red = rref(aug);
    if (red.pivot_cols.size() != n || red.pivot_cols[n - 1] != n - 1)
        throw DegenerateInput("inverse: singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.mat(i, n + j);
    return inv;
}

}  // namespace logtangent
