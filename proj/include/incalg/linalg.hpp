#pragma once

// Exact dense linear algebra over a field scalar (Rational or a prime-modulus
// ModInt). Everything is elimination with deterministic pivoting: first
// column with a nonzero entry, first row carrying it. No magnitudes are ever
// compared, so the same code serves Q and F_p.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace incalg::linalg {

using Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> reduced;     // reduced row echelon form, zero rows at the bottom
  std::vector<Index> pivots;  // pivot column of each nonzero row

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.reduced = a;
  Matrix<Scalar>& m = out.reduced;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar scale = Scalar(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= scale;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const Scalar factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  return reduced_row_echelon(a).rank();
}

/// Null-space basis from an echelon form with `cols` columns; one column per free variable.
template <typename Scalar>
Matrix<Scalar> kernel_from_echelon(const Echelon<Scalar>& e, Index cols) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(cols, cols - e.rank());
  Index k = 0;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (Index r = 0; r < e.rank(); ++r) basis(e.pivots[static_cast<std::size_t>(r)], k) = -e.reduced(r, free);
    ++k;
  }
  return basis;
}

template <typename Derived>
Matrix<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& a) {
  return kernel_from_echelon(reduced_row_echelon(a), a.cols());
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = a;
  Scalar det(1);
  for (Index col = 0; col < m.cols(); ++col) {
    Index pivot = col;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = Scalar(1) / m(col, col);
    for (Index i = col + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, col))) continue;
      const Scalar factor = m(i, col) * inv;
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

/// Gauss-Jordan inverse; nullopt when singular.
template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = a.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  const auto e = reduced_row_echelon(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  return Matrix<Scalar>(e.reduced.rightCols(n));
}

/// Row-at-a-time echelon builder for tall sparse systems (thousands of rows,
/// a few hundred columns). Rows are kept fully reduced, sorted by pivot.
template <typename Scalar>
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(Index cols) : cols_(cols) {}

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Reduces `row` against the basis and keeps it if independent. Returns true when rank grew.
  bool add(Vector<Scalar> row) {
    for (const auto& [pivot, basis_row] : rows_) {
      if (is_zero(row(pivot))) continue;
      const Scalar factor = row(pivot);
      for (Index j = pivot; j < cols_; ++j) {
        if (!is_zero(basis_row(j))) row(j) -= factor * basis_row(j);
      }
    }
    Index pivot = 0;
    while (pivot < cols_ && is_zero(row(pivot))) ++pivot;
    if (pivot == cols_) return false;
    const Scalar scale = Scalar(1) / row(pivot);
    for (Index j = pivot; j < cols_; ++j) row(j) *= scale;
    for (auto& [p, basis_row] : rows_) {
      if (is_zero(basis_row(pivot))) continue;
      const Scalar factor = basis_row(pivot);
      for (Index j = pivot; j < cols_; ++j) basis_row(j) -= factor * row(j);
    }
    const auto at = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                     [](const auto& entry, Index p) { return entry.first < p; });
    rows_.insert(at, {pivot, std::move(row)});
    return true;
  }

  Echelon<Scalar> echelon() const {
    Echelon<Scalar> e;
    e.reduced = Matrix<Scalar>::Zero(std::max<Index>(rank(), 1), cols_);
    for (Index i = 0; i < rank(); ++i) {
      e.reduced.row(i) = rows_[static_cast<std::size_t>(i)].second.transpose();
      e.pivots.push_back(rows_[static_cast<std::size_t>(i)].first);
    }
    return e;
  }

  Matrix<Scalar> kernel() const { return kernel_from_echelon(echelon(), cols_); }

 private:
  Index cols_;
  std::vector<std::pair<Index, Vector<Scalar>>> rows_;
};

}  // namespace incalg::linalg
