// Exact dense linear algebra over a field scalar S (Rational or ModInt).
//
// Everything here is deterministic: Gaussian elimination always pivots on the
// leftmost column that still has a nonzero entry, using the topmost such row.
#pragma once

#include "tauslice/field.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tauslice {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

template <class S>
Matrix<S> zero_matrix(Index rows, Index cols) {
  return Matrix<S>::Constant(rows, cols, S(0));
}

template <class S>
Matrix<S> identity_matrix(Index n) {
  Matrix<S> m = zero_matrix<S>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class S>
bool is_zero_matrix(const Matrix<S>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Stacks `top` over `bottom` (column counts must agree).
template <class S>
Matrix<S> vstack(const Matrix<S>& top, const Matrix<S>& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix<S> out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

template <class S>
Matrix<S> hstack(const Matrix<S>& left, const Matrix<S>& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix<S> out(left.rows(), left.cols() + right.cols());
  out.leftCols(left.cols()) = left;
  out.rightCols(right.cols()) = right;
  return out;
}

/// Block-diagonal sum.
template <class S>
Matrix<S> block_diag(const std::vector<Matrix<S>>& parts) {
  Index r = 0, c = 0;
  for (const auto& p : parts) r += p.rows(), c += p.cols();
  Matrix<S> out = zero_matrix<S>(r, c);
  r = c = 0;
  for (const auto& p : parts) {
    out.block(r, c, p.rows(), p.cols()) = p;
    r += p.rows();
    c += p.cols();
  }
  return out;
}

template <class S>
struct Echelon {
  Matrix<S> reduced;          // same shape as the input; zero rows at the bottom
  std::vector<Index> pivots;  // pivot column of row i, for i < rank
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class S>
Echelon<S> rref(Matrix<S> m) {
  std::vector<Index> pivots;
  Index row = 0;
  const Index rows = m.rows(), cols = m.cols();
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index p = row;
    while (p < rows && is_zero(m(p, col))) ++p;
    if (p == rows) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (Index j = col; j < cols; ++j)
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const S f = m(i, col);
      for (Index j = col; j < cols; ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class S>
Index rank(const Matrix<S>& m) {
  return rref(m).rank();
}

/// Right null space {x : m x = 0}; one basis row per free column, in column order,
/// with a 1 in its own free column and zeros in the other free columns.
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& m) {
  const auto e = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index j = 0; j < n; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
  Matrix<S> k = zero_matrix<S>(static_cast<Index>(free.size()), n);
  for (std::size_t f = 0; f < free.size(); ++f) {
    const Index col = free[f];
    k(static_cast<Index>(f), col) = S(1);
    for (Index r = 0; r < e.rank(); ++r) k(static_cast<Index>(f), e.pivots[static_cast<std::size_t>(r)]) = -e.reduced(r, col);
  }
  return k;
}

/// Left null space {y : y m = 0}, as rows.
template <class S>
Matrix<S> left_kernel_basis(const Matrix<S>& m) {
  return kernel_basis<S>(m.transpose());
}

/// Some x with a x = b, free variables set to zero; nullopt when inconsistent.
template <class S>
std::optional<Matrix<S>> solve_linear(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row count mismatch");
  const auto e = rref(hstack(a, b));
  const Index n = a.cols();
  Matrix<S> x = zero_matrix<S>(n, b.cols());
  for (Index r = 0; r < e.rank(); ++r) {
    const Index p = e.pivots[static_cast<std::size_t>(r)];
    if (p >= n) return std::nullopt;
    x.row(p) = e.reduced.block(r, n, 1, b.cols());
  }
  return x;
}

/// Some x with x a = b (row-vector form).
template <class S>
std::optional<Matrix<S>> solve_left(const Matrix<S>& a, const Matrix<S>& b) {
  auto t = solve_linear<S>(a.transpose(), b.transpose());
  if (!t) return std::nullopt;
  return Matrix<S>(t->transpose());
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_linear<S>(m, identity_matrix<S>(m.rows()));
}

template <class S>
bool is_invertible(const Matrix<S>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/// A linear subspace of S^n kept as the nonzero rows of its reduced row echelon form.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(zero_matrix<S>(0, ambient)) {}

  static Subspace span(const Matrix<S>& rows) {
    Subspace s(rows.cols());
    auto e = rref(rows);
    s.basis_ = e.reduced.topRows(e.rank());
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static Subspace whole(Index n) { return span(identity_matrix<S>(n)); }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Matrix<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Residue of v modulo the subspace: v minus its projection along pivot columns.
  RowVector<S> reduce(const RowVector<S>& v) const {
    check(v.cols());
    RowVector<S> r = v;
    for (Index i = 0; i < dim(); ++i) {
      const S c = r(pivots_[static_cast<std::size_t>(i)]);
      if (!is_zero(c)) r -= c * basis_.row(i);
    }
    return r;
  }

  bool contains(const RowVector<S>& v) const {
    const auto r = reduce(v);
    for (Index j = 0; j < r.cols(); ++j)
      if (!is_zero(r(j))) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(RowVector<S>(other.basis_.row(i)))) return false;
    return true;
  }

  /// Coordinates of rows of `vs` (each in the subspace) with respect to basis().
  Matrix<S> coordinates(const Matrix<S>& vs) const {
    Matrix<S> c(vs.rows(), dim());
    for (Index r = 0; r < vs.rows(); ++r) {
      for (Index i = 0; i < dim(); ++i) c(r, i) = vs(r, pivots_[static_cast<std::size_t>(i)]);
      RowVector<S> residue = vs.row(r);
      for (Index i = 0; i < dim(); ++i)
        if (!is_zero(c(r, i))) residue -= c(r, i) * basis_.row(i);
      for (Index j = 0; j < residue.cols(); ++j)
        if (!is_zero(residue(j))) throw std::invalid_argument("Subspace::coordinates: vector not in subspace");
    }
    return c;
  }

  /// Non-pivot columns: the standard basis vectors at these positions span a complement.
  std::vector<Index> complement_columns() const {
    std::vector<bool> piv(static_cast<std::size_t>(ambient_), false);
    for (Index p : pivots_) piv[static_cast<std::size_t>(p)] = true;
    std::vector<Index> out;
    for (Index j = 0; j < ambient_; ++j)
      if (!piv[static_cast<std::size_t>(j)]) out.push_back(j);
    return out;
  }

  /// Matrix of the quotient map S^n -> S^n / U in the complement coordinates.
  Matrix<S> quotient_map() const {
    const auto comp = complement_columns();
    Matrix<S> q = zero_matrix<S>(ambient_, static_cast<Index>(comp.size()));
    for (std::size_t k = 0; k < comp.size(); ++k) {
      q(comp[k], static_cast<Index>(k)) = S(1);
      for (Index i = 0; i < dim(); ++i) q(pivots_[static_cast<std::size_t>(i)], static_cast<Index>(k)) = -basis_(i, comp[k]);
    }
    return q;
  }

  Subspace sum(const Subspace& other) const {
    check(other.ambient_);
    return span(vstack(basis_, other.basis_));
  }

  Subspace intersection(const Subspace& other) const {
    check(other.ambient_);
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
    // (a, b) with a U = b W  <=>  (a, -b) [U; W] = 0.
    const Matrix<S> stacked = vstack(basis_, other.basis_);
    const Matrix<S> lk = left_kernel_basis<S>(stacked);
    Matrix<S> vecs = lk.leftCols(dim()) * basis_;
    return span(vecs);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  void check(Index n) const {
    if (n != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }
  Index ambient_ = 0;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

/// Flattens a list of matrices row-major into one row vector.
template <class S>
RowVector<S> flatten(const std::vector<Matrix<S>>& parts) {
  Index n = 0;
  for (const auto& p : parts) n += p.size();
  RowVector<S> v(n);
  Index k = 0;
  for (const auto& p : parts)
    for (Index i = 0; i < p.rows(); ++i)
      for (Index j = 0; j < p.cols(); ++j) v(k++) = p(i, j);
  return v;
}

/// Stacks row vectors (all of length `width`) into a matrix.
template <class S>
Matrix<S> rows_to_matrix(const std::vector<RowVector<S>>& rows, Index width) {
  Matrix<S> m(static_cast<Index>(rows.size()), width);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i];
  return m;
}

}  // namespace tauslice
