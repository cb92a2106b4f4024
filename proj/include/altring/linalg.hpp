#ifndef ALTRING_LINALG_HPP
#define ALTRING_LINALG_HPP

#include <altring/matrix.hpp>

#include <map>
#include <optional>
#include <utility>

namespace altring {

template <FieldScalar S>
struct RrefResult {
  Matrix<S> rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/*
 * Gauss-Jordan elimination to the canonical reduced row-echelon form.
 * Zero rows are kept at the bottom so the result has the input shape.
 */
template <FieldScalar S>
RrefResult<S> rref(Matrix<S> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    const S inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const S factor = -m(i, c);
      axpy<S>(m.row(i), factor, m.row(r));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

template <FieldScalar S>
std::size_t rank(const Matrix<S>& m) {
  return rref(m).rank;
}

/*
 * Streaming row eliminator. Rows are reduced against the current echelon
 * basis as they arrive, so memory stays at O(rank * cols) no matter how
 * many constraint rows are fed in.
 */
template <FieldScalar S>
class RowReducer {
 public:
  RowReducer(const Field& f, std::size_t cols) : field_(f), cols_(cols) {}

  const Field& field() const { return field_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }

  /// Returns true when the row was independent of the rows seen so far.
  bool add(Vec<S> row) {
    if (row.size() != cols_) throw Error(Errc::dimension_mismatch, "reducer row length");
    for (const auto& [pivot, basis] : rows_) {
      if (row[pivot].is_zero()) continue;
      const S factor = -row[pivot];
      axpy<S>(std::span<S>(row), factor, std::span<const S>(basis));
    }
    std::size_t lead = 0;
    while (lead < cols_ && row[lead].is_zero()) ++lead;
    if (lead == cols_) return false;
    const S inv = row[lead].inverse();
    for (std::size_t j = lead; j < cols_; ++j) row[j] *= inv;
    // Keep existing rows reduced at the new pivot.
    for (auto& [pivot, basis] : rows_) {
      if (basis[lead].is_zero()) continue;
      const S factor = -basis[lead];
      axpy<S>(std::span<S>(basis), factor, std::span<const S>(row));
    }
    rows_.emplace(lead, std::move(row));
    return true;
  }

  /// Canonical RREF of the accumulated row space (nonzero rows only).
  Matrix<S> basis() const {
    Matrix<S> m(field_, 0, cols_);
    for (const auto& [pivot, r] : rows_) m.append_row(r);
    return m;
  }

 private:
  Field field_;
  std::size_t cols_;
  std::map<std::size_t, Vec<S>> rows_;
};

/*
 * Subspace of F^n identified by the canonical RREF of a basis. Two
 * subspaces are equal iff their basis matrices coincide entry-wise.
 */
template <FieldScalar S>
class Subspace {
 public:
  Subspace(const Field& f, std::size_t ambient) : basis_(f, 0, ambient) {}

  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec<S>>& vectors) {
    Matrix<S> m(f, 0, ambient);
    for (const auto& v : vectors) m.append_row(v);
    return from_rows(m);
  }

  /// Row space of `m`.
  static Subspace from_rows(const Matrix<S>& m) {
    Subspace s(m.field(), m.cols());
    auto r = rref(m);
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.append_row(r.rref.row(i));
    return s;
  }

  static Subspace from_reducer(const RowReducer<S>& red) {
    Subspace s(red.field(), red.cols());
    s.basis_ = red.basis();
    return s;
  }

  static Subspace full(const Field& f, std::size_t n) {
    return from_rows(Matrix<S>::identity(f, n));
  }

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix<S>& basis() const { return basis_; }
  std::vector<Vec<S>> basis_vectors() const {
    std::vector<Vec<S>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vec(i));
    return out;
  }

  bool contains(std::span<const S> x) const {
    if (x.size() != ambient()) throw Error(Errc::dimension_mismatch, "subspace membership");
    Vec<S> r(x.begin(), x.end());
    std::size_t row = 0;
    for (std::size_t c = 0; c < ambient() && row < dim(); ++c) {
      if (basis_(row, c).is_zero()) continue;  // not a pivot column
      if (!r[c].is_zero()) axpy<S>(std::span<S>(r), -r[c], basis_.row(row));
      ++row;
    }
    return is_zero_vec<S>(r);
  }
  bool contains(const Vec<S>& x) const { return contains(std::span<const S>(x)); }

  bool contains(const Subspace& o) const {
    check_compatible(o);
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  void check_compatible(const Subspace& o) const {
    if (o.ambient() != ambient()) throw Error(Errc::dimension_mismatch, "ambient dimensions differ");
    require_same_field(field(), o.field());
  }

 private:
  Matrix<S> basis_;
};

/// {x : m x = 0}
template <FieldScalar S>
Subspace<S> kernel(const Matrix<S>& m) {
  auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec<S>> vecs;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    auto v = unit_vec<S>(m.field(), n, free);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.rref(i, free);
    vecs.push_back(std::move(v));
  }
  return Subspace<S>::span(m.field(), n, vecs);
}

/// Kernel of the matrix whose rows were streamed into `red`.
template <FieldScalar S>
Subspace<S> kernel(const RowReducer<S>& red) {
  return kernel(red.basis());
}

/// Vectors annihilated by every basis vector of `v` under the standard pairing.
template <FieldScalar S>
Subspace<S> annihilator(const Subspace<S>& v) {
  return kernel(v.basis());
}

template <FieldScalar S>
Subspace<S> subspace_sum(const Subspace<S>& a, const Subspace<S>& b) {
  a.check_compatible(b);
  Matrix<S> m = a.basis();
  m.append_rows(b.basis());
  return Subspace<S>::from_rows(m);
}

template <FieldScalar S>
Subspace<S> subspace_intersect(const Subspace<S>& a, const Subspace<S>& b) {
  a.check_compatible(b);
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

template <FieldScalar S>
struct Solution {
  Vec<S> particular;
  Subspace<S> kernel;
};

/// One solution of m x = b plus the kernel, or nullopt when b is not in the column space.
template <FieldScalar S>
std::optional<Solution<S>> solve(const Matrix<S>& m, std::span<const S> b) {
  if (b.size() != m.rows()) throw Error(Errc::dimension_mismatch, "right-hand side length");
  const std::size_t n = m.cols();
  Matrix<S> aug(m.field(), m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
  auto x = zero_vec<S>(m.field(), n);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.rref(i, n);
  return Solution<S>{std::move(x), kernel(m)};
}

template <FieldScalar S>
std::optional<Solution<S>> solve(const Matrix<S>& m, const Vec<S>& b) {
  return solve(m, std::span<const S>(b));
}

/// Inverse of a square matrix, nullopt when singular.
template <FieldScalar S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(Errc::dimension_mismatch, "inverse of non-square matrix");
  Matrix<S> aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = S::one(m.field());
  }
  auto r = rref(std::move(aug));
  if (n > 0 && (r.rank < n || r.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<S> inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.rref(i, n + j);
  return inv;
}

}  // namespace altring

#endif  // ALTRING_LINALG_HPP
