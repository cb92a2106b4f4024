#ifndef ALTRING_ALGEBRA_HPP
#define ALTRING_ALGEBRA_HPP

#include <altring/linalg.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace altring {

/// Coordinate matrix of a linear self-map; column j is the image of e_j.
template <FieldScalar S>
using LinearMap = Matrix<S>;

/*
 * Finite-dimensional algebra given by structure constants:
 *   e_i * e_j = sum_k c[i][j][k] e_k   (0-based indices internally).
 * Multiplication is the bilinear extension. An optional unit and an
 * optional designated idempotent travel with the algebra; a recorded unit
 * is validated against every basis element on construction.
 */
template <FieldScalar S>
class Algebra {
 public:
  struct Term {
    std::size_t k;
    S c;
  };

  Algebra(const Field& f, std::size_t dim) : field_(f), dim_(dim), c_(dim * dim * dim, S::zero(f)), terms_(dim * dim) {
    if (dim == 0) throw Error(Errc::invalid_argument, "algebra dimension must be at least 1");
  }

  Algebra(const Field& f, std::size_t dim, std::vector<S> tensor,
          std::optional<Vec<S>> unit = std::nullopt, std::optional<Vec<S>> idempotent = std::nullopt)
      : Algebra(f, dim) {
    if (tensor.size() != dim * dim * dim) throw Error(Errc::dimension_mismatch, "structure tensor size");
    c_ = std::move(tensor);
    rebuild_terms();
    if (unit) set_unit(*unit);
    if (idempotent) set_idempotent(*idempotent);
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  const S& coeff(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<S>& tensor() const { return c_; }

  void set_coeff(std::size_t i, std::size_t j, std::size_t k, const S& v) {
    check_index(i); check_index(j); check_index(k);
    c_[(i * dim_ + j) * dim_ + k] = v;
    rebuild_terms(i, j);
  }

  const std::optional<Vec<S>>& unit() const { return unit_; }
  const std::optional<Vec<S>>& idempotent() const { return idem_; }

  /// Records `u` as the unit; throws semantic_error unless u*e_i = e_i*u = e_i for all i.
  void set_unit(const Vec<S>& u) {
    check_element(u);
    for (std::size_t i = 0; i < dim_; ++i) {
      auto ei = basis(i);
      if (!(mul(u, ei) == ei) || !(mul(ei, u) == ei))
        throw Error(Errc::semantic_error, "recorded unit fails u*e" + std::to_string(i + 1) + " = e" +
                                              std::to_string(i + 1) + " = e" + std::to_string(i + 1) + "*u");
    }
    unit_ = u;
  }
  void clear_unit() { unit_.reset(); }

  /// Records a designated idempotent (validated only for e*e = e, e != 0).
  void set_idempotent(const Vec<S>& e) {
    check_element(e);
    if (is_zero_vec<S>(e) || !(mul(e, e) == e))
      throw Error(Errc::semantic_error, "designated idempotent does not satisfy e*e = e");
    idem_ = e;
  }
  void clear_idempotent() { idem_.reset(); }

  Vec<S> zero() const { return zero_vec<S>(field_, dim_); }
  Vec<S> basis(std::size_t i) const { check_index(i); return unit_vec<S>(field_, dim_, i); }

  Vec<S> mul(std::span<const S> x, std::span<const S> y) const {
    check_element(x);
    check_element(y);
    auto out = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        const auto& ts = terms_[i * dim_ + j];
        if (ts.empty()) continue;
        const S xy = x[i] * y[j];
        for (const auto& t : ts) out[t.k] += xy * t.c;
      }
    }
    return out;
  }
  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const { return mul(std::span<const S>(x), std::span<const S>(y)); }

  /// Nonzero terms of e_i * e_j.
  const std::vector<Term>& terms(std::size_t i, std::size_t j) const { return terms_[i * dim_ + j]; }

  void check_element(std::span<const S> x) const {
    if (x.size() != dim_)
      throw Error(Errc::dimension_mismatch, "element has " + std::to_string(x.size()) + " coordinates, algebra has dim " +
                                                std::to_string(dim_));
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.c_ == b.c_ && a.unit_ == b.unit_ && a.idem_ == b.idem_;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= dim_) throw Error(Errc::invalid_argument, "basis index out of range");
  }

  void rebuild_terms() {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) rebuild_terms(i, j);
  }

  void rebuild_terms(std::size_t i, std::size_t j) {
    auto& ts = terms_[i * dim_ + j];
    ts.clear();
    for (std::size_t k = 0; k < dim_; ++k)
      if (!coeff(i, j, k).is_zero()) ts.push_back({k, coeff(i, j, k)});
  }

  Field field_;
  std::size_t dim_;
  std::vector<S> c_;
  std::vector<std::vector<Term>> terms_;
  std::optional<Vec<S>> unit_;
  std::optional<Vec<S>> idem_;
};

// Products built from the multiplication.

template <FieldScalar S>
Vec<S> commutator(const Algebra<S>& a, const Vec<S>& x, const Vec<S>& y) {
  return a.mul(x, y) - a.mul(y, x);
}

template <FieldScalar S>
Vec<S> jordan(const Algebra<S>& a, const Vec<S>& x, const Vec<S>& y) {
  return a.mul(x, y) + a.mul(y, x);
}

/// (x,y,z) = (xy)z - x(yz)
template <FieldScalar S>
Vec<S> associator(const Algebra<S>& a, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
  return a.mul(a.mul(x, y), z) - a.mul(x, a.mul(y, z));
}

enum class Side { left, right };

/// L_y (x -> y*x) or R_y (x -> x*y) as a coordinate matrix.
template <FieldScalar S>
LinearMap<S> mul_operator(const Algebra<S>& a, const Vec<S>& y, Side side) {
  a.check_element(y);
  std::vector<Vec<S>> cols;
  cols.reserve(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    auto ej = a.basis(j);
    cols.push_back(side == Side::left ? a.mul(y, ej) : a.mul(ej, y));
  }
  return LinearMap<S>::from_columns(a.field(), a.dim(), cols);
}

/// Right-commutation x -> [x, y] as a coordinate matrix.
template <FieldScalar S>
LinearMap<S> right_commutation_operator(const Algebra<S>& a, const Vec<S>& y) {
  return mul_operator(a, y, Side::right) - mul_operator(a, y, Side::left);
}

// Finite-field element enumeration: index = sum_i coord_i * p^i.

/// Number of elements p^d, or nullopt when it exceeds `cap` or the field is Q.
inline std::optional<std::uint64_t> element_count(const Field& f, std::size_t d, std::uint64_t cap) {
  if (!f.finite()) return std::nullopt;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (n > cap / f.p) return std::nullopt;
    n *= f.p;
  }
  return n;
}

inline Vec<ModP> element_from_index(const Field& f, std::size_t d, std::uint64_t index) {
  Vec<ModP> v;
  v.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    v.emplace_back(index % f.p, f.p);
    index /= f.p;
  }
  return v;
}

inline std::uint64_t index_of_element(std::span<const ModP> v) {
  std::uint64_t index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = index * v[i].modulus() + v[i].value();
  return index;
}

/// Enumerates the p^k elements sum_i t_i b_i of the span of the given vectors.
inline std::vector<Vec<ModP>> enumerate_span(const Field& f, std::size_t ambient,
                                             const std::vector<Vec<ModP>>& basis, std::uint64_t cap) {
  auto count = element_count(f, basis.size(), cap);
  if (!count) throw Error(Errc::budget_exceeded, "span has more than " + std::to_string(cap) + " elements");
  std::vector<Vec<ModP>> out;
  out.reserve(*count);
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    auto coeffs = element_from_index(f, basis.size(), idx);
    auto v = zero_vec<ModP>(f, ambient);
    for (std::size_t i = 0; i < basis.size(); ++i) axpy<ModP>(std::span<ModP>(v), coeffs[i], basis[i]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace altring

#endif  // ALTRING_ALGEBRA_HPP
