#ifndef ALTRING_CATALOG_HPP
#define ALTRING_CATALOG_HPP

#include <altring/identities.hpp>

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace altring {

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"mat2", "tri2", "zorn", "product2"};
  return names;
}

namespace detail {

template <FieldScalar S>
Algebra<S> from_basis_product(const Field& f, std::size_t d, auto&& product) {
  std::vector<S> tensor(d * d * d, S::zero(f));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec<S> v = product(unit_vec<S>(f, d, i), unit_vec<S>(f, d, j));
      for (std::size_t k = 0; k < d; ++k) tensor[(i * d + j) * d + k] = v[k];
    }
  return Algebra<S>(f, d, std::move(tensor));
}

template <FieldScalar S>
Vec<S> coords(const Field& f, std::initializer_list<long long> xs) {
  Vec<S> v;
  for (auto x : xs) v.push_back(S::from_int(f, x));
  return v;
}

}  // namespace detail

/// 2x2 matrices, basis E11, E12, E21, E22; designated idempotent E11.
template <FieldScalar S>
Algebra<S> make_mat2(const Field& f) {
  // E_ab * E_cd = [b == c] E_ad with index(a,b) = 2a + b.
  std::vector<S> t(64, S::zero(f));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t d = 0; d < 2; ++d) t[((2 * a + b) * 4 + (2 * b + d)) * 4 + (2 * a + d)] = S::one(f);
  return Algebra<S>(f, 4, std::move(t), detail::coords<S>(f, {1, 0, 0, 1}), detail::coords<S>(f, {1, 0, 0, 0}));
}

/// Upper-triangular 2x2 matrices, basis E11, E12, E22; designated idempotent E11.
template <FieldScalar S>
Algebra<S> make_tri2(const Field& f) {
  Algebra<S> a(f, 3);
  const S one = S::one(f);
  a.set_coeff(0, 0, 0, one);  // E11 E11 = E11
  a.set_coeff(0, 1, 1, one);  // E11 E12 = E12
  a.set_coeff(1, 2, 1, one);  // E12 E22 = E12
  a.set_coeff(2, 2, 2, one);  // E22 E22 = E22
  a.set_unit(detail::coords<S>(f, {1, 0, 1}));
  a.set_idempotent(detail::coords<S>(f, {1, 0, 0}));
  return a;
}

/*
 * Zorn vector-matrix algebra with basis (e1, u1, u2, u3, v1, v2, v3, e2):
 * the element [[a, u], [v, b]] has coordinates (a, u, v, b), and
 *   [[a,u],[v,b]] [[a',u'],[v',b']] =
 *     [[aa' + u.v', au' + b'u - v x v'], [a'v + bv' + u x u', bb' + v.u']].
 * Designated idempotent e1, unit e1 + e2.
 */
template <FieldScalar S>
Vec<S> zorn_product(const Field& f, std::span<const S> x, std::span<const S> y) {
  using V3 = std::array<S, 3>;
  auto vec3 = [&](std::span<const S> z, std::size_t off) { return V3{z[off], z[off + 1], z[off + 2]}; };
  auto dot = [&](const V3& p, const V3& q) { return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]; };
  auto cross = [&](const V3& p, const V3& q) {
    return V3{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
  };
  const S a = x[0], b = x[7], a2 = y[0], b2 = y[7];
  const V3 u = vec3(x, 1), v = vec3(x, 4), u2 = vec3(y, 1), v2 = vec3(y, 4);
  const V3 vv = cross(v, v2), uu = cross(u, u2);
  Vec<S> out(8, S::zero(f));
  out[0] = a * a2 + dot(u, v2);
  for (std::size_t i = 0; i < 3; ++i) {
    out[1 + i] = a * u2[i] + b2 * u[i] - vv[i];
    out[4 + i] = a2 * v[i] + b * v2[i] + uu[i];
  }
  out[7] = b * b2 + dot(v, u2);
  return out;
}

template <FieldScalar S>
Algebra<S> make_zorn(const Field& f) {
  auto alg = detail::from_basis_product<S>(f, 8, [&](const Vec<S>& x, const Vec<S>& y) {
    return zorn_product<S>(f, x, y);
  });
  alg.set_unit(detail::coords<S>(f, {1, 0, 0, 0, 0, 0, 0, 1}));
  alg.set_idempotent(detail::coords<S>(f, {1, 0, 0, 0, 0, 0, 0, 0}));
  return alg;
}

/// F x F with component-wise product; designated idempotent (1, 0).
template <FieldScalar S>
Algebra<S> make_product2(const Field& f) {
  Algebra<S> a(f, 2);
  a.set_coeff(0, 0, 0, S::one(f));
  a.set_coeff(1, 1, 1, S::one(f));
  a.set_unit(detail::coords<S>(f, {1, 1}));
  a.set_idempotent(detail::coords<S>(f, {1, 0}));
  return a;
}

/*
 * Looks up a built-in algebra. The Zorn construction is checked for
 * alternativity right away so that a transcription error in the product
 * formula cannot go unnoticed.
 */
template <FieldScalar S>
Algebra<S> catalog(std::string_view name, const Field& f) {
  if (name == "mat2") return make_mat2<S>(f);
  if (name == "tri2") return make_tri2<S>(f);
  if (name == "product2") return make_product2<S>(f);
  if (name == "zorn") {
    auto z = make_zorn<S>(f);
    auto rep = classify_identities(z);
    if (rep.alternative == Status::fails)
      throw Error(Errc::semantic_error, "Zorn construction is not alternative: " + rep.alternative_witness->detail);
    return z;
  }
  throw Error(Errc::unknown_name, "no catalog algebra named '" + std::string(name) + "'");
}

/// A x B with component-wise multiplication.
template <FieldScalar S>
Algebra<S> direct_sum(const Algebra<S>& a, const Algebra<S>& b) {
  require_same_field(a.field(), b.field());
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  Algebra<S> out(a.field(), d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (const auto& t : a.terms(i, j)) out.set_coeff(i, j, t.k, t.c);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (const auto& t : b.terms(i, j)) out.set_coeff(da + i, da + j, da + t.k, t.c);
  auto concat = [&](const Vec<S>& x, const Vec<S>& y) {
    Vec<S> v = x;
    v.insert(v.end(), y.begin(), y.end());
    return v;
  };
  if (a.unit() && b.unit()) out.set_unit(concat(*a.unit(), *b.unit()));
  if (a.idempotent() && b.idempotent()) out.set_idempotent(concat(*a.idempotent(), *b.idempotent()));
  return out;
}

/// Same space with reversed multiplication: c'[i][j][k] = c[j][i][k].
template <FieldScalar S>
Algebra<S> opposite(const Algebra<S>& a) {
  const std::size_t d = a.dim();
  std::vector<S> t(d * d * d, S::zero(a.field()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) t[(i * d + j) * d + k] = a.coeff(j, i, k);
  return Algebra<S>(a.field(), d, std::move(t), a.unit(), a.idempotent());
}

}  // namespace altring

#endif  // ALTRING_CATALOG_HPP
