#ifndef ALTRING_IDENTITIES_HPP
#define ALTRING_IDENTITIES_HPP

#include <altring/algebra.hpp>
#include <altring/status.hpp>

#include <array>
#include <optional>
#include <string>
#include <type_traits>

namespace altring {

/// Default cap on p^d for checks that enumerate every element.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 16;

struct IdentityWitness {
  std::array<std::size_t, 3> basis{};  // 0-based basis indices (x, y, z)
  std::string detail;
};

struct IdentityReport {
  Status associative = Status::undecided;
  Status alternative = Status::undecided;
  Status flexible = Status::undecided;
  std::optional<IdentityWitness> associator_witness;
  std::optional<IdentityWitness> alternative_witness;
  std::optional<IdentityWitness> flexible_witness;
};

namespace detail {

// Checks a quadratic identity q(x, y) = 0 by running x over every element and
// y over the basis. Only reachable for finite fields.
template <FieldScalar S, class Identity>
Status enumerate_quadratic(const Algebra<S>& a, std::uint64_t cap, Identity&& identity,
                           std::optional<IdentityWitness>& witness) {
  if constexpr (std::is_same_v<S, ModP>) {
    auto count = element_count(a.field(), a.dim(), cap);
    if (!count) return Status::undecided;
    for (std::uint64_t idx = 0; idx < *count; ++idx) {
      auto x = element_from_index(a.field(), a.dim(), idx);
      for (std::size_t j = 0; j < a.dim(); ++j) {
        auto y = a.basis(j);
        auto r = identity(x, y);
        if (!is_zero_vec<S>(r)) {
          witness = IdentityWitness{{0, j, 0}, "x = (" + vec_to_string<S>(x) + "), y = e" + std::to_string(j + 1)};
          return Status::fails;
        }
      }
    }
    return Status::holds;
  } else {
    (void)a; (void)cap; (void)identity; (void)witness;
    return Status::undecided;
  }
}

}  // namespace detail

/*
 * Associativity is trilinear, so basis triples decide it. Alternativity and
 * flexibility are quadratic in x: outside characteristic 2 their linearized
 * forms are checked on basis triples (equivalent because 2 is invertible);
 * in characteristic 2 x runs over all p^d elements when p^d <= cap, and the
 * answer is undecided beyond that.
 */
template <FieldScalar S>
IdentityReport classify_identities(const Algebra<S>& a, std::uint64_t cap = kEnumerationCap) {
  IdentityReport rep;
  const std::size_t d = a.dim();
  std::vector<Vec<S>> e;
  for (std::size_t i = 0; i < d; ++i) e.push_back(a.basis(i));

  // Products of basis elements, reused by all three scans.
  std::vector<Vec<S>> prod(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i * d + j] = a.mul(e[i], e[j]);
  auto assoc = [&](std::size_t i, std::size_t j, std::size_t k) {
    return a.mul(prod[i * d + j], e[k]) - a.mul(e[i], prod[j * d + k]);
  };

  rep.associative = Status::holds;
  for (std::size_t i = 0; i < d && rep.associative == Status::holds; ++i)
    for (std::size_t j = 0; j < d && rep.associative == Status::holds; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto r = assoc(i, j, k);
        if (!is_zero_vec<S>(r)) {
          rep.associative = Status::fails;
          rep.associator_witness = IdentityWitness{{i, j, k}, "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                                                  ",e" + std::to_string(k + 1) + ") = (" +
                                                                  vec_to_string<S>(r) + ")"};
          break;
        }
      }
  if (rep.associative == Status::holds) {
    rep.alternative = rep.flexible = Status::holds;
    return rep;
  }

  const bool char2 = a.field().characteristic() == 2;
  if (!char2) {
    auto linearized = [&](auto&& expr, std::optional<IdentityWitness>& w, const char* name) {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            auto r = expr(i, j, k);
            if (!is_zero_vec<S>(r)) {
              w = IdentityWitness{{i, j, k}, std::string(name) + " at (e" + std::to_string(i + 1) + ",e" +
                                                 std::to_string(j + 1) + ",e" + std::to_string(k + 1) + ") = (" +
                                                 vec_to_string<S>(r) + ")"};
              return Status::fails;
            }
          }
      return Status::holds;
    };
    // x=e_i, z=e_j, y=e_k
    rep.alternative = linearized([&](auto i, auto j, auto k) { return assoc(i, j, k) + assoc(j, i, k); },
                                 rep.alternative_witness, "(x,z,y)+(z,x,y)");
    if (rep.alternative == Status::holds)
      rep.alternative = linearized([&](auto i, auto j, auto k) { return assoc(k, i, j) + assoc(k, j, i); },
                                   rep.alternative_witness, "(y,x,z)+(y,z,x)");
    rep.flexible = linearized([&](auto i, auto j, auto k) { return assoc(i, j, k) + assoc(k, j, i); },
                              rep.flexible_witness, "(x,y,z)+(z,y,x)");
  } else {
    rep.alternative = detail::enumerate_quadratic(
        a, cap,
        [&](const Vec<S>& x, const Vec<S>& y) {
          auto l = associator(a, x, x, y);
          return is_zero_vec<S>(l) ? associator(a, y, x, x) : l;
        },
        rep.alternative_witness);
    rep.flexible = detail::enumerate_quadratic(
        a, cap, [&](const Vec<S>& x, const Vec<S>& y) { return associator(a, x, y, x); }, rep.flexible_witness);
  }
  if (rep.alternative == Status::holds && rep.flexible == Status::undecided) rep.flexible = Status::holds;
  return rep;
}

/// {r : [r, x] = 0 for all x}, commutation only.
template <FieldScalar S>
Subspace<S> center(const Algebra<S>& a) {
  Matrix<S> m(a.field(), 0, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m.append_rows(right_commutation_operator(a, a.basis(i)));
  return kernel(m);
}

/// {r : (x,y,r) = (x,r,y) = (r,x,y) = 0 for all x, y}
template <FieldScalar S>
Subspace<S> nucleus(const Algebra<S>& a) {
  const std::size_t d = a.dim();
  const Field& f = a.field();
  Matrix<S> m(f, 0, d);
  std::vector<LinearMap<S>> left, right;
  for (std::size_t i = 0; i < d; ++i) {
    left.push_back(mul_operator(a, a.basis(i), Side::left));
    right.push_back(mul_operator(a, a.basis(i), Side::right));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto xy = a.mul(a.basis(i), a.basis(j));
      // (x,y,r) = (xy)r - x(yr)
      m.append_rows(mul_operator(a, xy, Side::left) - left[i] * left[j]);
      // (x,r,y) = (xr)y - x(ry)
      m.append_rows(right[j] * left[i] - left[i] * right[j]);
      // (r,x,y) = (rx)y - r(xy)
      m.append_rows(right[j] * right[i] - mul_operator(a, xy, Side::right));
    }
  return kernel(m);
}

/// The unit element if one exists (unique when it does).
template <FieldScalar S>
std::optional<Vec<S>> find_unit(const Algebra<S>& a) {
  const std::size_t d = a.dim();
  Matrix<S> m(a.field(), 0, d);
  Vec<S> rhs;
  for (std::size_t i = 0; i < d; ++i) {
    auto ei = a.basis(i);
    m.append_rows(mul_operator(a, ei, Side::right));  // u * e_i
    rhs.insert(rhs.end(), ei.begin(), ei.end());
    m.append_rows(mul_operator(a, ei, Side::left));   // e_i * u
    rhs.insert(rhs.end(), ei.begin(), ei.end());
  }
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  return sol->particular;
}

struct IdempotentInfo {
  bool idempotent = false;
  bool nontrivial = false;
};

template <FieldScalar S>
IdempotentInfo is_idempotent(const Algebra<S>& a, const Vec<S>& e) {
  a.check_element(e);
  IdempotentInfo info;
  info.idempotent = !is_zero_vec<S>(e) && a.mul(e, e) == e;
  if (!info.idempotent) return info;
  auto u = a.unit() ? a.unit() : find_unit(a);
  info.nontrivial = !u || !(*u == e);
  return info;
}

template <FieldScalar S>
struct IdempotentEntry {
  Vec<S> element;
  bool nontrivial = false;  // nonzero and not the unit
};

/// Every solution of e*e = e (zero included) over a finite field with p^d <= cap.
template <FieldScalar S>
std::vector<IdempotentEntry<S>> find_idempotents(const Algebra<S>& a, std::uint64_t cap = kEnumerationCap) {
  if constexpr (!std::is_same_v<S, ModP>) {
    (void)cap;
    throw Error(Errc::unsupported_field, "idempotent enumeration needs a finite field; use the designated idempotent");
  } else {
    auto count = element_count(a.field(), a.dim(), cap);
    if (!count) throw Error(Errc::budget_exceeded, "p^d exceeds enumeration cap " + std::to_string(cap));
    auto u = a.unit() ? a.unit() : find_unit(a);
    std::vector<IdempotentEntry<S>> out;
    for (std::uint64_t idx = 0; idx < *count; ++idx) {
      auto x = element_from_index(a.field(), a.dim(), idx);
      if (!(a.mul(x, x) == x)) continue;
      const bool nontrivial = !is_zero_vec<S>(x) && (!u || !(*u == x));
      out.push_back({std::move(x), nontrivial});
    }
    return out;
  }
}

/// kx = 0 implies x = 0; over a field this is char(F) not dividing k.
template <FieldScalar S>
bool torsion_free(const Algebra<S>& a, long long k) {
  if (k <= 0) throw Error(Errc::invalid_argument, "torsion order must be a positive integer, got " + std::to_string(k));
  const auto ch = a.field().characteristic();
  return ch == 0 || k % ch != 0;
}

}  // namespace altring

#endif  // ALTRING_IDENTITIES_HPP
