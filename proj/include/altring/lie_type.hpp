#ifndef ALTRING_LIE_TYPE_HPP
#define ALTRING_LIE_TYPE_HPP

#include <altring/peirce.hpp>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace altring {

/// Left-nested iterated commutator p_n(x1..xn) = [p_{n-1}(x1..x_{n-1}), xn], p_1(x) = x.
template <FieldScalar S>
Vec<S> p_n(const Algebra<S>& a, std::span<const Vec<S>> xs) {
  if (xs.empty()) throw Error(Errc::invalid_argument, "p_n needs at least one argument");
  Vec<S> q = xs[0];
  a.check_element(q);
  for (std::size_t i = 1; i < xs.size(); ++i) q = commutator(a, q, xs[i]);
  return q;
}

template <FieldScalar S>
Vec<S> p_n(const Algebra<S>& a, const std::vector<Vec<S>>& xs) {
  return p_n(a, std::span<const Vec<S>>(xs));
}

/// D(p_n(x)) - sum_i p_n(x1, .., D(xi), .., xn) for an arbitrary map D.
template <FieldScalar S>
Vec<S> lie_n_residual(const Algebra<S>& a, const std::function<Vec<S>(const Vec<S>&)>& map,
                      std::span<const Vec<S>> xs) {
  auto out = map(p_n(a, xs));
  std::vector<Vec<S>> ys(xs.begin(), xs.end());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ys[i] = map(xs[i]);
    out = out - p_n(a, std::span<const Vec<S>>(ys));
    ys[i] = xs[i];
  }
  return out;
}

template <FieldScalar S>
Vec<S> lie_n_residual(const Algebra<S>& a, const LinearMap<S>& d, std::span<const Vec<S>> xs) {
  return lie_n_residual<S>(a, [&](const Vec<S>& x) { return d.apply(x); }, xs);
}

template <FieldScalar S>
Vec<S> lie_n_residual(const Algebra<S>& a, const LinearMap<S>& d, const std::vector<Vec<S>>& xs) {
  return lie_n_residual(a, d, std::span<const Vec<S>>(xs));
}

/// D(xy) - D(x) y - x D(y)
template <FieldScalar S>
Vec<S> leibniz_residual(const Algebra<S>& a, const LinearMap<S>& d, const Vec<S>& x, const Vec<S>& y) {
  return d.apply(a.mul(x, y)) - a.mul(d.apply(x), y) - a.mul(x, d.apply(y));
}

template <FieldScalar S>
bool is_derivation(const Algebra<S>& a, const LinearMap<S>& d) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_zero_vec<S>(leibniz_residual(a, d, a.basis(i), a.basis(j)))) return false;
  return true;
}

// Linear maps as vectors of length d^2: entry (row k, col l) sits at k*d + l.

template <FieldScalar S>
Vec<S> map_to_vec(const LinearMap<S>& m) {
  Vec<S> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k)
    for (std::size_t l = 0; l < m.cols(); ++l) v.push_back(m(k, l));
  return v;
}

template <FieldScalar S>
LinearMap<S> vec_to_map(const Field& f, std::size_t d, std::span<const S> v) {
  if (v.size() != d * d) throw Error(Errc::dimension_mismatch, "map vector length");
  LinearMap<S> m(f, d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) m(k, l) = v[k * d + l];
  return m;
}

template <FieldScalar S>
std::vector<LinearMap<S>> subspace_maps(const Subspace<S>& s, std::size_t d) {
  std::vector<LinearMap<S>> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(vec_to_map<S>(s.field(), d, s.basis().row(i)));
  return out;
}

/// Solution space of the Leibniz constraints on all basis pairs, as vectors of length d^2.
template <FieldScalar S>
Subspace<S> derivation_space(const Algebra<S>& a) {
  const std::size_t d = a.dim(), n = d * d;
  const Field& f = a.field();
  RowReducer<S> red(f, n);
  for (std::size_t i = 0; i < d && !red.full(); ++i)
    for (std::size_t j = 0; j < d && !red.full(); ++j) {
      std::vector<Vec<S>> rows(d, zero_vec<S>(f, n));
      // D(e_i e_j): coordinate m picks up c_ij^l D[m][l]
      for (const auto& t : a.terms(i, j))
        for (std::size_t m = 0; m < d; ++m) rows[m][m * d + t.k] += t.c;
      // - D(e_i) e_j = - sum_k D[k][i] e_k e_j
      for (std::size_t k = 0; k < d; ++k)
        for (const auto& t : a.terms(k, j)) rows[t.k][k * d + i] -= t.c;
      // - e_i D(e_j) = - sum_k D[k][j] e_i e_k
      for (std::size_t k = 0; k < d; ++k)
        for (const auto& t : a.terms(i, k)) rows[t.k][k * d + j] -= t.c;
      for (auto& r : rows) red.add(std::move(r));
    }
  return kernel(red);
}

struct LieOptions {
  std::size_t n_max = 5;
  std::uint64_t row_budget = 1'000'000;  // bound on d^n * d constraint rows
};

template <FieldScalar S>
struct LieNDerivationSpace {
  std::size_t n = 2;
  Subspace<S> space;
  std::vector<LinearMap<S>> maps(std::size_t d) const { return subspace_maps(space, d); }
};

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

template <FieldScalar S>
struct LieConstraintWalker {
  const Algebra<S>& a;
  std::size_t n;
  std::size_t d;
  std::size_t unknowns;
  std::vector<LinearMap<S>> right_comm;  // x -> [x, e_j]
  RowReducer<S>& red;

  // q = p_m(prefix); jac * vec(D) = sum_i p_m(.., D(x_i), ..)
  void walk(std::size_t depth, const Vec<S>& q, const Matrix<S>& jac) {
    if (red.full()) return;
    if (depth == n) {
      for (std::size_t t = 0; t < d; ++t) {
        Vec<S> row(unknowns, S::zero(a.field()));
        for (std::size_t l = 0; l < d; ++l) row[t * d + l] = q[l];
        for (std::size_t c = 0; c < unknowns; ++c) row[c] -= jac(t, c);
        red.add(std::move(row));
      }
      return;
    }
    for (std::size_t j = 0; j < d && !red.full(); ++j) {
      auto q2 = right_comm[j].apply(q);
      auto jac2 = right_comm[j] * jac;
      // [q, D(e_j)] = sum_k D[k][j] [q, e_k]
      for (std::size_t k = 0; k < d; ++k) {
        auto qk = right_comm[k].apply(q);
        for (std::size_t t = 0; t < d; ++t)
          if (!qk[t].is_zero()) jac2(t, k * d + j) += qk[t];
      }
      walk(depth + 1, q2, jac2);
    }
  }
};

}  // namespace detail

/*
 * Linear maps D with D(p_n(x)) = sum_i p_n(.., D(x_i), ..). Both sides are
 * multilinear in the tuple when D is linear, so basis tuples suffice. The
 * constraints are generated depth-first so that every prefix p_m and its
 * derivative in D are computed once, then streamed into the eliminator.
 */
template <FieldScalar S>
LieNDerivationSpace<S> lie_n_derivation_space(const Algebra<S>& a, std::size_t n, const LieOptions& opt = {}) {
  if (n < 2 || n > opt.n_max)
    throw Error(Errc::invalid_argument, "n = " + std::to_string(n) + " outside [2, " + std::to_string(opt.n_max) + "]");
  const std::size_t d = a.dim(), unknowns = d * d;
  const auto rows = detail::checked_power(d, n + 1, opt.row_budget);
  if (rows > opt.row_budget)
    throw Error(Errc::budget_exceeded, "d^(n+1) constraint rows exceed budget " + std::to_string(opt.row_budget));
  const Field& f = a.field();
  RowReducer<S> red(f, unknowns);
  detail::LieConstraintWalker<S> walker{a, n, d, unknowns, {}, red};
  for (std::size_t j = 0; j < d; ++j) walker.right_comm.push_back(right_commutation_operator(a, a.basis(j)));
  for (std::size_t j = 0; j < d && !red.full(); ++j) {
    Matrix<S> jac(f, d, unknowns);
    for (std::size_t t = 0; t < d; ++t) jac(t, t * d + j) = S::one(f);
    walker.walk(1, a.basis(j), jac);
  }
  return {n, kernel(red)};
}

/// Visits every basis tuple (as index vectors) in lexicographic order.
inline void for_each_basis_tuple(std::size_t d, std::size_t n, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> t(n, 0);
  while (true) {
    if (!fn(t)) return;
    std::size_t pos = n;
    while (pos-- > 0) {
      if (++t[pos] < d) break;
      t[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) return;
  }
}

/// Direct check of the identity at every basis tuple (independent of the solver).
template <FieldScalar S>
bool is_lie_n_derivation(const Algebra<S>& a, const LinearMap<S>& d, std::size_t n, std::uint64_t budget = 1'000'000) {
  if (detail::checked_power(a.dim(), n, budget) > budget)
    throw Error(Errc::budget_exceeded, "d^n basis tuples exceed budget " + std::to_string(budget));
  bool ok = true;
  std::vector<Vec<S>> xs(n);
  for_each_basis_tuple(a.dim(), n, [&](const std::vector<std::size_t>& t) {
    for (std::size_t i = 0; i < n; ++i) xs[i] = a.basis(t[i]);
    ok = is_zero_vec<S>(lie_n_residual(a, d, xs));
    return ok;
  });
  return ok;
}

/// W = span{p_n(e_{j1}, .., e_{jn})}.
template <FieldScalar S>
Subspace<S> pn_span(const Algebra<S>& a, std::size_t n, std::uint64_t budget = 1'000'000) {
  if (n == 0) throw Error(Errc::invalid_argument, "n must be positive");
  if (detail::checked_power(a.dim(), n, budget) > budget)
    throw Error(Errc::budget_exceeded, "d^n basis tuples exceed budget " + std::to_string(budget));
  RowReducer<S> red(a.field(), a.dim());
  std::vector<LinearMap<S>> rc;
  for (std::size_t j = 0; j < a.dim(); ++j) rc.push_back(right_commutation_operator(a, a.basis(j)));
  std::function<void(std::size_t, const Vec<S>&)> walk = [&](std::size_t depth, const Vec<S>& q) {
    if (red.full()) return;
    if (depth == n) { red.add(q); return; }
    for (std::size_t j = 0; j < a.dim(); ++j) walk(depth + 1, rc[j].apply(q));
  };
  for (std::size_t j = 0; j < a.dim(); ++j) walk(1, a.basis(j));
  return Subspace<S>::from_reducer(red);
}

/// f_{y,z} = [L_y, L_z] + [L_y, R_z] + [R_y, R_z]
template <FieldScalar S>
LinearMap<S> standard_inner_derivation(const Algebra<S>& a, const Vec<S>& y, const Vec<S>& z) {
  const auto ly = mul_operator(a, y, Side::left), lz = mul_operator(a, z, Side::left);
  const auto ry = mul_operator(a, y, Side::right), rz = mul_operator(a, z, Side::right);
  return operator_commutator(ly, lz) + operator_commutator(ly, rz) + operator_commutator(ry, rz);
}

struct AbcCheck {
  std::string name;  // "a", "b", "c"
  bool holds = true;
  std::string detail;
};

struct AbcReport {
  std::array<AbcCheck, 3> checks{AbcCheck{"a", true, {}}, AbcCheck{"b", true, {}}, AbcCheck{"c", true, {}}};
  bool all() const { return checks[0].holds && checks[1].holds && checks[2].holds; }
  const AbcCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.holds) return &c;
    return nullptr;
  }
};

/// {z e2 : z in Z(R)} (or {z e1}) as a subspace.
template <FieldScalar S>
Subspace<S> central_times(const PeirceContext<S>& ctx, std::size_t which) {
  std::vector<Vec<S>> vs;
  for (const auto& z : ctx.center().basis_vectors())
    vs.push_back(which == 2 ? ctx.right_e2(z) : ctx.algebra().mul(z, ctx.e1()));
  return Subspace<S>::span(ctx.algebra().field(), ctx.algebra().dim(), vs);
}

/*
 * (a) e2 D(R11) e2 in Z(R) e2
 * (b) e1 D(R22) e1 in Z(R) e1
 * (c) D(R_ij) in R_ij for i != j
 * All three are linear in D and checked on component bases.
 */
template <FieldScalar S>
AbcReport check_conditions_abc(const PeirceContext<S>& ctx, const LinearMap<S>& d) {
  AbcReport rep;
  const auto z_e2 = central_times(ctx, 2), z_e1 = central_times(ctx, 1);
  for (const auto& x : ctx.component_basis(Block::b11)) {
    auto v = ctx.project(Block::b22, d.apply(x));
    if (!z_e2.contains(v)) {
      rep.checks[0] = {"a", false, "e2 D(" + vec_to_string<S>(x) + ") e2 = (" + vec_to_string<S>(v) + ") not in Z(R)e2"};
      break;
    }
  }
  for (const auto& x : ctx.component_basis(Block::b22)) {
    auto v = ctx.project(Block::b11, d.apply(x));
    if (!z_e1.contains(v)) {
      rep.checks[1] = {"b", false, "e1 D(" + vec_to_string<S>(x) + ") e1 = (" + vec_to_string<S>(v) + ") not in Z(R)e1"};
      break;
    }
  }
  for (auto b : {Block::b12, Block::b21}) {
    if (!rep.checks[2].holds) break;
    for (const auto& x : ctx.component_basis(b)) {
      auto v = d.apply(x);
      if (!ctx.component(b).contains(v)) {
        rep.checks[2] = {"c", false, "D(" + vec_to_string<S>(x) + ") = (" + vec_to_string<S>(v) + ") not in " + block_name(b)};
        break;
      }
    }
  }
  return rep;
}

/// Members of `space` (vectors of length d^2) that satisfy (a), (b) and (c).
template <FieldScalar S>
Subspace<S> abc_subspace(const PeirceContext<S>& ctx, const Subspace<S>& space) {
  const auto& a = ctx.algebra();
  const Field& f = a.field();
  const std::size_t d = a.dim();
  const auto maps = subspace_maps(space, d);
  if (maps.empty()) return space;
  // membership x in V  <=>  M x = 0 with rows of M spanning ann(V)
  auto membership = [&](const Subspace<S>& v) { return annihilator(v).basis(); };
  std::vector<std::pair<Matrix<S>, Vec<S>>> tests;  // (M * projection, basis vector)
  const auto ma = membership(central_times(ctx, 2)) * ctx.projection(Block::b22);
  const auto mb = membership(central_times(ctx, 1)) * ctx.projection(Block::b11);
  for (const auto& x : ctx.component_basis(Block::b11)) tests.emplace_back(ma, x);
  for (const auto& x : ctx.component_basis(Block::b22)) tests.emplace_back(mb, x);
  for (auto b : {Block::b12, Block::b21}) {
    const auto mc = membership(ctx.component(b));
    for (const auto& x : ctx.component_basis(b)) tests.emplace_back(mc, x);
  }
  Matrix<S> cons(f, 0, maps.size());
  for (const auto& [m, x] : tests) {
    std::vector<Vec<S>> cols;
    for (const auto& dm : maps) cols.push_back(m.apply(dm.apply(x)));
    if (m.rows() == 0) continue;
    cons.append_rows(Matrix<S>::from_columns(f, m.rows(), cols));
  }
  auto coeffs = kernel(cons);
  std::vector<Vec<S>> out;
  for (const auto& c : coeffs.basis_vectors()) {
    auto v = zero_vec<S>(f, d * d);
    for (std::size_t s = 0; s < maps.size(); ++s) axpy<S>(std::span<S>(v), c[s], space.basis().row(s));
    out.push_back(std::move(v));
  }
  return Subspace<S>::span(f, d * d, out);
}

template <FieldScalar S>
struct Normalization {
  LinearMap<S> normalized;  // D' = D - f
  LinearMap<S> f;           // f_{y, e1}
  Vec<S> y;
  bool e1_central = false;
  std::optional<bool> e2_central;  // D'(u - e1 u) central; only with a unit
};

/*
 * y = pi12(D e1) + pi21(D e1), f = f_{y, e1}, D' = D - f. Certifies that
 * D'(e1) is central and, for unital algebras, that D'(u - e1 u) is too.
 */
template <FieldScalar S>
Normalization<S> normalize_at_idempotent(const PeirceContext<S>& ctx, const LinearMap<S>& d) {
  const auto& a = ctx.algebra();
  const auto& e1 = ctx.e1();
  auto de1 = d.apply(e1);
  Normalization<S> out;
  out.y = ctx.project(Block::b12, de1) + ctx.project(Block::b21, de1);
  out.f = standard_inner_derivation(a, out.y, e1);
  out.normalized = d - out.f;
  auto n_e1 = out.normalized.apply(e1);
  out.e1_central = ctx.center().contains(n_e1);
  if (!out.e1_central)
    throw Error(Errc::certification_failure, "D'(e1) = (" + vec_to_string<S>(n_e1) + ") is not central");
  auto u = a.unit() ? a.unit() : find_unit(a);
  if (u) out.e2_central = ctx.center().contains(out.normalized.apply(ctx.left_e2(*u)));
  return out;
}

template <FieldScalar S>
struct Decomposition {
  LinearMap<S> delta;
  LinearMap<S> tau;
  LinearMap<S> normalizer;  // the f_{y, e1} absorbed into delta
  bool leibniz_ok = false;
  bool tau_central_ok = false;
  bool tau_kills_pn_ok = false;
  bool conditions_abc_ok = false;
};

/// Failure of decompose, naming the certificate that did not hold.
class DecompositionError : public Error {
 public:
  DecompositionError(Errc code, std::string certificate, const std::string& what)
      : Error(code, certificate + ": " + what), certificate_(std::move(certificate)) {}
  const std::string& certificate() const noexcept { return certificate_; }

 private:
  std::string certificate_;
};

/*
 * D = delta + tau with delta a derivation and tau central-valued,
 * vanishing on span{p_n(basis tuples)}:
 *   1. normalize D at e1 so that D'(e1) is central;
 *   2. off-diagonal basis a_ij: delta'(a_ij) = D'(a_ij), tau(a_ij) = 0;
 *   3. diagonal basis a_11: the unique central z with z e2 = pi22(D' a_11)
 *      gives delta'(a_11) = pi11(D' a_11) - z e1, tau(a_11) = z (and
 *      symmetrically for a_22);
 *   4. delta = f + delta'.
 */
template <FieldScalar S>
Decomposition<S> decompose(const PeirceContext<S>& ctx, const LinearMap<S>& d, std::size_t n,
                           const LieOptions& opt = {}) {
  const auto& a = ctx.algebra();
  const Field& f = a.field();
  const std::size_t dim = a.dim();
  if (d.rows() != dim || d.cols() != dim) throw Error(Errc::dimension_mismatch, "map does not match the algebra");

  if (!is_lie_n_derivation(a, d, n, opt.row_budget))
    throw DecompositionError(Errc::condition_violated, "lie_n_membership",
                             "D is not a Lie " + std::to_string(n) + "-derivation");
  auto abc = check_conditions_abc(ctx, d);
  if (auto* bad = abc.first_failure())
    throw DecompositionError(Errc::condition_violated, "conditions_abc:" + bad->name, bad->detail);

  auto norm = normalize_at_idempotent(ctx, d);
  const auto& dn = norm.normalized;
  auto abc_n = check_conditions_abc(ctx, dn);
  if (auto* bad = abc_n.first_failure())
    throw DecompositionError(Errc::condition_violated, "conditions_abc(normalized):" + bad->name, bad->detail);

  const auto zbasis = ctx.center().basis_vectors();
  auto central_solve = [&](const Vec<S>& target, bool times_e2) {
    std::vector<Vec<S>> cols;
    for (const auto& z : zbasis) cols.push_back(times_e2 ? ctx.right_e2(z) : a.mul(z, ctx.e1()));
    if (cols.empty()) {
      if (!is_zero_vec<S>(target))
        throw DecompositionError(Errc::no_central_solution, "central_solution", "Z(R) = 0 but target is nonzero");
      return a.zero();
    }
    auto sol = solve(Matrix<S>::from_columns(f, dim, cols), target);
    if (!sol)
      throw DecompositionError(Errc::no_central_solution, "central_solution",
                               "no z in Z(R) with z e" + std::string(times_e2 ? "2" : "1") + " = (" +
                                   vec_to_string<S>(target) + ")");
    if (!sol->kernel.is_zero())
      throw DecompositionError(Errc::non_unique_z, "central_solution", "z is not unique (degenerate center)");
    auto z = a.zero();
    for (std::size_t s = 0; s < zbasis.size(); ++s) axpy<S>(std::span<S>(z), sol->particular[s], zbasis[s]);
    return z;
  };

  const auto& basis = ctx.adapted_basis();
  std::vector<Vec<S>> delta_cols, tau_cols;
  for (std::size_t k = 0; k < dim; ++k) {
    const auto x = basis.col_vec(k);
    const auto v = dn.apply(x);
    const Block b = ctx.adapted_block(k);
    if (b == Block::b12 || b == Block::b21) {
      delta_cols.push_back(v);
      tau_cols.push_back(a.zero());
      continue;
    }
    if (!is_zero_vec<S>(ctx.project(Block::b12, v)) || !is_zero_vec<S>(ctx.project(Block::b21, v)))
      throw DecompositionError(Errc::no_central_solution, "central_solution",
                               "D'(" + vec_to_string<S>(x) + ") has off-diagonal components");
    if (b == Block::b11) {
      auto z = central_solve(ctx.project(Block::b22, v), true);
      delta_cols.push_back(ctx.project(Block::b11, v) - a.mul(z, ctx.e1()));
      tau_cols.push_back(z);
    } else {
      auto z = central_solve(ctx.project(Block::b11, v), false);
      delta_cols.push_back(ctx.project(Block::b22, v) - ctx.right_e2(z));
      tau_cols.push_back(z);
    }
  }
  auto pinv = inverse(basis);
  if (!pinv) throw Error(Errc::decomposition_failure, "adapted basis is singular");
  const auto delta_prime = Matrix<S>::from_columns(f, dim, delta_cols) * *pinv;

  Decomposition<S> out;
  out.normalizer = norm.f;
  out.delta = norm.f + delta_prime;
  out.tau = dn - delta_prime;
  if (!(out.delta + out.tau == d)) throw Error(Errc::decomposition_failure, "delta + tau != D");

  out.conditions_abc_ok = true;
  out.leibniz_ok = is_derivation(a, out.delta);
  if (!out.leibniz_ok) throw DecompositionError(Errc::leibniz_failure, "leibniz", "delta violates the Leibniz rule");
  out.tau_central_ok = true;
  for (std::size_t i = 0; i < dim && out.tau_central_ok; ++i)
    out.tau_central_ok = ctx.center().contains(out.tau.apply(a.basis(i)));
  if (!out.tau_central_ok)
    throw DecompositionError(Errc::certification_failure, "tau_central", "tau takes a non-central value");
  out.tau_kills_pn_ok = true;
  for (const auto& w : pn_span(a, n, opt.row_budget).basis_vectors())
    if (!is_zero_vec<S>(out.tau.apply(w))) out.tau_kills_pn_ok = false;
  if (!out.tau_kills_pn_ok)
    throw DecompositionError(Errc::certification_failure, "tau_kills_pn", "tau does not vanish on p_n values");
  return out;
}

/// LieDer_n subset of LieDer_{n + k(n-1)}.
template <FieldScalar S>
bool fosner_inclusion(const Algebra<S>& a, std::size_t n, std::size_t k, const LieOptions& opt = {}) {
  if (k == 0) return true;
  const std::size_t m = n + k * (n - 1);
  LieOptions wide = opt;
  wide.n_max = std::max(opt.n_max, m);
  auto lower = lie_n_derivation_space(a, n, wide);
  auto upper = lie_n_derivation_space(a, m, wide);
  return upper.space.contains(lower.space);
}

}  // namespace altring

#endif  // ALTRING_LIE_TYPE_HPP
