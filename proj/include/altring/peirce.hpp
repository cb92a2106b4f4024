#ifndef ALTRING_PEIRCE_HPP
#define ALTRING_PEIRCE_HPP

#include <altring/identities.hpp>

#include <array>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

namespace altring {

/// Peirce components, in the fixed order 11, 12, 21, 22.
enum class Block : std::size_t { b11 = 0, b12 = 1, b21 = 2, b22 = 3 };

inline constexpr std::array<Block, 4> kBlocks{Block::b11, Block::b12, Block::b21, Block::b22};

inline std::size_t idx(Block b) { return static_cast<std::size_t>(b); }
inline std::size_t row_of(Block b) { return idx(b) / 2 + 1; }
inline std::size_t col_of(Block b) { return idx(b) % 2 + 1; }
inline Block block_at(std::size_t i, std::size_t j) { return static_cast<Block>((i - 1) * 2 + (j - 1)); }
inline std::string block_name(Block b) { return "R" + std::to_string(row_of(b)) + std::to_string(col_of(b)); }

/*
 * Peirce decomposition relative to a nontrivial idempotent e1. The e2
 * actions are the operators a -> a - e1 a and a -> a - a e1, so no unit is
 * needed; pi_ij = (left e_i action) o (right e_j action).
 */
template <FieldScalar S>
class PeirceContext {
 public:
  const Algebra<S>& algebra() const { return alg_; }
  const Vec<S>& e1() const { return e1_; }
  const LinearMap<S>& projection(Block b) const { return proj_[idx(b)]; }
  const Subspace<S>& component(Block b) const { return comp_[idx(b)]; }
  std::vector<Vec<S>> component_basis(Block b) const { return comp_[idx(b)].basis_vectors(); }
  std::array<std::size_t, 4> dims() const {
    return {comp_[0].dim(), comp_[1].dim(), comp_[2].dim(), comp_[3].dim()};
  }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const Subspace<S>& center() const { return center_; }

  Vec<S> project(Block b, const Vec<S>& x) const { return proj_[idx(b)].apply(x); }
  /// e2 a = a - e1 a
  Vec<S> left_e2(const Vec<S>& x) const { return x - alg_.mul(e1_, x); }
  /// a e2 = a - a e1
  Vec<S> right_e2(const Vec<S>& x) const { return x - alg_.mul(x, e1_); }

  /// Columns are the component bases in block order; invertible for a valid context.
  const Matrix<S>& adapted_basis() const { return adapted_; }
  /// Block of the k-th adapted basis vector.
  Block adapted_block(std::size_t k) const { return adapted_blocks_[k]; }

  static PeirceContext create(const Algebra<S>& a, const Vec<S>& e1, bool check_alternative);

 private:
  explicit PeirceContext(const Algebra<S>& a) : alg_(a), center_(a.field(), a.dim()) {}

  Algebra<S> alg_;
  Vec<S> e1_;
  std::array<LinearMap<S>, 4> proj_;
  std::array<Subspace<S>, 4> comp_{Subspace<S>(alg_.field(), alg_.dim()), Subspace<S>(alg_.field(), alg_.dim()),
                                   Subspace<S>(alg_.field(), alg_.dim()), Subspace<S>(alg_.field(), alg_.dim())};
  Subspace<S> center_;
  Matrix<S> adapted_;
  std::vector<Block> adapted_blocks_;
  std::vector<std::string> warnings_;
};

template <FieldScalar S>
PeirceContext<S> PeirceContext<S>::create(const Algebra<S>& a, const Vec<S>& e1, bool check_alternative) {
  auto info = is_idempotent(a, e1);
  if (!info.idempotent) throw Error(Errc::not_idempotent, "(" + vec_to_string<S>(e1) + ") is not a nonzero idempotent");
  if (!info.nontrivial) throw Error(Errc::trivial_idempotent, "(" + vec_to_string<S>(e1) + ") is the unit");

  PeirceContext<S> ctx(a);
  ctx.e1_ = e1;
  if (check_alternative) {
    auto rep = classify_identities(a);
    if (rep.alternative == Status::fails)
      ctx.warnings_.push_back("algebra is not alternative: " + rep.alternative_witness->detail);
    else if (rep.alternative == Status::undecided)
      ctx.warnings_.push_back("alternativity undecided");
  } else {
    ctx.warnings_.push_back("alternativity not checked");
  }

  const Field& f = a.field();
  const std::size_t d = a.dim();
  const auto id = LinearMap<S>::identity(f, d);
  const auto l1 = mul_operator(a, e1, Side::left), r1 = mul_operator(a, e1, Side::right);
  const std::array<LinearMap<S>, 2> left{l1, id - l1}, right{r1, id - r1};

  // e_i a . e_j = e_i . a e_j
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!(left[i] * right[j] == right[j] * left[i]))
        throw Error(Errc::decomposition_failure, "e" + std::to_string(i + 1) + "a.e" + std::to_string(j + 1) +
                                                     " differs from e" + std::to_string(i + 1) + ".ae" +
                                                     std::to_string(j + 1));
  for (auto b : kBlocks) {
    ctx.proj_[idx(b)] = left[row_of(b) - 1] * right[col_of(b) - 1];
    ctx.comp_[idx(b)] = Subspace<S>::from_rows(ctx.proj_[idx(b)].transpose());  // column space
  }

  // pi_ij pi_kl = [ij == kl] pi_ij
  for (auto b : kBlocks)
    for (auto c : kBlocks) {
      auto prod = ctx.proj_[idx(b)] * ctx.proj_[idx(c)];
      bool ok = b == c ? prod == ctx.proj_[idx(b)] : prod.is_zero();
      if (!ok)
        throw Error(Errc::decomposition_failure, "projections " + block_name(b) + ", " + block_name(c) +
                                                     " are not orthogonal idempotents");
    }
  std::size_t total = 0;
  std::vector<Vec<S>> cols;
  for (auto b : kBlocks) {
    total += ctx.comp_[idx(b)].dim();
    for (auto& v : ctx.comp_[idx(b)].basis_vectors()) {
      cols.push_back(std::move(v));
      ctx.adapted_blocks_.push_back(b);
    }
  }
  if (total != d) throw Error(Errc::decomposition_failure, "component dimensions do not add up to " + std::to_string(d));
  ctx.adapted_ = Matrix<S>::from_columns(f, d, cols);
  if (rank(ctx.adapted_) != d) throw Error(Errc::decomposition_failure, "components are not independent");
  ctx.center_ = altring::center(a);
  return ctx;
}

/// Builds and validates the context; warns (does not fail) when alternativity is unverified.
template <FieldScalar S>
PeirceContext<S> peirce_context(const Algebra<S>& a, const Vec<S>& e1, bool check_alternative = true) {
  return PeirceContext<S>::create(a, e1, check_alternative);
}

/// Uses the algebra's designated idempotent.
template <FieldScalar S>
PeirceContext<S> peirce_context(const Algebra<S>& a) {
  if (!a.idempotent()) throw Error(Errc::invalid_argument, "algebra has no designated idempotent");
  return peirce_context(a, *a.idempotent());
}

struct RelationCheck {
  std::string name;  // "i", "ii", "iii", "iv"
  Status status = Status::holds;
  std::vector<std::string> violations;
};

struct PeirceRelationReport {
  std::array<RelationCheck, 4> relations{RelationCheck{"i", Status::holds, {}}, RelationCheck{"ii", Status::holds, {}},
                                         RelationCheck{"iii", Status::holds, {}}, RelationCheck{"iv", Status::holds, {}}};
  Status all() const {
    Status s = Status::holds;
    for (const auto& r : relations) s = s && r.status;
    return s;
  }
};

/*
 * (i)   R_ij R_jl in R_il
 * (ii)  R_ij R_ij in R_ji
 * (iii) R_ij R_kl = 0 for j != k, (i,j) != (k,l)
 * (iv)  x_ij^2 = 0 for i != j: polarized on basis pairs outside char 2,
 *       enumerated over the component in char 2.
 */
template <FieldScalar S>
PeirceRelationReport verify_peirce_relations(const PeirceContext<S>& ctx, std::uint64_t cap = kEnumerationCap) {
  const auto& a = ctx.algebra();
  PeirceRelationReport rep;
  auto note = [&](std::size_t which, std::string msg) {
    rep.relations[which].status = Status::fails;
    if (rep.relations[which].violations.size() < 8) rep.relations[which].violations.push_back(std::move(msg));
  };
  std::array<std::vector<Vec<S>>, 4> bases;
  for (auto b : kBlocks) bases[idx(b)] = ctx.component_basis(b);

  for (auto p : kBlocks)
    for (auto q : kBlocks) {
      const std::size_t i = row_of(p), j = col_of(p), k = row_of(q), l = col_of(q);
      for (std::size_t s = 0; s < bases[idx(p)].size(); ++s)
        for (std::size_t t = 0; t < bases[idx(q)].size(); ++t) {
          auto prod = a.mul(bases[idx(p)][s], bases[idx(q)][t]);
          const std::string where = block_name(p) + "[" + std::to_string(s) + "]*" + block_name(q) + "[" +
                                    std::to_string(t) + "] = (" + vec_to_string<S>(prod) + ")";
          if (j == k) {
            if (!ctx.component(block_at(i, l)).contains(prod)) note(0, where + " not in " + block_name(block_at(i, l)));
          } else if (p == q) {
            if (!ctx.component(block_at(j, i)).contains(prod)) note(1, where + " not in " + block_name(block_at(j, i)));
          } else if (!is_zero_vec<S>(prod)) {
            note(2, where + " is nonzero");
          }
        }
    }

  for (auto b : {Block::b12, Block::b21}) {
    const auto& basis = bases[idx(b)];
    if (a.field().characteristic() != 2) {
      for (std::size_t s = 0; s < basis.size(); ++s)
        for (std::size_t t = s; t < basis.size(); ++t) {
          auto pol = jordan(a, basis[s], basis[t]);
          if (!is_zero_vec<S>(pol))
            note(3, block_name(b) + "[" + std::to_string(s) + "] o " + block_name(b) + "[" + std::to_string(t) +
                        "] = (" + vec_to_string<S>(pol) + ")");
        }
    } else if constexpr (std::is_same_v<S, ModP>) {
      if (!element_count(a.field(), basis.size(), cap)) {
        if (rep.relations[3].status == Status::holds) rep.relations[3].status = Status::undecided;
        continue;
      }
      for (const auto& x : enumerate_span(a.field(), a.dim(), basis, cap)) {
        auto sq = a.mul(x, x);
        if (!is_zero_vec<S>(sq)) note(3, "(" + vec_to_string<S>(x) + ")^2 = (" + vec_to_string<S>(sq) + ")");
      }
    }
  }
  return rep;
}

/// Parametrizes elements of span(basis) by coefficient vectors: columns are basis vectors.
template <FieldScalar S>
Matrix<S> basis_columns(const Field& f, std::size_t ambient, const std::vector<Vec<S>>& basis) {
  return Matrix<S>::from_columns(f, ambient, basis);
}

/*
 * {x in span(domain) : x * b = 0 (or b * x = 0) for every b in `others`},
 * returned as a subspace of the ambient space.
 */
template <FieldScalar S>
Subspace<S> annihilator_in(const Algebra<S>& a, const std::vector<Vec<S>>& domain, const std::vector<Vec<S>>& others,
                           Side x_side) {
  const Field& f = a.field();
  if (domain.empty()) return Subspace<S>(f, a.dim());
  auto param = basis_columns(f, a.dim(), domain);
  Matrix<S> m(f, 0, domain.size());
  for (const auto& b : others) {
    // x * b = R_b x ; b * x = L_b x
    auto op = mul_operator(a, b, x_side == Side::left ? Side::right : Side::left);
    m.append_rows(op * param);
  }
  if (others.empty()) m = Matrix<S>(f, 0, domain.size());
  auto coeffs = kernel(m);
  std::vector<Vec<S>> vecs;
  for (const auto& c : coeffs.basis_vectors()) vecs.push_back(param.apply(c));
  return Subspace<S>::span(f, a.dim(), vecs);
}

template <FieldScalar S>
struct CommutantResult {
  Subspace<S> subspace;
  bool contained_in_center = false;
};

/// S = {a in R11 + R22 : [a, b] = 0 for all b in R12 (or R21)} and whether S is central.
template <FieldScalar S>
CommutantResult<S> check_offdiag_commutant(const PeirceContext<S>& ctx, Block side) {
  if (side != Block::b12 && side != Block::b21) throw Error(Errc::invalid_argument, "side must be 12 or 21");
  const auto& a = ctx.algebra();
  const Field& f = a.field();
  auto domain = ctx.component_basis(Block::b11);
  for (auto& v : ctx.component_basis(Block::b22)) domain.push_back(std::move(v));
  auto others = ctx.component_basis(side);
  if (domain.empty()) return {Subspace<S>(f, a.dim()), true};
  auto param = basis_columns(f, a.dim(), domain);
  Matrix<S> m(f, 0, domain.size());
  for (const auto& b : others) m.append_rows(right_commutation_operator(a, b) * param);
  auto coeffs = kernel(m);
  std::vector<Vec<S>> vecs;
  for (const auto& c : coeffs.basis_vectors()) vecs.push_back(param.apply(c));
  auto sub = Subspace<S>::span(f, a.dim(), vecs);
  const bool central = ctx.center().contains(sub);
  return {std::move(sub), central};
}

struct ConditionVerdict {
  std::string name;
  Status status = Status::undecided;
  std::string detail;
};

struct ConditionsReport {
  std::array<ConditionVerdict, 4> conditions;
  Status all() const {
    Status s = Status::holds;
    for (const auto& c : conditions) s = s && c.status;
    return s;
  }
};

/*
 * Conditions (1)-(3) are each "an annihilator subspace is zero" and are
 * decided exactly. Condition (4), z R = R for every nonzero central z, is
 * decided by enumerating Z over a finite field, by an invertibility test on
 * the single central basis element when dim Z = 1 over Q, refuted by a
 * singular central basis element, and undecided otherwise.
 */
template <FieldScalar S>
ConditionsReport check_conditions_1_to_4(const PeirceContext<S>& ctx, std::uint64_t cap = kEnumerationCap) {
  const auto& a = ctx.algebra();
  ConditionsReport rep;
  auto dimstr = [](const Subspace<S>& s) { return std::to_string(s.dim()); };
  auto B = [&](Block b) { return ctx.component_basis(b); };

  {
    auto& c = rep.conditions[0];
    c.name = "cond1";
    auto ann12 = annihilator_in(a, B(Block::b12), B(Block::b21), Side::left);
    auto ann21 = annihilator_in(a, B(Block::b21), B(Block::b12), Side::left);
    c.status = from_bool(ann12.is_zero() && ann21.is_zero());
    c.detail = ann12.is_zero() ? "" : "(i,j)=(1,2): dim{x12 : x12 R21 = 0} = " + dimstr(ann12);
    if (!ann21.is_zero())
      c.detail += (c.detail.empty() ? "" : "; ") + std::string("(i,j)=(2,1): dim{x21 : x21 R12 = 0} = ") + dimstr(ann21);
    if (c.detail.empty()) c.detail = "x_ij R_ji = 0 forces x_ij = 0";
  }
  {
    auto& c = rep.conditions[1];
    c.name = "cond2";
    auto l = annihilator_in(a, B(Block::b11), B(Block::b12), Side::left);   // x11 R12 = 0
    auto r = annihilator_in(a, B(Block::b11), B(Block::b21), Side::right);  // R21 x11 = 0
    c.status = from_bool(l.is_zero() && r.is_zero());
    c.detail = "dim{x11 R12 = 0} = " + dimstr(l) + ", dim{R21 x11 = 0} = " + dimstr(r);
  }
  {
    auto& c = rep.conditions[2];
    c.name = "cond3";
    auto l = annihilator_in(a, B(Block::b22), B(Block::b12), Side::right);  // R12 x22 = 0
    auto r = annihilator_in(a, B(Block::b22), B(Block::b21), Side::left);   // x22 R21 = 0
    c.status = from_bool(l.is_zero() && r.is_zero());
    c.detail = "dim{R12 x22 = 0} = " + dimstr(l) + ", dim{x22 R21 = 0} = " + dimstr(r);
  }
  {
    auto& c = rep.conditions[3];
    c.name = "cond4";
    const auto& z = ctx.center();
    const std::size_t d = a.dim();
    if (z.is_zero()) {
      c.status = Status::holds;
      c.detail = "Z(R) = 0, vacuous";
    } else if constexpr (std::is_same_v<S, ModP>) {
      if (!element_count(a.field(), z.dim(), cap)) {
        c.status = Status::undecided;
        c.detail = "|Z(R)| exceeds enumeration cap";
      } else {
        c.status = Status::holds;
        c.detail = "L_z invertible for all nonzero z in Z(R)";
        for (const auto& x : enumerate_span(a.field(), d, z.basis_vectors(), cap)) {
          if (is_zero_vec<S>(x)) continue;
          if (rank(mul_operator(a, x, Side::left)) != d) {
            c.status = Status::fails;
            c.detail = "zR != R for z = (" + vec_to_string<S>(x) + ")";
            break;
          }
        }
      }
    } else {
      const bool unital = a.unit() || find_unit(a);
      if (z.dim() == 1 && unital) {
        auto zb = z.basis().row_vec(0);
        const bool inv = rank(mul_operator(a, zb, Side::left)) == d;
        c.status = from_bool(inv);
        c.detail = "dim Z = 1, z = (" + vec_to_string<S>(zb) + "), det L_z " + (inv ? "!= 0" : "= 0");
      } else {
        c.status = Status::undecided;
        c.detail = "dim Z = " + std::to_string(z.dim()) + " over an infinite field";
        for (const auto& zb : z.basis_vectors())
          if (rank(mul_operator(a, zb, Side::left)) != d) {
            c.status = Status::fails;
            c.detail = "zR != R for z = (" + vec_to_string<S>(zb) + ")";
            break;
          }
      }
    }
  }
  return rep;
}

template <FieldScalar S>
struct PrimeVerdict {
  Status status = Status::undecided;
  std::optional<Vec<S>> witness_a;
  std::optional<Vec<S>> witness_b;
  std::uint64_t tested = 0;
  std::vector<std::string> warnings;
};

namespace detail {

// Rows of b -> ((a x) b) for every basis x: a d^2 x d matrix.
template <FieldScalar S>
Matrix<S> prime_test_matrix(const Algebra<S>& alg, const Vec<S>& a) {
  Matrix<S> m(alg.field(), 0, alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) m.append_rows(mul_operator(alg, alg.mul(a, alg.basis(i)), Side::left));
  return m;
}

// Prefer b = a when a itself lies in the kernel; otherwise the first kernel basis vector.
template <FieldScalar S>
Vec<S> pick_witness_b(const Subspace<S>& ker, const Vec<S>& a) {
  if (ker.contains(a)) return a;
  return ker.basis().row_vec(0);
}

}  // namespace detail

/*
 * Prime test through the criterion aR.b = 0 => a = 0 or b = 0. Over a
 * finite field with p^d <= cap, one a per scalar ray is checked exactly;
 * over Q, `samples` random a are tried and a clean run is undecided.
 */
template <FieldScalar S>
PrimeVerdict<S> is_prime(const Algebra<S>& a, std::uint64_t cap = std::uint64_t{1} << 20, std::uint64_t samples = 64,
                         std::uint64_t seed = 0) {
  PrimeVerdict<S> out;
  if (a.field().characteristic() == 3) out.warnings.push_back("characteristic 3: criterion equivalence not guaranteed");
  auto test = [&](const Vec<S>& x) {
    ++out.tested;
    auto ker = kernel(detail::prime_test_matrix(a, x));
    if (ker.is_zero()) return false;
    out.status = Status::fails;
    out.witness_a = x;
    out.witness_b = detail::pick_witness_b(ker, x);
    return true;
  };
  if constexpr (std::is_same_v<S, ModP>) {
    auto count = element_count(a.field(), a.dim(), cap);
    if (!count) throw Error(Errc::budget_exceeded, "p^d exceeds prime-test cap " + std::to_string(cap));
    for (std::uint64_t idx = 1; idx < *count; ++idx) {
      auto x = element_from_index(a.field(), a.dim(), idx);
      // one representative per ray: leading (highest-index) nonzero coordinate equals 1
      std::size_t lead = a.dim();
      while (lead-- > 0 && x[lead].is_zero()) {}
      if (!x[lead].is_one()) continue;
      if (test(x)) return out;
    }
    out.status = Status::holds;
  } else {
    (void)cap;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (test(a.basis(i))) return out;
    for (std::uint64_t s = 0; s < samples; ++s) {
      Vec<S> x;
      for (std::size_t i = 0; i < a.dim(); ++i) x.push_back(S::from_int(a.field(), coef(rng)));
      if (is_zero_vec<S>(x)) continue;
      if (test(x)) return out;
    }
    out.status = Status::undecided;
    out.warnings.push_back("no witness among sampled elements; primality over an infinite field is not decided");
  }
  return out;
}

}  // namespace altring

#endif  // ALTRING_PEIRCE_HPP
