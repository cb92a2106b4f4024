#ifndef ALTRING_FINITE_SEARCH_HPP
#define ALTRING_FINITE_SEARCH_HPP

#include <altring/lie_type.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace altring {

/// Default bound on evaluation counts (tuples, pairs) for exhaustive scans.
inline constexpr std::uint64_t kScanBudget = 10'000'000;

/*
 * A finite algebra over GF(p) flattened to element indices, with addition,
 * multiplication and commutator tables. Element i is element_from_index(i).
 */
class FiniteRing {
 public:
  using Index = std::uint32_t;

  explicit FiniteRing(const Algebra<ModP>& a, std::uint64_t cap = 1024) : alg_(a) {
    auto count = element_count(a.field(), a.dim(), cap);
    if (!count) throw Error(Errc::budget_exceeded, "ring has more than " + std::to_string(cap) + " elements");
    n_ = static_cast<Index>(*count);
    for (Index i = 0; i < n_; ++i) elems_.push_back(element_from_index(a.field(), a.dim(), i));
    add_.resize(std::size_t{n_} * n_);
    mul_.resize(std::size_t{n_} * n_);
    comm_.resize(std::size_t{n_} * n_);
    neg_.resize(n_);
    for (Index x = 0; x < n_; ++x) {
      neg_[x] = index(a.zero() - elems_[x]);
      for (Index y = 0; y < n_; ++y) {
        add_[pos(x, y)] = index(elems_[x] + elems_[y]);
        mul_[pos(x, y)] = index(a.mul(elems_[x], elems_[y]));
      }
    }
    for (Index x = 0; x < n_; ++x)
      for (Index y = 0; y < n_; ++y) comm_[pos(x, y)] = sub(mul_[pos(x, y)], mul_[pos(y, x)]);
    central_.assign(n_, false);
    for (const auto& z : enumerate_span(a.field(), a.dim(), center(a).basis_vectors(), cap)) central_[index(z)] = true;
  }

  const Algebra<ModP>& algebra() const { return alg_; }
  Index size() const { return n_; }
  const Vec<ModP>& element(Index i) const { return elems_[i]; }
  Index index(const Vec<ModP>& v) const { return static_cast<Index>(index_of_element(std::span<const ModP>(v))); }

  Index add(Index x, Index y) const { return add_[pos(x, y)]; }
  Index sub(Index x, Index y) const { return add_[pos(x, neg_[y])]; }
  Index neg(Index x) const { return neg_[x]; }
  Index mul(Index x, Index y) const { return mul_[pos(x, y)]; }
  Index comm(Index x, Index y) const { return comm_[pos(x, y)]; }
  bool central(Index x) const { return central_[x]; }

  std::string label(Index i) const { return vec_to_string<ModP>(elems_[i]); }

 private:
  std::size_t pos(Index x, Index y) const { return std::size_t{x} * n_ + y; }

  Algebra<ModP> alg_;
  Index n_ = 0;
  std::vector<Vec<ModP>> elems_;
  std::vector<Index> add_, mul_, comm_, neg_;
  std::vector<bool> central_;
};

/// A total, not necessarily additive, map R -> R by element index.
struct MapTable {
  std::vector<FiniteRing::Index> values;

  FiniteRing::Index operator[](FiniteRing::Index x) const { return values[x]; }
  friend bool operator==(const MapTable&, const MapTable&) = default;
};

inline MapTable table_of(const FiniteRing& r, const LinearMap<ModP>& d) {
  MapTable t;
  t.values.reserve(r.size());
  for (FiniteRing::Index x = 0; x < r.size(); ++x) t.values.push_back(r.index(d.apply(r.element(x))));
  return t;
}

inline MapTable identity_table(const FiniteRing& r) {
  MapTable t;
  for (FiniteRing::Index x = 0; x < r.size(); ++x) t.values.push_back(x);
  return t;
}

inline void check_table(const FiniteRing& r, const MapTable& t) {
  if (t.values.size() != r.size())
    throw Error(Errc::dimension_mismatch, "map table has " + std::to_string(t.values.size()) + " entries, ring has " +
                                              std::to_string(r.size()) + " elements");
  for (auto v : t.values)
    if (v >= r.size()) throw Error(Errc::invalid_argument, "map table value out of range");
}

/// Left-nested commutator on element indices.
inline FiniteRing::Index p_n(const FiniteRing& r, std::span<const FiniteRing::Index> xs) {
  if (xs.empty()) throw Error(Errc::invalid_argument, "p_n needs at least one argument");
  auto q = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) q = r.comm(q, xs[i]);
  return q;
}

/// T(p_n(x)) - sum_i p_n(.., T(x_i), ..)
inline FiniteRing::Index lie_n_residual(const FiniteRing& r, const MapTable& t, std::span<const FiniteRing::Index> xs) {
  std::vector<FiniteRing::Index> ys(xs.begin(), xs.end());
  auto res = t[p_n(r, xs)];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ys[i] = t[xs[i]];
    res = r.sub(res, p_n(r, std::span<const FiniteRing::Index>(ys)));
    ys[i] = xs[i];
  }
  return res;
}

struct ScanOptions {
  std::uint64_t budget = kScanBudget;
  std::uint64_t samples = 0;  // > 0 permits sampling when the budget binds
  std::uint64_t seed = 0;
};

struct LieIdentityCheck {
  Status status = Status::undecided;  // undecided: sampled run without a violation
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::optional<std::vector<FiniteRing::Index>> witness;
  std::optional<FiniteRing::Index> residual;
};

/*
 * Checks the Lie n-derivation identity at every tuple of ring elements
 * (T is not linear, so basis tuples are not enough). Tuples run in
 * lexicographic index order, carrying q = p_m(prefix) and
 * s = sum_i p_m(.., T(x_i), ..); both extend by one commutator per step
 * because the commutator is biadditive.
 */
inline LieIdentityCheck verify_lie_n_identity(const FiniteRing& r, const MapTable& t, std::size_t n,
                                              const ScanOptions& opt = {}) {
  check_table(r, t);
  if (n < 1) throw Error(Errc::invalid_argument, "n must be positive");
  using Index = FiniteRing::Index;
  LieIdentityCheck out;
  const auto total = detail::checked_power(r.size(), n, opt.budget);
  std::vector<Index> tuple(n);
  auto fail = [&](Index residual) {
    out.status = Status::fails;
    out.witness = tuple;
    out.residual = residual;
  };
  if (total <= opt.budget) {
    out.exhaustive = true;
    std::function<bool(std::size_t, Index, Index)> walk = [&](std::size_t depth, Index q, Index s) {
      if (depth == n) {
        ++out.checked;
        const Index res = r.sub(t[q], s);
        if (res != 0) { fail(res); return false; }
        return true;
      }
      for (Index x = 0; x < r.size(); ++x) {
        tuple[depth] = x;
        const bool ok = depth == 0 ? walk(1, x, t[x])
                                   : walk(depth + 1, r.comm(q, x), r.add(r.comm(s, x), r.comm(q, t[x])));
        if (!ok) return false;
      }
      return true;
    };
    out.status = walk(0, 0, 0) ? Status::holds : Status::fails;
    return out;
  }
  if (opt.samples == 0)
    throw Error(Errc::budget_exceeded, "|R|^n = " + std::to_string(r.size()) + "^" + std::to_string(n) +
                                           " tuples exceed budget " + std::to_string(opt.budget));
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Index> pick(0, r.size() - 1);
  for (std::uint64_t s = 0; s < opt.samples; ++s) {
    for (auto& x : tuple) x = pick(rng);
    ++out.checked;
    const Index res = lie_n_residual(r, t, std::span<const Index>(tuple));
    if (res != 0) { fail(res); return out; }
  }
  out.status = Status::undecided;
  return out;
}

struct AdditivityReport {
  Status all_central = Status::holds;
  bool additive = true;  // every defect is exactly zero
  std::uint64_t pairs = 0;
  std::optional<std::array<FiniteRing::Index, 3>> witness;  // (a, b, defect), defect not central
  std::optional<std::array<FiniteRing::Index, 3>> first_defect;  // first nonzero defect
};

/// Scans T(a+b) - T(a) - T(b) over all pairs for membership in Z(R).
inline AdditivityReport almost_additivity_defect(const FiniteRing& r, const MapTable& t, std::uint64_t budget = kScanBudget) {
  check_table(r, t);
  using Index = FiniteRing::Index;
  if (std::uint64_t{r.size()} * r.size() > budget)
    throw Error(Errc::budget_exceeded, "|R|^2 pairs exceed budget " + std::to_string(budget));
  AdditivityReport out;
  for (Index a = 0; a < r.size(); ++a)
    for (Index b = 0; b < r.size(); ++b) {
      ++out.pairs;
      const Index defect = r.sub(r.sub(t[r.add(a, b)], t[a]), t[b]);
      if (defect == 0) continue;
      out.additive = false;
      if (!out.first_defect) out.first_defect = {a, b, defect};
      if (!r.central(defect)) {
        out.all_central = Status::fails;
        out.witness = {a, b, defect};
        return out;
      }
    }
  return out;
}

/// The value set {p_n(x1..xn)}, built as S_1 = R, S_{m+1} = {[s, x] : s in S_m}.
inline std::vector<bool> pn_value_set(const FiniteRing& r, std::size_t n) {
  if (n < 1 || n > 4) throw Error(Errc::invalid_argument, "n must lie in [1, 4] for value-set enumeration");
  std::vector<bool> cur(r.size(), true);
  for (std::size_t m = 1; m < n; ++m) {
    std::vector<bool> next(r.size(), false);
    for (FiniteRing::Index s = 0; s < r.size(); ++s) {
      if (!cur[s]) continue;
      for (FiniteRing::Index x = 0; x < r.size(); ++x) next[r.comm(s, x)] = true;
    }
    cur = std::move(next);
  }
  return cur;
}

struct AbcTableReport {
  std::array<Status, 3> checks{Status::holds, Status::holds, Status::holds};
  std::array<std::string, 3> details;
  Status all() const { return checks[0] && checks[1] && checks[2]; }
};

/// Conditions (a), (b), (c) for an arbitrary table, over every element of each component.
inline AbcTableReport check_conditions_abc(const PeirceContext<ModP>& ctx, const FiniteRing& r, const MapTable& t,
                                           std::uint64_t cap = kEnumerationCap) {
  check_table(r, t);
  const auto& a = ctx.algebra();
  const Field& f = a.field();
  AbcTableReport rep;
  const auto z_e2 = central_times(ctx, 2), z_e1 = central_times(ctx, 1);
  auto elements = [&](Block b) { return enumerate_span(f, a.dim(), ctx.component_basis(b), cap); };
  for (const auto& x : elements(Block::b11)) {
    auto v = ctx.project(Block::b22, r.element(t[r.index(x)]));
    if (!z_e2.contains(v)) {
      rep.checks[0] = Status::fails;
      rep.details[0] = "e2 T(" + vec_to_string<ModP>(x) + ") e2 not in Z(R)e2";
      break;
    }
  }
  for (const auto& x : elements(Block::b22)) {
    auto v = ctx.project(Block::b11, r.element(t[r.index(x)]));
    if (!z_e1.contains(v)) {
      rep.checks[1] = Status::fails;
      rep.details[1] = "e1 T(" + vec_to_string<ModP>(x) + ") e1 not in Z(R)e1";
      break;
    }
  }
  for (auto b : {Block::b12, Block::b21}) {
    if (rep.checks[2] == Status::fails) break;
    for (const auto& x : elements(b)) {
      const auto& v = r.element(t[r.index(x)]);
      if (!ctx.component(b).contains(v)) {
        rep.checks[2] = Status::fails;
        rep.details[2] = "T(" + vec_to_string<ModP>(x) + ") not in " + block_name(b);
        break;
      }
    }
  }
  return rep;
}

struct ConverseExample {
  MapTable table;  // delta + tau
  MapTable tau;
  std::vector<bool> pn_values;
  std::size_t pn_count = 0;
  std::string note;
  LieIdentityCheck lie;
  AdditivityReport additivity;
  AbcTableReport abc;
};

/*
 * T = delta + tau with tau a pseudo-random map into Z(R) that vanishes on
 * every p_n value. The result is verified before returning: T satisfies
 * the identity exhaustively, every additivity defect is central, and
 * (a), (b), (c) hold for T.
 */
inline ConverseExample construct_converse_example(const PeirceContext<ModP>& ctx, const FiniteRing& r,
                                                  const LinearMap<ModP>& delta, std::size_t n, std::uint64_t seed,
                                                  const ScanOptions& opt = {}) {
  const auto& a = ctx.algebra();
  if (!is_derivation(a, delta)) throw Error(Errc::invalid_argument, "delta is not a derivation");
  using Index = FiniteRing::Index;
  ConverseExample out;
  out.pn_values = pn_value_set(r, n);
  std::vector<Index> central;
  for (Index z = 0; z < r.size(); ++z) {
    if (r.central(z)) central.push_back(z);
    if (out.pn_values[z]) ++out.pn_count;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, central.size() - 1);
  out.tau.values.assign(r.size(), 0);
  for (Index x = 0; x < r.size(); ++x)
    if (!out.pn_values[x]) out.tau.values[x] = central[pick(rng)];
  if (out.pn_count == r.size()) out.note = "every element is a p_n value; tau is forced to 0";
  const auto d = table_of(r, delta);
  out.table.values.resize(r.size());
  for (Index x = 0; x < r.size(); ++x) out.table.values[x] = r.add(d[x], out.tau[x]);

  out.lie = verify_lie_n_identity(r, out.table, n, {opt.budget, 0, 0});
  out.additivity = almost_additivity_defect(r, out.table, opt.budget);
  out.abc = check_conditions_abc(ctx, r, out.table);
  if (out.lie.status != Status::holds)
    throw Error(Errc::certification_failure, "constructed table violates the identity");
  if (out.additivity.all_central != Status::holds)
    throw Error(Errc::certification_failure, "constructed table has a non-central additivity defect");
  if (out.abc.all() != Status::holds) throw Error(Errc::certification_failure, "constructed table violates (a)-(c)");
  return out;
}

struct TableSummary {
  MapTable table;
  bool additive = false;
  bool almost_additive = false;
};

struct SearchReport {
  bool complete = false;
  std::uint64_t nodes = 0;
  double explored_fraction = 0.0;
  mpz_class total;  // |R|^|R|
  mpz_class non_lie;
  mpz_class lie_additive;
  mpz_class lie_almost_additive;  // almost additive, not additive
  mpz_class lie_not_almost_additive;
  std::vector<TableSummary> samples;  // first Lie tables found
};

/*
 * Depth-first assignment of T(0), T(1), ... in index order. Each tuple is
 * checked as soon as T is known at all of its entries and at its p_n
 * value, so a failing partial table prunes the whole subtree, counted as
 * |R|^(unassigned) non-Lie tables. Completed tables are Lie n-derivations
 * and are classified by their additivity defect. `node_budget` bounds the
 * number of DFS nodes; 0 returns an empty report.
 */
inline SearchReport pruned_exhaustive_search(const FiniteRing& r, std::size_t n, std::uint64_t node_budget,
                                             std::size_t keep_samples = 16) {
  using Index = FiniteRing::Index;
  if (n < 1 || n > 4) throw Error(Errc::invalid_argument, "n must lie in [1, 4] for the search");
  SearchReport rep;
  const Index size = r.size();
  mpz_ui_pow_ui(rep.total.get_mpz_t(), size, size);
  if (node_budget == 0) return rep;
  const auto tuples = detail::checked_power(size, n, std::uint64_t{1} << 22);
  if (tuples > (std::uint64_t{1} << 22))
    throw Error(Errc::budget_exceeded, "too many tuples to bucket for the search");

  // bucket[k]: tuples (x_1..x_n, p_n(x)) whose largest index is k
  std::vector<std::vector<Index>> bucket(size);
  std::vector<Index> tuple(n);
  for (std::uint64_t code = 0; code < tuples; ++code) {
    auto c = code;
    for (std::size_t i = 0; i < n; ++i) { tuple[i] = static_cast<Index>(c % size); c /= size; }
    const Index p = p_n(r, std::span<const Index>(tuple));
    Index key = p;
    for (auto x : tuple) key = std::max(key, x);
    auto& b = bucket[key];
    b.insert(b.end(), tuple.begin(), tuple.end());
  }

  MapTable t;
  t.values.assign(size, 0);
  mpz_class decided = 0;
  bool stopped = false;
  auto tuple_ok = [&](const Index* xs) {
    return lie_n_residual(r, t, std::span<const Index>(xs, n)) == 0;
  };
  std::function<void(Index)> assign = [&](Index k) {
    if (k == size) {
      auto add = almost_additivity_defect(r, t, std::uint64_t{size} * size);
      const bool almost = add.all_central == Status::holds;
      if (add.additive) ++rep.lie_additive;
      else if (almost) ++rep.lie_almost_additive;
      else ++rep.lie_not_almost_additive;
      if (rep.samples.size() < keep_samples) rep.samples.push_back({t, add.additive, almost});
      ++decided;
      return;
    }
    for (Index v = 0; v < size; ++v) {
      if (rep.nodes >= node_budget) { stopped = true; return; }
      ++rep.nodes;
      t.values[k] = v;
      bool ok = true;
      const auto& b = bucket[k];
      for (std::size_t off = 0; off < b.size() && ok; off += n) ok = tuple_ok(&b[off]);
      if (!ok) {
        mpz_class pruned;
        mpz_ui_pow_ui(pruned.get_mpz_t(), size, size - k - 1);
        rep.non_lie += pruned;
        decided += pruned;
        continue;
      }
      assign(k + 1);
      if (stopped) return;
    }
  };
  assign(0);
  rep.complete = !stopped;
  rep.explored_fraction = mpq_class(decided, rep.total).get_d();
  return rep;
}

}  // namespace altring

#endif  // ALTRING_FINITE_SEARCH_HPP
