#ifndef ALTRING_CLI_HPP
#define ALTRING_CLI_HPP

// Command-line frontend. Needs CLI11.hpp on the include path.

#include <altring/saf_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace altring::cli {

enum ExitCode : int { kAllHold = 0, kSomeFail = 1, kSomeUndecided = 2, kUsage = 3 };

struct Verdict {
  std::string anchor;
  Status status = Status::holds;
  std::string detail;
  std::vector<std::string> block;  // extra lines, text format only
};

class Report {
 public:
  void add(std::string anchor, Status s, std::string detail, std::vector<std::string> block = {}) {
    verdicts_.push_back({std::move(anchor), s, std::move(detail), std::move(block)});
  }
  /// A computed quantity: reported as a verdict that holds.
  void value(std::string anchor, std::string detail, std::vector<std::string> block = {}) {
    add(std::move(anchor), Status::holds, std::move(detail), std::move(block));
  }

  int exit_code() const {
    bool undecided = false;
    for (const auto& v : verdicts_) {
      if (v.status == Status::fails) return kSomeFail;
      if (v.status == Status::undecided) undecided = true;
    }
    return undecided ? kSomeUndecided : kAllHold;
  }

  void print(std::ostream& out, bool tsv) const {
    std::size_t width = 0;
    for (const auto& v : verdicts_) width = std::max(width, v.anchor.size());
    for (const auto& v : verdicts_) {
      if (tsv) {
        out << v.anchor << '\t' << to_string(v.status) << '\t' << v.detail << '\n';
        continue;
      }
      out << std::left << std::setw(static_cast<int>(width)) << v.anchor << "  " << std::setw(9) << to_string(v.status)
          << ' ' << v.detail << '\n';
      for (const auto& line : v.block) out << "    " << line << '\n';
    }
  }

 private:
  std::vector<Verdict> verdicts_;
};

/// Thrown for anything that should end with exit code 3.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string catalog;
  std::string file;
  std::string field;
  std::string idem;
  std::string map;
  std::string out;
  std::vector<std::size_t> n;
  std::vector<long long> k;
  std::optional<std::uint64_t> budget;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::vector<std::string> props;
  std::string mode = "exhaustive";
  bool relations = false, conditions = false, commutant = false, invariants = false, list = false;
};

inline Field parse_field_flag(const std::string& s) {
  if (s.empty() || s == "Q") return Field::rationals();
  std::string digits;
  for (const char* prefix : {"GFp:", "GF:", "GF(", "GF"}) {
    if (s.rfind(prefix, 0) == 0) {
      digits = s.substr(std::string_view(prefix).size());
      if (std::string_view(prefix) == "GF(") {
        if (digits.empty() || digits.back() != ')') throw UsageError("bad --field '" + s + "'");
        digits.pop_back();
      }
      break;
    }
  }
  if (digits.empty() || !detail::is_integer_literal(digits) || digits[0] == '-' || digits.size() > 10)
    throw UsageError("bad --field '" + s + "' (expected Q or GFp:<p>)");
  return Field::gf(std::stoull(digits));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AnyAlgebra load_algebra(const Options& o) {
  if (!o.catalog.empty() && !o.file.empty()) throw UsageError("give either --catalog or --file, not both");
  if (!o.file.empty()) {
    auto a = parse_saf(read_file(o.file));
    if (!o.field.empty()) {
      const Field want = parse_field_flag(o.field);
      const Field have = std::visit([](const auto& alg) { return alg.field(); }, a);
      if (!(want == have)) throw UsageError("--field " + o.field + " contradicts the file's field " + have.to_string());
    }
    return a;
  }
  if (o.catalog.empty()) throw UsageError("no algebra given (use --catalog <name> or --file <path>)");
  const Field f = parse_field_flag(o.field);
  if (f.finite()) return catalog<ModP>(o.catalog, f);
  return catalog<Rational>(o.catalog, f);
}

template <FieldScalar S>
Vec<S> parse_element(const Algebra<S>& a, const std::string& text, const std::string& what) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.size() != a.dim())
    throw UsageError(what + " needs " + std::to_string(a.dim()) + " coordinates, got " + std::to_string(words.size()));
  Vec<S> v;
  for (const auto& w : words) {
    try {
      v.push_back(S::parse(a.field(), w));
    } catch (const Error& e) {
      throw UsageError(what + ": " + e.what());
    }
  }
  return v;
}

template <FieldScalar S>
std::vector<std::string> matrix_lines(const Matrix<S>& m) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back("[" + vec_to_string<S>(m.row(r)) + "]");
  return out;
}

template <FieldScalar S>
std::string matrix_inline(const Matrix<S>& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) s += (r ? "; " : "") + vec_to_string<S>(m.row(r));
  return "[" + s + "]";
}

template <FieldScalar S>
std::vector<std::string> basis_lines(const Subspace<S>& s) {
  std::vector<std::string> out;
  for (const auto& v : s.basis_vectors()) out.push_back("(" + vec_to_string<S>(v) + ")");
  return out;
}

inline Status implies(Status p, Status q) {
  if (p == Status::fails || q == Status::holds) return Status::holds;
  if (p == Status::holds && q == Status::fails) return Status::fails;
  return Status::undecided;
}

inline std::string ns_label(std::size_t n) { return "n=" + std::to_string(n); }

inline bool wants(const std::vector<std::string>& props, const std::string& p) {
  return props.empty() || std::find(props.begin(), props.end(), "all") != props.end() ||
         std::find(props.begin(), props.end(), p) != props.end();
}

template <FieldScalar S>
PeirceContext<S> context_for(const Algebra<S>& a, const Options& o) {
  if (!o.idem.empty()) return peirce_context(a, parse_element(a, o.idem, "--idem"));
  return peirce_context(a);
}

// ---- subcommands --------------------------------------------------------

template <FieldScalar S>
void cmd_info(const Algebra<S>& a, const Options&, Report& rep) {
  rep.value("info:field", a.field().to_string());
  rep.value("info:dim", std::to_string(a.dim()));
  auto u = a.unit() ? a.unit() : find_unit(a);
  rep.value("info:unit", u ? "(" + vec_to_string<S>(*u) + ")" : "none");
  rep.value("info:idempotent", a.idempotent() ? "(" + vec_to_string<S>(*a.idempotent()) + ")" : "none");
  auto z = center(a), nu = nucleus(a);
  rep.value("info:center", "dim " + std::to_string(z.dim()), basis_lines(z));
  rep.value("info:nucleus", "dim " + std::to_string(nu.dim()), basis_lines(nu));
  auto zn = subspace_intersect(z, nu);
  rep.value("info:center-nucleus", "dim " + std::to_string(zn.dim()), basis_lines(zn));
}

template <FieldScalar S>
void cmd_check(const Algebra<S>& a, const Options& o, Report& rep) {
  static const std::vector<std::string> known{"all", "associative", "alternative", "flexible", "torsion", "prime", "idempotents"};
  for (const auto& p : o.props)
    if (std::find(known.begin(), known.end(), p) == known.end()) throw UsageError("unknown --prop '" + p + "'");
  if (wants(o.props, "associative") || wants(o.props, "alternative") || wants(o.props, "flexible")) {
    auto id = classify_identities(a);
    auto emit = [&](const char* name, Status s, const std::optional<IdentityWitness>& w) {
      if (wants(o.props, name)) rep.add(std::string("identity:") + name, s, w ? "witness " + w->detail : "");
    };
    emit("associative", id.associative, id.associator_witness);
    emit("alternative", id.alternative, id.alternative_witness);
    emit("flexible", id.flexible, id.flexible_witness);
  }
  if (wants(o.props, "torsion")) {
    auto ks = o.k.empty() ? std::vector<long long>{2, 3} : o.k;
    for (auto k : ks) {
      if (k <= 0) throw UsageError("--k must be positive");
      rep.add("torsion:k=" + std::to_string(k), from_bool(torsion_free(a, k)),
              "characteristic " + std::to_string(a.field().characteristic()));
    }
  }
  if (wants(o.props, "prime")) {
    try {
      auto pv = is_prime(a, o.budget.value_or(std::uint64_t{1} << 20), 64, o.seed);
      std::string detail = "tested " + std::to_string(pv.tested);
      if (pv.witness_a)
        detail += ", aR.b = 0 with a = (" + vec_to_string<S>(*pv.witness_a) + "), b = (" + vec_to_string<S>(*pv.witness_b) + ")";
      for (const auto& w : pv.warnings) detail += "; " + w;
      rep.add("prime:aRb", pv.status, detail);
    } catch (const Error& e) {
      if (e.code() != Errc::budget_exceeded) throw;
      rep.add("prime:aRb", Status::undecided, e.what());
    }
  }
  if (!o.props.empty() && wants(o.props, "idempotents") &&
      std::find(o.props.begin(), o.props.end(), "all") == o.props.end()) {
    if constexpr (std::is_same_v<S, ModP>) {
      auto list = find_idempotents(a, o.budget.value_or(kEnumerationCap));
      std::vector<std::string> lines;
      std::size_t nontrivial = 0;
      for (const auto& e : list) {
        nontrivial += e.nontrivial;
        lines.push_back("(" + vec_to_string<S>(e.element) + ")" + (e.nontrivial ? " nontrivial" : ""));
      }
      rep.value("idempotents:count", std::to_string(list.size()) + " (" + std::to_string(nontrivial) + " nontrivial)", lines);
    } else {
      rep.add("idempotents:count", Status::undecided, "enumeration needs a finite field");
    }
  }
}

template <FieldScalar S>
void cmd_peirce(const Algebra<S>& a, const Options& o, Report& rep) {
  const bool all = !(o.relations || o.conditions || o.commutant || o.invariants);
  auto ctx = context_for(a, o);
  auto d = ctx.dims();
  rep.value("peirce:dims", "R11 " + std::to_string(d[0]) + ", R12 " + std::to_string(d[1]) + ", R21 " +
                               std::to_string(d[2]) + ", R22 " + std::to_string(d[3]));
  for (const auto& w : ctx.warnings()) rep.add("peirce:warning", Status::undecided, w);
  if (all || o.relations) {
    auto rel = verify_peirce_relations(ctx);
    for (const auto& r : rel.relations) {
      std::string detail;
      for (const auto& v : r.violations) detail += (detail.empty() ? "" : "; ") + v;
      rep.add("peirce:relation-" + r.name, r.status, detail);
    }
  }
  std::optional<ConditionsReport> conds;
  if (all || o.conditions || o.invariants) conds = check_conditions_1_to_4(ctx, o.budget.value_or(kEnumerationCap));
  if (all || o.conditions)
    for (const auto& c : conds->conditions) rep.add("conditions:" + c.name, c.status, c.detail);
  std::array<CommutantResult<S>, 2> comm{check_offdiag_commutant(ctx, Block::b12), check_offdiag_commutant(ctx, Block::b21)};
  if (all || o.commutant) {
    for (std::size_t i = 0; i < 2; ++i)
      rep.add(i == 0 ? "commutant:12" : "commutant:21", from_bool(comm[i].contained_in_center),
              "dim " + std::to_string(comm[i].subspace.dim()) + (comm[i].contained_in_center ? ", central" : ", not central"),
              basis_lines(comm[i].subspace));
  }
  if (all || o.invariants) {
    auto id = classify_identities(a);
    Status prime = Status::undecided;
    try {
      prime = is_prime(a, std::uint64_t{1} << 20, 64, o.seed).status;
    } catch (const Error& e) {
      if (e.code() != Errc::budget_exceeded) throw;
    }
    const Status premise = prime && id.alternative;
    const Status c123 = conds->conditions[0].status && conds->conditions[1].status && conds->conditions[2].status;
    const Status spades = from_bool(comm[0].contained_in_center && comm[1].contained_in_center);
    rep.add("invariant:prime-alternative-cond123", implies(premise, c123),
            "prime " + std::string(to_string(prime)) + ", alternative " + std::string(to_string(id.alternative)) +
                ", conditions 1-3 " + std::string(to_string(c123)));
    rep.add("invariant:cond123-commutant", implies(c123, spades),
            "conditions 1-3 " + std::string(to_string(c123)) + ", commutants central " + std::string(to_string(spades)));
  }
}

template <FieldScalar S>
void cmd_derive(const Algebra<S>& a, const Options& o, Report& rep) {
  LieOptions opt;
  if (o.budget) opt.row_budget = *o.budget;
  std::mt19937_64 rng(o.seed);
  auto der = derivation_space(a);
  rep.value("derive:der", "dim " + std::to_string(der.dim()), basis_lines(der));
  auto ns = o.n.empty() ? std::vector<std::size_t>{2} : o.n;
  for (auto n : ns) {
    try {
      auto lie = lie_n_derivation_space(a, n, opt);
      rep.value("derive:lie-" + ns_label(n), "dim " + std::to_string(lie.space.dim()), basis_lines(lie.space));
      rep.add("derive:der-in-lie-" + ns_label(n), from_bool(lie.space.contains(der)), "");
      // re-validate every basis map on random element tuples
      std::uniform_int_distribution<int> coef(-3, 3);
      bool ok = true;
      for (const auto& d : lie.maps(a.dim())) {
        for (int t = 0; t < 50 && ok; ++t) {
          std::vector<Vec<S>> xs(n, a.zero());
          for (auto& x : xs)
            for (auto& c : x) c = S::from_int(a.field(), coef(rng));
          ok = is_zero_vec<S>(lie_n_residual(a, d, xs));
        }
      }
      rep.add("derive:revalidate-" + ns_label(n), from_bool(ok), "50 random tuples per basis map");
    } catch (const Error& e) {
      if (e.code() != Errc::budget_exceeded) throw;
      rep.add("derive:lie-" + ns_label(n), Status::undecided, e.what());
    }
  }
}

template <FieldScalar S>
void cmd_decompose(const Algebra<S>& a, const Options& o, Report& rep) {
  if (o.map.empty()) throw UsageError("decompose needs --map <lmap file>");
  auto d = parse_linear_map<S>(read_file(o.map), a.field(), a.dim());
  const std::size_t n = o.n.empty() ? 2 : o.n.front();
  LieOptions opt;
  if (o.budget) opt.row_budget = *o.budget;
  auto ctx = context_for(a, o);
  try {
    auto dec = decompose(ctx, d, n, opt);
    rep.value("decompose:delta", matrix_inline(dec.delta), matrix_lines(dec.delta));
    rep.value("decompose:tau", matrix_inline(dec.tau), matrix_lines(dec.tau));
    rep.value("decompose:normalizer", matrix_inline(dec.normalizer), matrix_lines(dec.normalizer));
    rep.add("decompose:sum", from_bool(dec.delta + dec.tau == d), "delta + tau = D");
    rep.add("decompose:leibniz", from_bool(dec.leibniz_ok), "delta is a derivation");
    rep.add("decompose:tau-central", from_bool(dec.tau_central_ok), "tau(R) in Z(R)");
    rep.add("decompose:tau-kills-pn", from_bool(dec.tau_kills_pn_ok), "tau vanishes on span of p_" + std::to_string(n));
    rep.add("decompose:conditions-abc", from_bool(dec.conditions_abc_ok), "(a), (b), (c)");
  } catch (const DecompositionError& e) {
    rep.add("decompose:" + e.certificate(), Status::fails, e.what());
  }
}

template <FieldScalar S>
void cmd_fosner(const Algebra<S>& a, const Options& o, Report& rep) {
  const std::size_t n = o.n.empty() ? 2 : o.n.front();
  auto ks = o.k.empty() ? std::vector<long long>{1} : o.k;
  LieOptions opt;
  if (o.budget) opt.row_budget = *o.budget;
  for (auto k : ks) {
    if (k < 0) throw UsageError("--k must be non-negative");
    const auto m = n + static_cast<std::size_t>(k) * (n - 1);
    const std::string anchor = "fosner:n=" + std::to_string(n) + ",k=" + std::to_string(k);
    try {
      rep.add(anchor, from_bool(fosner_inclusion(a, n, static_cast<std::size_t>(k), opt)),
              "LieDer_" + std::to_string(n) + " in LieDer_" + std::to_string(m));
    } catch (const Error& e) {
      if (e.code() != Errc::budget_exceeded) throw;
      rep.add(anchor, Status::undecided, e.what());
    }
  }
}

inline std::string tuple_label(const FiniteRing& r, const std::vector<FiniteRing::Index>& t) {
  std::string s;
  for (auto x : t) s += (s.empty() ? "(" : ", (") + r.label(x) + ")";
  return s;
}

inline void cmd_search(const Algebra<ModP>& a, const Options& o, Report& rep) {
  FiniteRing r(a);
  const std::size_t n = o.n.empty() ? 2 : o.n.front();
  auto load_table = [&]() {
    if (o.map.empty()) throw UsageError("search --mode " + o.mode + " needs --map <file>");
    const auto text = read_file(o.map);
    if (text.rfind("lmap", 0) == 0) return table_of(r, parse_linear_map<ModP>(text, a.field(), a.dim()));
    return parse_map_table(text, r);
  };
  if (o.mode == "verify") {
    auto t = load_table();
    try {
      auto chk = verify_lie_n_identity(r, t, n, {o.budget.value_or(kScanBudget), o.samples, o.seed});
      std::string detail = std::to_string(chk.checked) + (chk.exhaustive ? " tuples (exhaustive)" : " sampled tuples");
      if (chk.witness) detail += ", witness " + tuple_label(r, *chk.witness) + ", residual (" + r.label(*chk.residual) + ")";
      rep.add("search:lie-identity", chk.status, detail);
      if (chk.status == Status::holds) rep.add("search:zero-fixed", from_bool(t[0] == 0), "T(0) = 0");
    } catch (const Error& e) {
      if (e.code() != Errc::budget_exceeded) throw;
      rep.add("search:lie-identity", Status::undecided, e.what());
    }
  } else if (o.mode == "additivity") {
    auto t = load_table();
    auto add = almost_additivity_defect(r, t, o.budget.value_or(kScanBudget));
    std::string detail = add.additive ? "additive" : "not additive";
    if (add.witness)
      detail += ", T(a+b)-T(a)-T(b) = (" + r.label((*add.witness)[2]) + ") not central at a = (" + r.label((*add.witness)[0]) +
                "), b = (" + r.label((*add.witness)[1]) + ")";
    else if (add.first_defect)
      detail += ", T(a+b)-T(a)-T(b) = (" + r.label((*add.first_defect)[2]) + ") at a = (" + r.label((*add.first_defect)[0]) +
                "), b = (" + r.label((*add.first_defect)[1]) + ")";
    rep.add("search:almost-additive", add.all_central, detail);
  } else if (o.mode == "converse") {
    auto ctx = context_for(a, o);
    LinearMap<ModP> delta(a.field(), a.dim(), a.dim());
    if (!o.map.empty()) {
      delta = parse_linear_map<ModP>(read_file(o.map), a.field(), a.dim());
    } else {
      auto ad = mul_operator(a, ctx.e1(), Side::left) - mul_operator(a, ctx.e1(), Side::right);
      if (is_derivation(a, ad)) delta = ad;
    }
    auto ex = construct_converse_example(ctx, r, delta, n, o.seed, {o.budget.value_or(kScanBudget), 0, 0});
    rep.value("search:converse-pn-values", std::to_string(ex.pn_count) + " of " + std::to_string(r.size()) +
                                               (ex.note.empty() ? "" : "; " + ex.note));
    rep.add("search:converse-lie-identity", ex.lie.status, std::to_string(ex.lie.checked) + " tuples (exhaustive)");
    rep.add("search:converse-almost-additive", ex.additivity.all_central, ex.additivity.additive ? "additive" : "not additive");
    rep.add("search:converse-abc", ex.abc.all(), "");
    if (!o.out.empty()) {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + o.out + "'");
      f << serialize_map_table(r, ex.table);
    }
  } else if (o.mode == "exhaustive") {
    auto rep_s = pruned_exhaustive_search(r, n, o.budget.value_or(1'000'000));
    std::ostringstream d;
    d << "nodes " << rep_s.nodes << ", explored " << rep_s.explored_fraction << ", non-Lie " << rep_s.non_lie.get_str()
      << ", Lie additive " << rep_s.lie_additive.get_str() << ", Lie almost additive " << rep_s.lie_almost_additive.get_str()
      << ", Lie not almost additive " << rep_s.lie_not_almost_additive.get_str();
    std::vector<std::string> lines;
    for (const auto& s : rep_s.samples) {
      std::string l;
      for (auto v : s.table.values) l += (l.empty() ? "" : " ") + std::to_string(v);
      lines.push_back("[" + l + "] " + (s.additive ? "additive" : s.almost_additive ? "almost additive" : "not almost additive"));
    }
    rep.add("search:exhaustive", rep_s.complete ? Status::holds : Status::undecided, d.str(), lines);
    Status s = rep_s.lie_not_almost_additive > 0 ? Status::fails : rep_s.complete ? Status::holds : Status::undecided;
    rep.add("search:lie-implies-almost-additive", s, "");
  } else {
    throw UsageError("unknown --mode '" + o.mode + "' (verify, additivity, converse, exhaustive)");
  }
}

// ---- driver -------------------------------------------------------------

inline void add_algebra_flags(CLI::App* sub, Options& o) {
  sub->add_option("--catalog", o.catalog, "built-in algebra: mat2, tri2, zorn, product2");
  sub->add_option("--file", o.file, ".saf structure-constant file");
  sub->add_option("--field", o.field, "Q or GFp:<p>");
  sub->add_option("--format", o.format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
  sub->add_option("--seed", o.seed, "seed for randomized checks");
  sub->add_option("--budget", o.budget, "evaluation or node budget");
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with finite-dimensional alternative algebras", "altring"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto make = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    add_algebra_flags(s, o);
    subs.emplace_back(name, s);
    return s;
  };
  make("info", "field, dimension, unit, center, nucleus");
  auto* check = make("check", "identities, torsion, primality");
  check->add_option("--prop", o.props, "associative, alternative, flexible, torsion, prime, idempotents, all");
  check->add_option("--k", o.k, "torsion orders (default 2 and 3)");
  auto* peirce = make("peirce", "Peirce decomposition, relations, conditions, commutants");
  peirce->add_option("--idem", o.idem, "idempotent coordinates");
  peirce->add_flag("--relations", o.relations);
  peirce->add_flag("--conditions", o.conditions);
  peirce->add_flag("--commutant", o.commutant);
  peirce->add_flag("--invariants", o.invariants);
  auto* derive = make("derive", "derivation and Lie n-derivation spaces");
  derive->add_option("--n", o.n, "values of n (default 2)");
  auto* decomp = make("decompose", "split a Lie n-derivation into derivation plus central part");
  decomp->add_option("--map", o.map, "lmap file")->required();
  decomp->add_option("--n", o.n, "n (default 2)");
  decomp->add_option("--idem", o.idem, "idempotent coordinates");
  auto* fosner = make("fosner", "LieDer_n inside LieDer_{n+k(n-1)}");
  fosner->add_option("--n", o.n, "n (default 2)");
  fosner->add_option("--k", o.k, "k (default 1)");
  auto* search = make("search", "finite-ring experiments with arbitrary maps");
  search->add_option("--mode", o.mode, "verify, additivity, converse, exhaustive");
  search->add_option("--map", o.map, "tmap or lmap file");
  search->add_option("--n", o.n, "n (default 2)");
  search->add_option("--samples", o.samples, "sample size when the tuple budget binds");
  search->add_option("--idem", o.idem, "idempotent coordinates");
  search->add_option("--out", o.out, "write the constructed table here");
  auto* cat = make("catalog", "list built-in algebras or export one as .saf");
  cat->add_flag("--list", o.list);
  cat->add_option("--out", o.out, "write the file here instead of stdout");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::string command;
  for (const auto& [name, s] : subs)
    if (s->parsed()) command = name;
  o.props.erase(std::remove(o.props.begin(), o.props.end(), ""), o.props.end());
  Report rep;
  try {
    if (command == "catalog" && (o.list || (o.catalog.empty() && o.file.empty()))) {
      for (const auto& n : catalog_names()) out << n << '\n';
      return kAllHold;
    }
    const auto alg = load_algebra(o);
    if (command == "catalog") {
      const auto text = serialize_saf(alg);
      if (o.out.empty()) {
        out << text;
      } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + o.out + "'");
        f << text;
      }
      return kAllHold;
    }
    std::visit(
        [&](const auto& a) {
          using S = std::decay_t<decltype(a.tensor()[0])>;
          if (command == "info") cmd_info(a, o, rep);
          else if (command == "check") cmd_check(a, o, rep);
          else if (command == "peirce") cmd_peirce(a, o, rep);
          else if (command == "derive") cmd_derive(a, o, rep);
          else if (command == "decompose") cmd_decompose(a, o, rep);
          else if (command == "fosner") cmd_fosner(a, o, rep);
          else if (command == "search") {
            if constexpr (std::is_same_v<S, ModP>) cmd_search(a, o, rep);
            else throw UsageError("search needs a finite field (--field GFp:<p>)");
          }
        },
        alg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::syntax_error:
      case Errc::semantic_error:
      case Errc::unknown_name:
      case Errc::invalid_argument:
      case Errc::not_prime:
      case Errc::dimension_mismatch:
      case Errc::field_mismatch:
      case Errc::unsupported_field:
        err << "error: " << e.what() << '\n';
        return kUsage;
      case Errc::budget_exceeded:
        rep.add(command + ":budget", Status::undecided, e.what());
        break;
      default:
        rep.add(command + ":error", Status::fails, e.what());
        break;
    }
  }
  rep.print(out, o.format == "tsv");
  return rep.exit_code();
}

}  // namespace altring::cli

#endif  // ALTRING_CLI_HPP
