// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <altring/cli.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <unistd.h>

using namespace altring;

namespace {

const Field Q = Field::rationals();

// Collects failed checks of one criterion.
struct Checks {
  std::vector<std::string> failed;
  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Checks&)>& body) {
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failed.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) c.failed.push_back("took " + std::to_string(secs) + " s");
  const bool ok = c.failed.empty();
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << std::fixed
            << std::setprecision(3) << secs << " s)\n";
  for (const auto& f : c.failed) std::cout << "      " << f << "\n";
}

template <FieldScalar S>
LinearMap<S> ad(const Algebra<S>& a, const Vec<S>& y) {
  return mul_operator(a, y, Side::left) - mul_operator(a, y, Side::right);
}

// D(xy) = D(x)y + xD(y) written out on structure constants, unknown D_kl at k*d + l.
template <FieldScalar S>
std::size_t leibniz_oracle_dim(const Algebra<S>& a) {
  const std::size_t d = a.dim();
  const Field& f = a.field();
  std::vector<Vec<S>> c(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c[i * d + j] = a.mul(a.basis(i), a.basis(j));
  Matrix<S> m(f, 0, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t r = 0; r < d; ++r) {
        auto row = zero_vec<S>(f, d * d);
        for (std::size_t k = 0; k < d; ++k) row[r * d + k] += c[i * d + j][k];
        for (std::size_t l = 0; l < d; ++l) {
          row[l * d + i] -= c[l * d + j][r];
          row[l * d + j] -= c[i * d + l][r];
        }
        m.append_row(std::span<const S>(row));
      }
  return kernel(m).dim();
}

template <FieldScalar S>
bool leibniz_by_hand(const Algebra<S>& a, const LinearMap<S>& d) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto x = a.basis(i), y = a.basis(j);
      if (!(d.apply(a.mul(x, y)) == a.mul(d.apply(x), y) + a.mul(x, d.apply(y)))) return false;
    }
  return true;
}

LinearMap<Rational> random_member(const Subspace<Rational>& s, std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  auto v = zero_vec<Rational>(Q, d * d);
  for (const auto& b : s.basis_vectors()) v = v + Rational(coef(rng)) * b;
  return vec_to_map<Rational>(Q, d, std::span<const Rational>(v));
}

// prime and alternative => (1)(2)(3) => both commutants central; refuted only by a decided counterexample.
template <FieldScalar S>
void cross_invariants(const Algebra<S>& a, const std::string& label, Checks& c) {
  auto ctx = peirce_context(a, *a.idempotent(), false);
  auto conds = check_conditions_1_to_4(ctx);
  const Status c123 = conds.conditions[0].status && conds.conditions[1].status && conds.conditions[2].status;
  const bool spades = check_offdiag_commutant(ctx, Block::b12).contained_in_center &&
                      check_offdiag_commutant(ctx, Block::b21).contained_in_center;
  const Status premise = is_prime(a).status && classify_identities(a).alternative;
  c.expect(!(premise == Status::holds && c123 == Status::fails), label + ": prime alternative but (1)-(3) fail");
  c.expect(!(c123 == Status::holds && !spades), label + ": (1)-(3) hold but a commutant is not central");
}

int run_cli(std::vector<std::string> args, std::string& err) {
  std::ostringstream out, e;
  int code = cli::run(std::move(args), out, e);
  err = e.str();
  return code;
}

}  // namespace

int main() {
  criterion(1, "identity classification of zorn and mat2 over Q", 1.0, [](Checks& c) {
    auto z = make_zorn<Rational>(Q);
    auto id = classify_identities(z);
    c.expect(id.alternative == Status::holds, "zorn alternative");
    c.expect(id.flexible == Status::holds, "zorn flexible");
    c.expect(id.associative == Status::fails, "zorn not associative");
    c.expect(id.associator_witness.has_value(), "zorn associator witness reported");
    auto as = associator(z, z.basis(1), z.basis(2), z.basis(3));
    c.expect(!is_zero_vec<Rational>(as), "(u1,u2,u3) != 0");
    c.expect(as == z.basis(7) - z.basis(0), "(u1,u2,u3) = e2 - e1");
    auto m = classify_identities(make_mat2<Rational>(Q));
    c.expect(m.associative == Status::holds && m.alternative == Status::holds && m.flexible == Status::holds,
             "mat2 satisfies all three identities");
  });

  criterion(2, "Peirce components and relations for mat2 and zorn", 1.0, [](Checks& c) {
    auto m = make_mat2<Rational>(Q);
    auto z = make_zorn<Rational>(Q);
    auto cm = peirce_context(m), cz = peirce_context(z);
    c.expect(cm.dims() == std::array<std::size_t, 4>{1, 1, 1, 1}, "mat2 dims (1,1,1,1)");
    c.expect(cz.dims() == std::array<std::size_t, 4>{1, 3, 3, 1}, "zorn dims (1,3,3,1)");
    for (const auto* ctx : {&cm, &cz})
      for (const auto& r : verify_peirce_relations(*ctx).relations)
        c.expect(r.status == Status::holds, "relation " + r.name);
  });

  criterion(3, "derivation dimensions against a Leibniz solve", 10.0, [](Checks& c) {
    const std::vector<std::pair<std::string, std::size_t>> want{{"mat2", 3}, {"zorn", 14}, {"product2", 0}};
    for (const auto& [name, dim] : want) {
      auto a = catalog<Rational>(name, Q);
      auto der = derivation_space(a);
      c.expect(der.dim() == dim, name + ": dim Der = " + std::to_string(der.dim()));
      c.expect(leibniz_oracle_dim(a) == dim, name + ": oracle dim");
      for (const auto& d : subspace_maps(der, a.dim())) c.expect(leibniz_by_hand(a, d), name + ": basis map is Leibniz");
    }
  });

  criterion(4, "Lie 2- and 3-derivations of mat2 and their inclusions", 30.0, [](Checks& c) {
    auto m = make_mat2<Rational>(Q);
    auto der = derivation_space(m);
    auto l2 = lie_n_derivation_space(m, 2).space;
    auto l3 = lie_n_derivation_space(m, 3).space;
    c.expect(l2.dim() == 4, "dim LieDer_2 = 4");
    c.expect(l3.dim() == 4, "dim LieDer_3 = 4");
    c.expect(l2.contains(der), "Der in LieDer_2");
    c.expect(l3.contains(l2), "LieDer_2 in LieDer_3");
    c.expect(fosner_inclusion(m, 2, 1), "inclusion n=2, k=1");
  });

  criterion(5, "hypothesis checkers and cross-invariants", 0, [](Checks& c) {
    const Field gf2 = Field::gf(2), gf5 = Field::gf(5);
    for (auto a : {make_mat2<ModP>(gf2), make_zorn<ModP>(gf5)}) {
      const std::string label = a.dim() == 4 ? "mat2/GF(2)" : "zorn/GF(5)";
      auto conds = check_conditions_1_to_4(peirce_context(a));
      for (const auto& v : conds.conditions) c.expect(v.status == Status::holds, label + ": condition " + v.name);
      c.expect(is_prime(a).status == Status::holds, label + ": prime");
    }
    auto t = check_conditions_1_to_4(peirce_context(make_tri2<Rational>(Q), *make_tri2<Rational>(Q).idempotent(), false));
    c.expect(t.conditions[0].status == Status::fails, "tri2/Q fails condition 1");
    c.expect(t.conditions[0].detail.find("(i,j)=(1,2)") != std::string::npos, "tri2/Q fails at (i,j)=(1,2)");
    auto t2 = make_tri2<ModP>(gf2);
    auto pv = is_prime(t2);
    c.expect(pv.status == Status::fails, "tri2/GF(2) not prime");
    c.expect(pv.witness_a == t2.basis(1) && pv.witness_b == t2.basis(1), "witness a = b = E12");

    for (const auto& name : catalog_names()) {
      cross_invariants(catalog<Rational>(name, Q), name + "/Q", c);
      for (std::uint64_t p : {2, 3, 5}) cross_invariants(catalog<ModP>(name, Field::gf(p)), name + "/GF(" + std::to_string(p) + ")", c);
    }
  });

  criterion(6, "decomposition round trip on 20 + 20 Lie 2-derivations", 30.0, [](Checks& c) {
    std::mt19937_64 rng(2024);
    for (const std::string name : {"mat2", "zorn"}) {
      auto a = catalog<Rational>(name, Q);
      auto ctx = peirce_context(a);
      auto abc = abc_subspace(ctx, lie_n_derivation_space(a, 2).space);
      auto pn = pn_span(a, 2);
      if (name == "mat2") c.expect(pn.dim() == 3, "mat2: span of p_2 values has dim 3");
      for (int t = 0; t < 20; ++t) {
        auto d = random_member(abc, a.dim(), rng);
        if (!check_conditions_abc(ctx, d).all()) {
          c.expect(false, name + ": sampled member violates (a)-(c)");
          continue;
        }
        auto r = decompose(ctx, d, 2);
        c.expect(r.delta + r.tau == d, name + ": delta + tau = D");
        c.expect(leibniz_by_hand(a, r.delta), name + ": delta Leibniz on basis pairs");
        for (std::size_t i = 0; i < a.dim(); ++i)
          c.expect(ctx.center().contains(r.tau.apply(a.basis(i))), name + ": tau central-valued");
        for (const auto& w : pn.basis_vectors()) c.expect(is_zero_vec<Rational>(r.tau.apply(w)), name + ": tau kills p_2");
      }
    }
    auto m = make_mat2<Rational>(Q);
    std::string cert;
    try {
      decompose(peirce_context(m), ad(m, m.basis(1)), 2);
    } catch (const DecompositionError& e) {
      cert = e.certificate();
    }
    c.expect(cert == "conditions_abc:c", "ad_E12 rejected at (c), got '" + cert + "'");
  });

  criterion(7, "normalization of ad_E12 and ad_E21", 0, [](Checks& c) {
    auto m = make_mat2<Rational>(Q);
    auto ctx = peirce_context(m);
    for (std::size_t b : {1u, 2u}) {
      auto n = normalize_at_idempotent(ctx, ad(m, m.basis(b)));
      const std::string label = b == 1 ? "ad_E12" : "ad_E21";
      c.expect(n.normalized.is_zero(), label + ": D' = 0");
      c.expect(n.e1_central, label + ": D'(e1) central");
      c.expect(n.e2_central.value_or(false), label + ": D'(1 - e1) central");
    }
  });

  criterion(8, "non-additive converse table on M2(GF(3))", 60.0, [](Checks& c) {
    auto a = make_mat2<ModP>(Field::gf(3));
    auto ctx = peirce_context(a);
    FiniteRing r(a);
    bool some_non_additive = false;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto ex = construct_converse_example(ctx, r, ad(a, a.basis(0)), 2, seed);
      auto lie = verify_lie_n_identity(r, ex.table, 2);
      c.expect(lie.status == Status::holds && lie.exhaustive && lie.checked == 81 * 81,
               "seed " + std::to_string(seed) + ": identity over all 81^2 pairs");
      auto add = almost_additivity_defect(r, ex.table);
      c.expect(add.all_central == Status::holds, "seed " + std::to_string(seed) + ": defects central");
      some_non_additive = some_non_additive || !add.additive;
    }
    c.expect(some_non_additive, "some seed in 0..9 is non-additive");
  });

  criterion(9, "identity map on M2(GF(2)) is not a Lie 2-derivation", 0, [](Checks& c) {
    auto a = make_mat2<ModP>(Field::gf(2));
    FiniteRing r(a);
    auto lie = verify_lie_n_identity(r, identity_table(r), 2);
    c.expect(lie.status == Status::fails, "identity fails");
    c.expect(lie.witness && lie.witness->size() == 2 && r.element((*lie.witness)[0]) == a.basis(0) &&
                 r.element((*lie.witness)[1]) == a.basis(1),
             "witness (E11, E12)");
    c.expect(lie.residual && r.element(*lie.residual) == a.basis(1), "residual E12");
  });

  criterion(10, "file format round trip and line-numbered errors", 0, [](Checks& c) {
    for (const auto& name : catalog_names()) {
      auto s = serialize_saf(catalog<Rational>(name, Q));
      c.expect(serialize_saf(parse_saf_as<Rational>(s)) == s, name + "/Q round trip");
      auto t = serialize_saf(catalog<ModP>(name, Field::gf(5)));
      c.expect(serialize_saf(parse_saf_as<ModP>(t)) == t, name + "/GF(5) round trip");
      c.expect(serialize_saf(parse_saf(t)) == t, name + "/GF(5) untyped round trip");
    }
    const std::vector<std::pair<std::string, std::size_t>> bad{
        {"saf 2\nfield Q\ndim 1\n", 1},
        {"saf 1\nfield GF 4\ndim 1\n", 2},
        {"saf 1\nfield Q\ndim x\n", 3},
        {"saf 1\nfield Q\ndim 2\nmul 0 1 1 1\n", 4},
        {"saf 1\nfield Q\ndim 2\nmul 1 1 1 1\nmul 1 1 1 2\n", 5},
        {"saf 1\nfield Q\ndim 2\n\nmul 1 2 1 1/0\n", 5},
        {"saf 1\nfield GF 3\ndim 2\nunit 1\n", 4},
        {"saf 1\nfield Q\ndim 2\nfrobnicate\n", 4}};
    const auto dir = std::filesystem::temp_directory_path() / ("altring-accept-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    for (std::size_t k = 0; k < bad.size(); ++k) {
      const auto& [text, line] = bad[k];
      std::size_t got = 0;
      try {
        parse_saf(text);
      } catch (const ParseError& e) {
        got = e.line();
      }
      c.expect(got == line, "case " + std::to_string(k) + ": error on line " + std::to_string(line) + ", got " +
                                std::to_string(got));
      const auto path = (dir / ("bad" + std::to_string(k) + ".saf")).string();
      std::ofstream(path, std::ios::binary) << text;
      std::string err;
      c.expect(run_cli({"info", "--file", path}, err) == 3, "case " + std::to_string(k) + ": exit code 3");
      c.expect(err.find("line " + std::to_string(line)) != std::string::npos,
               "case " + std::to_string(k) + ": message names the line");
    }
    std::filesystem::remove_all(dir);
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
