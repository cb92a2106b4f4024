#include <altring/saf_io.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace altring;

namespace {

const Field Q = Field::rationals();

std::size_t error_line(std::string_view text) {
  try {
    parse_saf(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

Errc error_code(std::string_view text) {
  try {
    parse_saf(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return Errc::invalid_argument;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Catalog, UnknownNameRejected) {
  try {
    catalog<Rational>("sedenion", Q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_name);
  }
}

TEST(Catalog, DesignatedIdempotentsAreNontrivial) {
  for (const auto& name : catalog_names()) {
    auto a = catalog<Rational>(name, Q);
    ASSERT_TRUE(a.idempotent()) << name;
    auto info = is_idempotent(a, *a.idempotent());
    EXPECT_TRUE(info.idempotent) << name;
    EXPECT_TRUE(info.nontrivial) << name;
    for (auto p : {2u, 3u, 5u}) {
      auto b = catalog<ModP>(name, Field::gf(p));
      EXPECT_TRUE(is_idempotent(b, *b.idempotent()).nontrivial) << name << " GF" << p;
    }
  }
}

TEST(Catalog, ZornOverSmallPrimes) {
  for (auto p : {2u, 3u, 5u, 7u}) {
    auto rep = classify_identities(make_zorn<ModP>(Field::gf(p)));
    EXPECT_EQ(rep.alternative, Status::holds) << p;
    EXPECT_EQ(rep.associative, Status::fails) << p;
  }
}

TEST(Catalog, Tri2Shape) {
  auto t = make_tri2<Rational>(Q);
  EXPECT_EQ(t.dim(), 3u);
  EXPECT_EQ(classify_identities(t).associative, Status::holds);
  EXPECT_EQ(center(t).dim(), 1u);
}

TEST(Saf, RoundTripAllCatalogEntries) {
  for (const auto& name : catalog_names()) {
    auto a = catalog<Rational>(name, Q);
    auto text = serialize_saf(a);
    EXPECT_EQ(parse_saf_as<Rational>(text), a) << name;
    EXPECT_EQ(serialize_saf(parse_saf(text)), text) << name;
    for (auto p : {2u, 5u, 7u}) {
      auto b = catalog<ModP>(name, Field::gf(p));
      auto tb = serialize_saf(b);
      EXPECT_EQ(parse_saf_as<ModP>(tb), b);
      EXPECT_EQ(serialize_saf(parse_saf(tb)), tb);
    }
  }
}

TEST(Saf, CanonicalMat2Text) {
  EXPECT_EQ(serialize_saf(make_mat2<Rational>(Q)),
            "saf 1\nfield Q\ndim 4\nunit 1 0 0 1\nidem 1 0 0 0\n"
            "mul 1 1 1 1\nmul 1 2 2 1\nmul 2 3 1 1\nmul 2 4 2 1\n"
            "mul 3 1 3 1\nmul 3 2 4 1\nmul 4 3 3 1\nmul 4 4 4 1\n");
}

TEST(Saf, CanonicalizesCoefficients) {
  auto a = parse_saf(
      "saf 1   # header\n"
      "\n"
      "field Q\n"
      "dim 2\n"
      "mul 2 2 1 6/4\n"
      "mul 1 1 2 0\n"
      "mul 1 2 1 -10/5\n");
  EXPECT_EQ(serialize_saf(a), "saf 1\nfield Q\ndim 2\nmul 1 2 1 -2\nmul 2 2 1 3/2\n");
  auto b = parse_saf("saf 1\nfield GF 5\ndim 1\nmul 1 1 1 -1\n");
  EXPECT_EQ(serialize_saf(b), "saf 1\nfield GF 5\ndim 1\nmul 1 1 1 4\n");
  auto c = parse_saf("saf 1\nfield GF 7\ndim 1\nmul 1 1 1 1/3\n");
  EXPECT_EQ(serialize_saf(c), "saf 1\nfield GF 7\ndim 1\nmul 1 1 1 5\n");
}

TEST(Saf, MissingMulLinesGiveZeroAlgebra) {
  auto a = parse_saf_as<Rational>("saf 1\nfield Q\ndim 3\n");
  EXPECT_EQ(a, Algebra<Rational>(Q, 3));
  EXPECT_EQ(classify_identities(a).associative, Status::holds);
}

TEST(Saf, NonPrimeModulus) {
  const std::string text = "saf 1\nfield GF 4\ndim 1\n";
  EXPECT_EQ(error_code(text), Errc::semantic_error);
  EXPECT_EQ(error_line(text), 2u);
}

TEST(Saf, LineNumberedErrors) {
  struct Case {
    std::string text;
    Errc code;
    std::size_t line;
  };
  const std::vector<Case> cases{
      {"", Errc::syntax_error, 1},
      {"saf 2\nfield Q\ndim 1\n", Errc::semantic_error, 1},
      {"saf 1\nfield R\ndim 1\n", Errc::syntax_error, 2},
      {"saf 1\nfield Q\ndim zero\n", Errc::syntax_error, 3},
      {"saf 1\nfield Q\ndim 0\n", Errc::semantic_error, 3},
      {"saf 1\nfield Q\ndim 2\nmul 1 2 3 1\n", Errc::semantic_error, 4},
      {"saf 1\nfield Q\ndim 2\n# comment\nmul 1 1 1 1\nmul 1 1 1 2\n", Errc::semantic_error, 6},
      {"saf 1\nfield Q\ndim 2\nmul 1 1 1\n", Errc::syntax_error, 4},
      {"saf 1\nfield Q\ndim 2\nmul 1 1 1 x\n", Errc::syntax_error, 4},
      {"saf 1\nfield Q\ndim 2\nmul 1 1 1 1/0\n", Errc::semantic_error, 4},
      {"saf 1\nfield Q\ndim 2\nmull 1 1 1 1\n", Errc::syntax_error, 4},
      {"saf 1\nfield Q\ndim 2\nunit 1 0\n", Errc::semantic_error, 4},
      {"saf 1\nfield Q\ndim 1\nmul 1 1 1 1\nunit 1\nunit 1\n", Errc::semantic_error, 6},
      {"saf 1\nfield Q\ndim 1\nidem 1\n", Errc::semantic_error, 4},
      {"saf 1\nfield Q\ndim 2\nunit 1\n", Errc::syntax_error, 4},
      {"saf 1\nfield Q\ndim 1\ndim 1\n", Errc::syntax_error, 4},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(error_code(c.text), c.code) << c.text;
    EXPECT_EQ(error_line(c.text), c.line) << c.text;
  }
}

TEST(Saf, AnnotationsValidated) {
  auto a = parse_saf_as<Rational>("saf 1\nfield Q\ndim 1\nunit 1\nidem 1\nmul 1 1 1 1\n");
  ASSERT_TRUE(a.unit());
  ASSERT_TRUE(a.idempotent());
}

TEST(Saf, ScalarTypeMismatch) {
  EXPECT_THROW(parse_saf_as<ModP>("saf 1\nfield Q\ndim 1\n"), Error);
}

TEST(Saf, HandWrittenFileMatchesCatalog) {
  auto text = slurp(std::string(ALTRING_DATA_DIR) + "/mat2_gf3.saf");
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(parse_saf_as<ModP>(text), make_mat2<ModP>(Field::gf(3)));
}

TEST(Saf, RandomAlgebrasRoundTrip) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 1 + rng() % 4;
    Algebra<Rational> a(Q, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (rng() % 4 == 0)
            a.set_coeff(i, j, k, Rational::parse(Q, std::to_string(static_cast<int>(rng() % 11) - 5) + "/" +
                                                        std::to_string(1 + rng() % 6)));
    auto text = serialize_saf(a);
    EXPECT_EQ(parse_saf_as<Rational>(text), a);
    EXPECT_EQ(serialize_saf(parse_saf(text)), text);
  }
}

TEST(LinearMapFile, RoundTrip) {
  auto m = make_mat2<Rational>(Q);
  auto ad = mul_operator(m, m.basis(1), Side::left) - mul_operator(m, m.basis(1), Side::right);
  auto text = serialize_linear_map(ad);
  EXPECT_EQ(parse_linear_map<Rational>(text, Q, 4), ad);
  EXPECT_EQ(serialize_linear_map(parse_linear_map<Rational>(text, Q, 4)), text);
}

TEST(LinearMapFile, ColumnsAreImages) {
  auto text = slurp(std::string(ALTRING_DATA_DIR) + "/mat2_ad_e12.lmap");
  auto d = parse_linear_map<Rational>(text, Q, 4);
  auto m = make_mat2<Rational>(Q);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(d.apply(m.basis(j)), commutator(m, m.basis(1), m.basis(j)));
}

TEST(LinearMapFile, Errors) {
  EXPECT_THROW(parse_linear_map<Rational>("lmap 1\ndim 3\n", Q, 4), ParseError);
  EXPECT_THROW(parse_linear_map<Rational>("lmap 1\ndim 1\nrow 1\nrow 2\n", Q, 1), ParseError);
  EXPECT_THROW(parse_linear_map<Rational>("lmap 1\ndim 2\nrow 1 0\n", Q, 2), ParseError);
  EXPECT_THROW(parse_linear_map<Rational>("map 1\n", Q, 2), ParseError);
  try {
    parse_linear_map<Rational>("lmap 1\ndim 2\nrow 1 0\nrow 1\n", Q, 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(MapTableFile, RoundTripAndTotality) {
  FiniteRing r(make_product2<ModP>(Field::gf(2)));
  MapTable t{{0, 3, 1, 2}};
  auto text = serialize_map_table(r, t);
  EXPECT_EQ(parse_map_table(text, r), t);
  EXPECT_EQ(serialize_map_table(r, parse_map_table(text, r)), text);

  // drop the last entry line
  auto partial = text.substr(0, text.rfind("entry"));
  EXPECT_THROW(parse_map_table(partial, r), ParseError);
  auto dup = text + "entry 0 0 1 1\n";
  try {
    parse_map_table(dup, r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 6u);
  }
}
