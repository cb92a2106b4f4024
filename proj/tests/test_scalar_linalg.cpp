#include <altring/linalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace altring;

namespace {

const Field Q = Field::rationals();

template <FieldScalar S>
Matrix<S> mat(const Field& f, std::vector<std::vector<long long>> rows) {
  std::vector<Vec<S>> rs;
  for (auto& r : rows) {
    Vec<S> v;
    for (auto x : r) v.push_back(S::from_int(f, x));
    rs.push_back(v);
  }
  return Matrix<S>::from_rows(f, rows.empty() ? 0 : rows[0].size(), rs);
}

template <FieldScalar S>
Vec<S> vec(const Field& f, std::vector<long long> xs) {
  Vec<S> v;
  for (auto x : xs) v.push_back(S::from_int(f, x));
  return v;
}

template <FieldScalar S>
Matrix<S> random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Matrix<S> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = S::from_int(f, d(rng));
  return m;
}

// Rank-deficient matrices are more interesting: product of two thin factors.
template <FieldScalar S>
Matrix<S> random_low_rank(const Field& f, std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
  return random_matrix<S>(f, r, k, rng) * random_matrix<S>(f, k, c, rng);
}

}  // namespace

TEST(Rational, StoredInLowestTerms) {
  EXPECT_EQ(Rational::parse(Q, "6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse(Q, "-10/5").to_string(), "-2");
  EXPECT_EQ(Rational::parse(Q, "0/7").to_string(), "0");
  EXPECT_THROW(Rational::parse(Q, "1/-2"), Error);
  EXPECT_THROW(Rational::parse(Q, "1/0"), Error);
  EXPECT_THROW(Rational::parse(Q, "x"), Error);
  EXPECT_THROW(Rational(0).inverse(), Error);
}

TEST(Rational, ArbitraryPrecision) {
  auto big = Rational::parse(Q, "123456789012345678901234567890");
  auto sq = big * big;
  EXPECT_EQ(sq.to_string(), "15241578753238836750495351562536198787501905199875019052100");
  EXPECT_EQ((sq / big).to_string(), big.to_string());
}

TEST(ModP, FieldAxiomsInGF7) {
  const Field f = Field::gf(7);
  for (long long a = 1; a < 7; ++a) {
    auto x = ModP::from_int(f, a);
    EXPECT_TRUE((x * x.inverse()).is_one());
  }
  EXPECT_EQ(ModP::from_int(f, -1).to_string(), "6");
  EXPECT_EQ(ModP::parse(f, "1/3").to_string(), "5");  // 3 * 5 = 15 = 1 mod 7
  EXPECT_THROW(ModP::parse(f, "1/7"), Error);
}

TEST(ModP, ModulusIsValidated) {
  EXPECT_THROW(Field::gf(4), Error);
  EXPECT_THROW(Field::gf(1), Error);
  EXPECT_NO_THROW(Field::gf(2147483647));
  try {
    Field::gf(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_prime);
  }
}

TEST(ModP, MixedModuliRejected) {
  auto a = ModP::one(Field::gf(3));
  auto b = ModP::one(Field::gf(5));
  EXPECT_THROW(a + b, Error);
}

TEST(Rref, ProportionalRows) {
  auto r = rref(mat<Rational>(Q, {{2, 4}, {1, 2}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.rref, mat<Rational>(Q, {{1, 2}, {0, 0}}));
}

TEST(Rref, Identity) {
  auto id = Matrix<Rational>::identity(Q, 3);
  auto r = rref(id);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.rref, id);
}

TEST(Rref, OverGF2) {
  const Field f = Field::gf(2);
  auto r = rref(mat<ModP>(f, {{1, 1}, {1, 0}}));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.rref, Matrix<ModP>::identity(f, 2));
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Matrix<Rational>(Q, 2, 2)).dim(), 2u);
  EXPECT_TRUE(kernel(Matrix<Rational>::identity(Q, 3)).is_zero());
  auto k = kernel(mat<Rational>(Q, {{1, 2}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k, Subspace<Rational>::span(Q, 2, {vec<Rational>(Q, {-2, 1})}));
  EXPECT_TRUE(is_zero_vec<Rational>(mat<Rational>(Q, {{1, 2}}).apply(k.basis().row_vec(0))));
}

TEST(Solve, Examples) {
  auto s1 = solve(Matrix<Rational>::identity(Q, 2), vec<Rational>(Q, {1, 2}));
  ASSERT_TRUE(s1);
  EXPECT_EQ(s1->particular, vec<Rational>(Q, {1, 2}));
  EXPECT_TRUE(s1->kernel.is_zero());

  auto m = mat<Rational>(Q, {{1, 1}});
  auto s2 = solve(m, vec<Rational>(Q, {3}));
  ASSERT_TRUE(s2);
  EXPECT_EQ(m.apply(s2->particular), vec<Rational>(Q, {3}));
  EXPECT_EQ(s2->kernel, Subspace<Rational>::span(Q, 2, {vec<Rational>(Q, {1, -1})}));

  EXPECT_FALSE(solve(mat<Rational>(Q, {{1}, {1}}), vec<Rational>(Q, {1, 2})));
}

TEST(SubspaceOps, Examples) {
  auto e = [&](std::size_t i) { return unit_vec<Rational>(Q, 3, i); };
  auto a = Subspace<Rational>::span(Q, 3, {e(0)});
  auto b = Subspace<Rational>::span(Q, 3, {e(1)});
  EXPECT_EQ(subspace_sum(a, b).dim(), 2u);
  auto c = Subspace<Rational>::span(Q, 3, {e(0), e(1)});
  auto d = Subspace<Rational>::span(Q, 3, {e(1), e(2)});
  EXPECT_EQ(subspace_intersect(c, d), Subspace<Rational>::span(Q, 3, {e(1)}));
  EXPECT_TRUE(Subspace<Rational>::span(Q, 2, {vec<Rational>(Q, {1, 1})}).contains(vec<Rational>(Q, {2, 2})));
  EXPECT_THROW(subspace_sum(a, Subspace<Rational>(Q, 2)), Error);
}

TEST(SubspaceOps, EqualityIsCanonical) {
  auto a = Subspace<Rational>::span(Q, 3, {vec<Rational>(Q, {1, 2, 3}), vec<Rational>(Q, {0, 1, 1})});
  auto b = Subspace<Rational>::span(Q, 3, {vec<Rational>(Q, {1, 3, 4}), vec<Rational>(Q, {2, 5, 7})});
  EXPECT_EQ(a, b);
}

template <class S>
class LinalgProperties : public ::testing::Test {};

struct QTag { using S = Rational; static Field field() { return Field::rationals(); } };
struct GF3Tag { using S = ModP; static Field field() { return Field::gf(3); } };
struct GF101Tag { using S = ModP; static Field field() { return Field::gf(101); } };
using FieldTags = ::testing::Types<QTag, GF3Tag, GF101Tag>;
TYPED_TEST_SUITE(LinalgProperties, FieldTags);

TYPED_TEST(LinalgProperties, RrefIdempotentAndKernelAnnihilates) {
  using S = typename TypeParam::S;
  const Field f = TypeParam::field();
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6, k = rng() % 5;
    auto m = random_low_rank<S>(f, r, c, k, rng);
    auto once = rref(m);
    auto twice = rref(once.rref);
    EXPECT_EQ(once.rref, twice.rref);
    auto ker = kernel(m);
    EXPECT_EQ(ker.dim() + once.rank, c);
    for (const auto& v : ker.basis_vectors()) EXPECT_TRUE(is_zero_vec<S>(m.apply(v)));
  }
}

TYPED_TEST(LinalgProperties, DimensionFormula) {
  using S = typename TypeParam::S;
  const Field f = TypeParam::field();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 5;
    auto a = Subspace<S>::from_rows(random_low_rank<S>(f, 1 + rng() % n, n, rng() % n, rng));
    auto b = Subspace<S>::from_rows(random_low_rank<S>(f, 1 + rng() % n, n, rng() % n, rng));
    auto sum = subspace_sum(a, b), meet = subspace_intersect(a, b);
    EXPECT_EQ(a.dim() + b.dim(), sum.dim() + meet.dim());
    EXPECT_TRUE(a.contains(meet));
    EXPECT_TRUE(b.contains(meet));
    EXPECT_TRUE(sum.contains(a));
    EXPECT_TRUE(sum.contains(b));
  }
}

TYPED_TEST(LinalgProperties, SolveAndInverse) {
  using S = typename TypeParam::S;
  const Field f = TypeParam::field();
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 5;
    auto m = random_matrix<S>(f, n, n, rng);
    auto inv = inverse(m);
    if (rank(m) == n) {
      ASSERT_TRUE(inv);
      EXPECT_EQ(m * *inv, (Matrix<S>::identity(f, n)));
      EXPECT_EQ(*inv * m, (Matrix<S>::identity(f, n)));
    } else {
      EXPECT_FALSE(inv);
    }
    auto x = random_matrix<S>(f, n, 1, rng).col_vec(0);
    auto b = m.apply(x);
    auto sol = solve(m, b);
    ASSERT_TRUE(sol);
    EXPECT_EQ(m.apply(sol->particular), b);
    EXPECT_TRUE(sol->kernel.contains(x - sol->particular));
  }
}

TYPED_TEST(LinalgProperties, RowReducerMatchesBatchRref) {
  using S = typename TypeParam::S;
  const Field f = TypeParam::field();
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t c = 1 + rng() % 6;
    auto m = random_low_rank<S>(f, 1 + rng() % 8, c, rng() % 4, rng);
    RowReducer<S> red(f, c);
    std::size_t independent = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) independent += red.add(m.row_vec(i));
    EXPECT_EQ(independent, rank(m));
    EXPECT_EQ(Subspace<S>::from_reducer(red), Subspace<S>::from_rows(m));
    EXPECT_EQ(kernel(red), kernel(m));
  }
}

TYPED_TEST(LinalgProperties, AnnihilatorDuality) {
  using S = typename TypeParam::S;
  const Field f = TypeParam::field();
  std::mt19937_64 rng(19);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 6;
    auto v = Subspace<S>::from_rows(random_low_rank<S>(f, 1 + rng() % n, n, rng() % (n + 1), rng));
    auto ann = annihilator(v);
    EXPECT_EQ(ann.dim() + v.dim(), n);
    EXPECT_EQ(annihilator(ann), v);
  }
}
