#include <gtest/gtest.h>

#include "mvslice/jordan.hpp"
#include "mvslice/linalg.hpp"
#include "mvslice/matrix.hpp"
#include "mvslice/rational.hpp"
#include "test_support.hpp"

using namespace mvslice;
using oracle::random_matrix;

namespace {

Subspace<Rational> random_subspace(SeededRng& rng, std::size_t ambient) {
  const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ambient)));
  std::vector<std::vector<Rational>> vs;
  for (std::size_t i = 0; i < k; ++i) vs.push_back(random_matrix(rng, 1, ambient, 2).row(0));
  return Subspace<Rational>::span(ambient, vs);
}

std::vector<Rational> e(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v[i - 1] = 1;
  return v;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("3")), "3/1");
  EXPECT_EQ(to_string(parse_rational("-0/5")), "0/1");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RatMatrix::identity(3)), 3u);
  EXPECT_EQ(rank(RatMatrix(4, 4)), 0u);
  EXPECT_EQ(rank(jordan_matrix(Partition{2, 1})), 1u);
}

TEST(Rank, TransposeInvarianceAndMinorOracle) {
  SeededRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 8));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 8));
    const auto k = static_cast<std::size_t>(rng.uniform(0, 4));
    const RatMatrix m = oracle::random_low_rank(rng, r, c, k);
    EXPECT_EQ(rank(m), rank(m.transpose()));
    if (r <= 5 && c <= 5) {
      EXPECT_EQ(static_cast<int>(rank(m)), oracle::minor_rank(m));
    }
  }
}

TEST(Determinant, MatchesLeibniz) {
  SeededRng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const RatMatrix m = trial % 3 == 0 ? oracle::random_low_rank(rng, n, n, n - 1) : random_matrix(rng, n, n);
    EXPECT_EQ(determinant(m), oracle::leibniz_determinant(m));
  }
}

TEST(Matrix, PowerRules) {
  const RatMatrix j = jordan_matrix(Partition{3});
  EXPECT_EQ(power(j, 0), RatMatrix::identity(3));
  EXPECT_TRUE(power(j, 3).is_zero());
  EXPECT_FALSE(power(j, 2).is_zero());
  EXPECT_THROW(power(j, -1), std::invalid_argument);
}

TEST(Jordan, Examples) {
  EXPECT_EQ(jordan_type(jordan_matrix(Partition{2, 1})), Partition({2, 1}));
  EXPECT_EQ(jordan_type(RatMatrix(3, 3)), Partition({1, 1, 1}));
  // The (2,2,1) slice point with a = d = 0, b = c = 1: rank sequence (3,1,0).
  const RatMatrix a = oracle::example_point(0, 1, 1, 0).matrix();
  EXPECT_EQ(rank_sequence(a), (std::vector<std::size_t>{5, 3, 1, 0}));
  EXPECT_EQ(jordan_type(a), Partition({3, 2}));
}

TEST(Jordan, RejectsNonNilpotent) {
  EXPECT_THROW(jordan_type(RatMatrix::identity(2)), NotNilpotent);
  EXPECT_THROW(jordan_type(RatMatrix(2, 3)), DimensionMismatch);
}

TEST(Jordan, RecoversEveryJordanForm) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& nu : partitions_of(n)) EXPECT_EQ(jordan_type(jordan_matrix(nu)), nu) << to_string(nu);
  }
}

TEST(Jordan, ConjugationInvariance) {
  SeededRng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 6));
    const Partition nu = oracle::random_partition(rng, n);
    // A random nilpotent: a conjugate of J_ν, then conjugated again.
    const RatMatrix p = oracle::random_invertible(rng, static_cast<std::size_t>(n));
    const RatMatrix q = oracle::random_invertible(rng, static_cast<std::size_t>(n));
    const RatMatrix a = p * jordan_matrix(nu) * *oracle::inverse(p);
    ASSERT_EQ(jordan_type(a), nu);
    EXPECT_EQ(jordan_type(q * a * *oracle::inverse(q)), jordan_type(a));
  }
}

TEST(Subspace, CanonicalBasisIsEqualityCertificate) {
  const auto u = Subspace<Rational>::span(3, {{1, 1, 0}, {0, 1, 0}});
  const auto v = Subspace<Rational>::span(3, {{2, 0, 0}, {1, 3, 0}, {0, 0, 0}});
  EXPECT_EQ(u, v);
  EXPECT_EQ(u.dim(), 2u);
  EXPECT_TRUE(u.contains(e(3, 1)));
  EXPECT_FALSE(u.contains(e(3, 3)));
  EXPECT_TRUE(Subspace<Rational>::whole(3).contains(u));
}

TEST(Subspace, TrivialIdentities) {
  SeededRng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = random_subspace(rng, 4);
    EXPECT_EQ(preimage(RatMatrix::identity(4), w), w);
    EXPECT_EQ(intersect(w, Subspace<Rational>::whole(4)), w);
  }
}

TEST(Subspace, KernelAtSampledStage) {
  // Leading 3×3 block at stage (2,2) of 112/23 with a = 0.
  const RatMatrix b = oracle::example_point(0, 1, 1, 0).matrix().leading(3);
  EXPECT_EQ(kernel(b), Subspace<Rational>::span(3, {e(3, 1), e(3, 3)}));
}

TEST(Subspace, CodimensionIdentity) {
  const auto u = Subspace<Rational>::span(4, {e(4, 1), e(4, 2)});
  const auto v = Subspace<Rational>::span(4, {e(4, 3), e(4, 4)});
  EXPECT_TRUE(codim_identity_check(u, u));
  EXPECT_TRUE(codim_identity_check(u, v));
  EXPECT_EQ(sum(u, v).dim(), 4u);
  EXPECT_EQ(intersect(u, v).dim(), 0u);
  SeededRng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_TRUE(codim_identity_check(random_subspace(rng, 5), random_subspace(rng, 5)));
  }
}

TEST(Subspace, PreimageDimensionIdentity) {
  SeededRng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 6));
    const RatMatrix m = oracle::random_low_rank(rng, r, c, static_cast<std::size_t>(rng.uniform(0, 4)));
    const auto w = random_subspace(rng, r);
    const auto pre = preimage(m, w);
    EXPECT_EQ(pre.dim(), intersect(w, image(m)).dim() + kernel(m).dim());
    for (const auto& v : pre.basis()) EXPECT_TRUE(w.contains(m * v));
  }
}

TEST(Subspace, AmbientMismatchThrows) {
  EXPECT_THROW(intersect(Subspace<Rational>::zero(2), Subspace<Rational>::zero(3)), DimensionMismatch);
  EXPECT_THROW(preimage(RatMatrix(2, 2), Subspace<Rational>::zero(3)), DimensionMismatch);
}

TEST(SolveAffine, ConsistentAndInconsistentSystems) {
  const auto m = RatMatrix::from_rows({{1, 1, 0}, {0, 0, 1}});
  const auto sol = solve_affine(m, {Rational(2), Rational(3)});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(m * sol->point, (std::vector<Rational>{2, 3}));
  EXPECT_EQ(sol->dim(), 1u);
  EXPECT_FALSE(solve_affine(RatMatrix::from_rows({{1, 1}, {2, 2}}), {Rational(1), Rational(3)}).has_value());
}
