#include <gtest/gtest.h>

#include "mvslice/lusztig_geometric.hpp"
#include "mvslice/mv_map.hpp"
#include "mvslice/sampler.hpp"
#include "test_support.hpp"

using namespace mvslice;
using oracle::example_point;
using oracle::poly;
using P = Poly<Rational>;

namespace {

PolyMatrix diag(const Partition& mu) {
  PolyMatrix g(static_cast<std::size_t>(mu.length()), static_cast<std::size_t>(mu.length()));
  for (int i = 0; i < mu.length(); ++i) g(i, i) = P::monomial(1, mu[i]);
  return g;
}

// The worked-example image with a = d = 0, b = c = 1.
PolyMatrix example_g() {
  return PolyMatrix::from_rows({{poly({0, 0, 1}), P(), P()}, {poly({0, -1}), poly({0, 0, 1}), P()}, {poly({-1}), P(), poly({0, 1})}});
}

// Minimum over column subsets of Leibniz minors on rows a..b.
Valuation d_oracle(const PolyMatrix& g, int a, int b) {
  const std::size_t k = static_cast<std::size_t>(b - a + 1);
  Valuation best = Valuation::infinity();
  std::vector<bool> sel(g.cols(), false);
  std::fill(sel.begin(), sel.begin() + k, true);
  do {
    PolyMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = 0;
      for (std::size_t c = 0; c < g.cols(); ++c) {
        if (sel[c]) sub(i, j++) = g(static_cast<std::size_t>(a - 1) + i, c);
      }
    }
    const auto v = oracle::leibniz_determinant(sub).valuation();
    if (v < best) best = v;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return best;
}

}  // namespace

TEST(Poly, ArithmeticAndValuation) {
  const P p = poly({0, 1, 2});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.valuation(), Valuation(1));
  EXPECT_EQ(P().valuation(), Valuation::infinity());
  EXPECT_FALSE(Valuation::infinity().is_finite());
  EXPECT_TRUE(Valuation(1000000) < Valuation::infinity());
  EXPECT_EQ(p * poly({1, -1}), poly({0, 1, 1, -2}));
  EXPECT_EQ(p - p, P());
  EXPECT_EQ(p.truncated(2), poly({0, 1}));
  const auto [q, r] = divmod(poly({1, 0, 1}), poly({1, 1}));
  EXPECT_EQ(q * poly({1, 1}) + r, poly({1, 0, 1}));
  EXPECT_EQ(r.degree(), 0);
  EXPECT_EQ(to_string(Valuation::infinity()), "inf");
}

TEST(MvPhi, WorkedExampleFamily) {
  SeededRng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int a = static_cast<int>(rng.uniform(-9, 9)), b = static_cast<int>(rng.uniform(-9, 9));
    const int c = static_cast<int>(rng.uniform(-9, 9)), d = static_cast<int>(rng.uniform(-9, 9));
    const auto g = mv_phi(example_point(a, b, c, d));
    const auto expected = PolyMatrix::from_rows({{poly({0, 0, 1}), P(), P()},
                                                 {poly({-a, -b}), poly({0, 0, 1}), P()},
                                                 {poly({-c}), poly({-d}), poly({0, 1})}});
    EXPECT_EQ(g, expected);
  }
}

TEST(MvPhi, TrivialCases) {
  EXPECT_EQ(mv_phi(SlicePoint::base_point({4})), diag({4}));
  EXPECT_EQ(mv_phi(SlicePoint::base_point({1, 1, 1})), diag({1, 1, 1}));
}

TEST(MvPhiInverse, Examples) {
  EXPECT_EQ(mv_phi_inverse(example_g(), {2, 2, 1}), example_point(0, 1, 1, 0).matrix());
  EXPECT_TRUE(mv_phi_inverse(diag({1, 1, 1, 1}), {1, 1, 1, 1}).is_zero());
  EXPECT_EQ(mv_phi_inverse(diag({5}), {5}), jordan_matrix(Partition{5}));
  EXPECT_EQ(mv_phi_inverse(diag({3, 2, 2}), {3, 2, 2}), jordan_matrix(Partition{3, 2, 2}));
}

TEST(MvPhiInverse, RejectsWrongQuotientDimension) {
  EXPECT_THROW(mv_phi_inverse(diag({2, 1}), {3}), DimensionMismatch);
  EXPECT_THROW(mv_phi_inverse(diag({2, 1}), {1, 1}), QuotientDimensionMismatch);
  EXPECT_THROW(mv_phi_inverse(diag({2, 2}), {2, 1}), QuotientDimensionMismatch);
}

TEST(MvPhiInverse, LongJordanBlockOverSmallBlocks) {
  // λ = (3) over μ = (1,1,1): needs truncation beyond t^{μ_1 + 1}.
  const auto s = sample_point(parse_tableau("123"), {5});
  const auto g = mv_phi(s.point);
  EXPECT_EQ(mv_phi_inverse(g, {1, 1, 1}), s.point.matrix());
}

TEST(MvPhiInverse, PerturbedImageDoesNotRoundTrip) {
  const auto s = sample_point(parse_tableau("112/23"), {7});
  PolyMatrix g = mv_phi(s.point);
  g(1, 0) += P::monomial(1, 3);
  bool round_trips = true;
  try {
    round_trips = mv_phi(mv_phi_inverse_point(g, {2, 2, 1})) == g;
  } catch (const Error&) {
    round_trips = false;
  }
  EXPECT_FALSE(round_trips);
}

TEST(DFunction, WorkedExample) {
  const auto g = example_g();
  EXPECT_EQ(d_function(g, 1, 1), Valuation(2));
  EXPECT_EQ(d_function(g, 2, 2), Valuation(1));
  EXPECT_EQ(d_function(g, 3, 3), Valuation(0));
  EXPECT_EQ(d_function(g, 1, 2), Valuation(4));
  EXPECT_EQ(d_function(g, 2, 3), Valuation(2));
  EXPECT_EQ(d_function(g, 1, 3), Valuation(5));
  EXPECT_EQ(d_function(g, 3, 2), Valuation(0));
}

TEST(DFunction, MatchesLeibnizOracleOnSamples) {
  for (const auto& t : {"112/23", "113/22", "1123/24/3", "1122/33/4", "1234", "13/2/4"}) {
    const auto tab = parse_tableau(t);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = mv_phi(sample_point(tab, {seed}).point);
      const int m = static_cast<int>(g.rows());
      for (int a = 1; a <= m; ++a) {
        for (int b = a; b <= m; ++b) EXPECT_EQ(d_function(g, a, b), d_oracle(g, a, b)) << t << " " << a << b;
      }
    }
  }
}

TEST(GeometricLusztig, Examples) {
  const auto gd = geometric_lusztig(example_g());
  EXPECT_EQ(gd.datum.entries(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(gd.datum, lusztig_datum(parse_tableau("112/23")));
  EXPECT_FALSE(genericity_defect(example_g()).has_value());

  const Partition mu{3, 2, 2, 1};
  const auto diagonal = geometric_lusztig(diag(mu));
  for (int v : diagonal.datum.entries()) EXPECT_EQ(v, 0);
  EXPECT_EQ(diagonal.at(2, 4), Valuation(5));
  EXPECT_TRUE(geometric_lusztig(diag({4})).datum.entries().empty());
}

TEST(GeometricLusztig, InfiniteDIsNotGeneric) {
  const auto g = PolyMatrix::from_rows({{P(), P()}, {P(), P(1)}});
  EXPECT_EQ(d_function(g, 1, 1), Valuation::infinity());
  EXPECT_THROW(geometric_lusztig(g), NotGeneric);
}

TEST(GeometricLusztig, DegenerateSliceGivesDefect) {
  // b = 0 lies outside the component of 112/23; the D-table is not generic.
  const auto g = mv_phi(example_point(0, 0, 1, 0));
  const auto gd = geometric_lusztig(g);
  EXPECT_NE(gd.datum, lusztig_datum(parse_tableau("112/23")));
}

TEST(CoweightChecks, Examples) {
  const auto g = example_g();
  EXPECT_EQ(determinant(g).valuation(), Valuation(5));
  EXPECT_TRUE(coweight_checks(g, example_point(0, 1, 1, 0).matrix(), {3, 2}, {2, 2, 1}).ok());
  const Partition mu{2, 2, 1};
  EXPECT_TRUE(coweight_checks(diag(mu), jordan_matrix(mu), mu, mu).ok());
}

TEST(CoweightChecks, PerturbedDiagonalFails) {
  PolyMatrix g = example_g();
  g(1, 1) += P(1);
  const auto report = coweight_checks(g, example_point(0, 1, 1, 0).matrix(), {3, 2}, {2, 2, 1});
  EXPECT_FALSE(report.ok());
  PolyMatrix upper = example_g();
  upper(0, 2) = P(1);
  EXPECT_FALSE(coweight_checks(upper, example_point(0, 1, 1, 0).matrix(), {3, 2}, {2, 2, 1}).ok());
}

TEST(Properties, DegreeBoundsAndCoweightOnSamples) {
  int instances = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        for (const auto& t : enumerate_tableaux(lambda, mu.parts())) {
          const auto s = sample_point(t, {static_cast<std::uint64_t>(instances)});
          const auto g = mv_phi(s.point);
          const auto report = coweight_checks(g, s.point.matrix(), lambda, mu);
          EXPECT_TRUE(report.ok()) << to_string(t) << ": " << (report.ok() ? "" : report.failures.front());
          for (int i = 1; i <= mu.length(); ++i) {
            for (int j = 1; j < i; ++j) EXPECT_LT(g(i - 1, j - 1).degree(), mu[j - 1]);
          }
          ++instances;
        }
      }
    }
  }
  EXPECT_GE(instances, 100);
}

TEST(Properties, RoundTripBothWays) {
  int points = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        for (const auto& t : enumerate_tableaux(lambda, mu.parts())) {
          for (std::uint64_t seed = 0; seed < 2; ++seed, ++points) {
            const auto s = sample_point(t, {seed});
            const auto g = mv_phi(s.point);
            const auto back = mv_phi_inverse_point(g, mu);
            EXPECT_EQ(back.values(), s.point.values()) << to_string(t);
            EXPECT_EQ(mv_phi(back), g);
          }
        }
      }
    }
  }
  EXPECT_GE(points, 100);
}
