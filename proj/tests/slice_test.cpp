#include <set>

#include <gtest/gtest.h>

#include "mvslice/jordan.hpp"
#include "mvslice/sampler.hpp"
#include "mvslice/slice.hpp"
#include "test_support.hpp"

using namespace mvslice;
using oracle::example_point;

namespace {

std::vector<Position> positions(std::initializer_list<std::pair<int, int>> list) {
  std::vector<Position> out;
  for (auto [r, c] : list) out.push_back({r, c});
  return out;
}

const Tableau kExample = parse_tableau("112/23");

}  // namespace

TEST(SliceShape, FreePositions) {
  EXPECT_EQ(slice_free_positions({2, 2, 1}).free_positions(), positions({{2, 3}, {2, 4}, {2, 5}, {4, 5}}));
  EXPECT_TRUE(slice_free_positions({5}).free_positions().empty());
  EXPECT_EQ(slice_free_positions({1, 1}).free_positions(), positions({{1, 2}}));
  EXPECT_THROW(SliceShape{Partition{}}, EmptyPartition);
}

TEST(SliceShape, AllOnesWeightIsStrictUpperTriangle) {
  for (int n = 1; n <= 6; ++n) {
    const auto shape = SliceShape(Partition(std::vector<int>(n, 1)));
    EXPECT_EQ(shape.free_positions().size(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(SliceShape, UncutPositionCountIsSliceDimension) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : partitions_of(n)) {
      int dim = 0;
      for (int i = 1; i <= mu.length(); ++i) dim += (2 * i - 1) * mu[i - 1];
      EXPECT_EQ(static_cast<int>(SliceShape::slice_positions(mu).size()), dim) << to_string(mu);
    }
  }
}

TEST(SliceShape, FreeRowsAreEarlierBlockEnds) {
  const SliceShape shape({3, 2, 2, 1});
  EXPECT_EQ(shape.free_rows(1), (std::vector<int>{}));
  EXPECT_EQ(shape.free_rows(3), (std::vector<int>{3, 5}));
  EXPECT_EQ(shape.free_rows(4), (std::vector<int>{3, 5, 7}));
}

TEST(SlicePoint, MatrixAndFromMatrixRoundTrip) {
  const auto p = example_point(2, 3, 5, 7);
  const RatMatrix a = p.matrix();
  EXPECT_EQ(a(0, 1), 1);
  EXPECT_EQ(a(1, 2), 2);
  EXPECT_EQ(a(1, 4), 5);
  EXPECT_EQ(a(3, 4), 7);
  EXPECT_TRUE(a.is_strictly_upper());
  EXPECT_EQ(SlicePoint::from_matrix({2, 2, 1}, a).values(), p.values());
  RatMatrix bad = a;
  bad(0, 3) = 1;
  EXPECT_THROW(SlicePoint::from_matrix({2, 2, 1}, bad), NotInSlice);
}

TEST(Membership, WorkedExample) {
  EXPECT_TRUE(blocky_membership(example_point(0, 1, 1, 0), kExample));
  EXPECT_FALSE(blocky_membership(example_point(0, 0, 1, 0), kExample));
  EXPECT_FALSE(blocky_membership(example_point(0, 1, 0, 0), kExample));
  EXPECT_TRUE(boxy_membership(example_point(0, 1, 1, 0), kExample));
  EXPECT_FALSE(boxy_membership(example_point(0, 1, 1, 0), parse_tableau("113/22")));
  const auto failure = first_boxy_failure(example_point(0, 1, 1, 0), parse_tableau("113/22"));
  ASSERT_TRUE(failure.has_value());
  EXPECT_EQ(failure->letter, 2);
  EXPECT_EQ(failure->occurrence, 2);
}

TEST(Membership, BasePoint) {
  const auto j = SlicePoint::base_point({2, 2, 1});
  const auto minimal = parse_tableau("11/22/3");
  EXPECT_TRUE(blocky_membership(j, minimal));
  EXPECT_TRUE(boxy_membership(j, minimal));
  EXPECT_EQ(leading_jordan_types(j.matrix())[3], Partition({2, 1}));
}

TEST(Membership, WeightMismatchThrows) {
  EXPECT_THROW(blocky_membership(example_point(0, 1, 1, 0), parse_tableau("12/3")), WeightMismatch);
}

TEST(TableauOf, Examples) {
  EXPECT_EQ(to_string(tableau_of(example_point(0, 1, 1, 0))), "112/23");
  EXPECT_EQ(to_string(tableau_of(SlicePoint::base_point({2, 2, 1}))), "11/22/3");
  // All free entries 1: leading types (1),(2),(3),(4),(5).
  EXPECT_EQ(to_string(tableau_of(example_point(1, 1, 1, 1))), "11223");
}

TEST(Properties, BlockyImpliesBoxyOnRandomPoints) {
  SeededRng rng(21);
  int instances = 0;
  std::set<std::string> seen;
  while (instances < 300) {
    const Partition mu = oracle::random_partition(rng, static_cast<int>(rng.uniform(2, 6)));
    const auto p = oracle::random_slice_point(rng, mu);
    Tableau t;
    try {
      t = block_tableau(p);
    } catch (const NotASemistandardChain&) {
      continue;
    }
    ++instances;
    seen.insert(to_string(t));
    ASSERT_TRUE(blocky_membership(p, t));
    EXPECT_TRUE(boxy_membership(p, t)) << to_string(t);
  }
  EXPECT_GT(seen.size(), 20u);
}

TEST(Properties, MonotoneColumnsWithinBlocks) {
  SeededRng rng(22);
  int instances = 0;
  while (instances < 300) {
    const Partition mu = oracle::random_partition(rng, static_cast<int>(rng.uniform(2, 6)));
    const auto p = oracle::random_slice_point(rng, mu);
    Tableau t;
    try {
      t = block_tableau(p);
    } catch (const NotASemistandardChain&) {
      continue;
    }
    ++instances;
    const auto types = leading_jordan_types(p.matrix());
    for (int i = 1; i <= mu.length(); ++i) {
      int last = 0;
      for (int k = 1; k <= mu[i - 1]; ++k) {
        const auto c = static_cast<std::size_t>(p.shape().stage_column(i, k));
        int row = 0;
        while (types[c][row] == types[c - 1][row]) ++row;
        EXPECT_GT(types[c][row], last) << to_string(t) << " block " << i;
        last = types[c][row];
      }
    }
    EXPECT_EQ(tableau_of(p), t);
  }
}

TEST(Sampler, WorkedExampleHasExpectedZeroPattern) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = sample_point(kExample, {seed});
    const auto& v = s.point.values();
    EXPECT_EQ(v[0], 0);
    EXPECT_NE(v[1], 0);
    EXPECT_NE(v[2], 0);
    EXPECT_EQ(v[3], 0);
    EXPECT_EQ(s.seed, seed);
  }
}

TEST(Sampler, StageDimensionsOfWorkedExample) {
  const auto s = sample_point(kExample, {7});
  std::vector<std::size_t> pre, sol;
  for (const auto& st : s.stages) {
    pre.push_back(st.preimage_dim);
    sol.push_back(st.solution_dim);
  }
  EXPECT_EQ(pre, (std::vector<std::size_t>{0, 1, 1, 3, 3}));
  EXPECT_EQ(sol, (std::vector<std::size_t>{0, 0, 0, 1, 1}));
}

TEST(Sampler, StageDimensionFunction) {
  const RatMatrix b = example_point(0, 1, 1, 0).matrix();
  // Stage (2,2): B is the leading 3×3 block, box in column 3, L = span{e_2}.
  const auto l3 = Subspace<Rational>::span(3, {{0, 1, 0}});
  const auto d22 = stage_dimension(b.leading(3), 3, l3);
  EXPECT_EQ(d22.preimage, 3u);
  EXPECT_EQ(d22.preimage_in_free_rows, 1u);
  // Stage (3,1): leading 4×4 block, box in column 2, L = span{e_2, e_4}.
  const auto l4 = Subspace<Rational>::span(4, {{0, 1, 0, 0}, {0, 0, 0, 1}});
  const auto d31 = stage_dimension(b.leading(4), 2, l4);
  EXPECT_EQ(d31.preimage, 3u);
  EXPECT_EQ(d31.preimage_in_free_rows, 1u);
  EXPECT_EQ(stage_dimension(jordan_matrix(Partition{4}), 1, Subspace<Rational>::zero(4)).preimage_in_free_rows, 0u);
}

TEST(Sampler, MinimalTableauGivesBasePoint) {
  for (const auto& mu : {Partition{2, 2, 1}, Partition{3, 1}, Partition{4}, Partition{1, 1, 1}}) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= mu.length(); ++i) rows.emplace_back(mu[i - 1], i);
    const auto s = sample_point(Tableau(rows), {3});
    EXPECT_EQ(s.point.matrix(), jordan_matrix(mu)) << to_string(mu);
  }
}

TEST(Sampler, Deterministic) {
  const auto t = parse_tableau("1123/24/3");
  EXPECT_EQ(sample_point(t, {99}).point.values(), sample_point(t, {99}).point.values());
  EXPECT_NE(sample_point(t, {99}).point.values(), sample_point(t, {100}).point.values());
}

TEST(Sampler, SoundAcrossAllTableauxUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        for (const auto& t : enumerate_tableaux(lambda, mu.parts())) {
          for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto s = sample_point(t, {seed});
            ASSERT_TRUE(boxy_membership(s.point, t)) << to_string(t) << " seed " << seed;
            ASSERT_EQ(jordan_type(s.point.matrix()), lambda);
            int total = 0;
            for (const auto& st : s.stages) {
              EXPECT_EQ(static_cast<int>(st.solution_dim), st.step.letter - st.step.row);
              total += static_cast<int>(st.solution_dim);
            }
            EXPECT_EQ(total, dimension_formula(lambda, mu.parts(), mu.length()));
          }
        }
      }
    }
  }
}

TEST(Sampler, ExclusionHookBreaksMembership) {
  const auto s = sample_point(kExample, {1, 10, 1000, true});
  EXPECT_TRUE(s.exclusion_violated);
  EXPECT_FALSE(boxy_membership(s.point, kExample));
}

TEST(Sampler, RejectsBadInput) {
  EXPECT_THROW(sample_point(parse_tableau("12/2"), {}), WeightMismatch);
  EXPECT_THROW(sample_point(kExample, {0, 10, 0}), std::invalid_argument);
  EXPECT_THROW(sample_point(kExample, {0, -1}), std::invalid_argument);
}
