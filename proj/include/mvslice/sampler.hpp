#ifndef MVSLICE_SAMPLER_HPP
#define MVSLICE_SAMPLER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvslice/errors.hpp"
#include "mvslice/jordan.hpp"
#include "mvslice/linalg.hpp"
#include "mvslice/random.hpp"
#include "mvslice/slice.hpp"
#include "mvslice/tableau.hpp"

namespace mvslice {

struct SampleOptions {
  std::uint64_t seed = 0;
  /// Free coefficients are drawn uniformly from [−bound, bound].
  int bound = 10;
  /// Draws per stage before giving up.
  int retries = 1000;
  /// Test hook: at the first stage where it is possible, deliberately pick
  /// a column inside the excluded subspace; later stages then skip the
  /// exclusion test and the result is not certified.
  bool violate_exclusion = false;
};

/// What happened at one stage (i, k) of the construction.
struct StageRecord {
  BoxStep step;
  /// dim (B^{c−1})^{-1} Im B^c.
  std::size_t preimage_dim = 0;
  /// Dimension of the affine set of admissible free entries (before exclusion).
  std::size_t solution_dim = 0;
  /// Dimension of the excluded affine subset; nullopt when it is empty or c = 1.
  std::optional<std::size_t> excluded_dim;
  int draws = 0;
};

struct Sample {
  SlicePoint point;
  std::vector<StageRecord> stages;
  std::uint64_t seed = 0;
  bool exclusion_violated = false;
};

struct StageDimensions {
  std::size_t preimage = 0;
  std::size_t preimage_in_free_rows = 0;
};

namespace detail {

/// (B^{c−1})^{-1} Im B^c; the whole space when c − 1 ≥ nilpotency index.
inline Subspace<Rational> stage_preimage(const RatMatrix& b, int c) {
  return preimage(power(b, c - 1), image(power(b, c)));
}

}  // namespace detail

/// dim((B^{c−1})^{-1} Im B^c) and dim((B^{c−1})^{-1} Im B^c ∩ L) for the new
/// box in column c.
inline StageDimensions stage_dimension(const RatMatrix& b, int c, const Subspace<Rational>& free_rows) {
  if (c < 1) throw std::invalid_argument("box column must be positive");
  const auto p = detail::stage_preimage(b, c);
  return {p.dim(), intersect(p, free_rows).dim()};
}

/// Builds a rational point of X_τ column by column along the boxy ladder.
///
/// At stage (i, k) the new column is s + v with s the superdiagonal unit
/// (k ≥ 2) and v supported on the rows N_j, j < i. With B the matrix built
/// so far and c the column of the new box, the Jordan type grows by a box in
/// column c exactly when B^{c−1}(s+v) ∈ Im B^c and, for c ≥ 2,
/// B^{c−2}(s+v) ∉ Im B^{c−1}. The first condition is linear in v and is
/// solved exactly; the second cuts out a proper subspace and is enforced by
/// redrawing.
inline Sample sample_point(const Tableau& t, const SampleOptions& options = {}) {
  const Weight w = t.weight();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] <= 0 || (i > 0 && w[i] > w[i - 1])) {
      throw WeightMismatch("slice weight " + to_string(w) + " is not a partition with positive parts");
    }
  }
  if (options.bound < 0 || options.retries < 1) throw std::invalid_argument("bound must be ≥ 0 and retries ≥ 1");

  const Partition mu(w);
  const SliceShape shape(mu);
  RatMatrix a = shape.base();
  SeededRng rng(options.seed);
  Sample result{SlicePoint::base_point(mu), {}, options.seed, false};

  for (const auto& step : gt_chain(t).steps) {
    const int col = shape.stage_column(step.letter, step.occurrence);
    const auto n = static_cast<std::size_t>(col - 1);
    const RatMatrix b = a.leading(n);
    const int c = step.col;

    std::vector<Rational> shift(n);
    if (step.occurrence >= 2) shift[n - 1] = 1;
    const auto rows = shape.free_rows(step.letter);
    RatMatrix lift(n, rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) lift(static_cast<std::size_t>(rows[j] - 1), j) = 1;

    const auto target = detail::stage_preimage(b, c);
    const RatMatrix constraint = target.annihilator();
    std::vector<Rational> rhs = constraint * shift;
    for (auto& x : rhs) x = -x;
    const auto admissible = solve_affine(RatMatrix(constraint * lift), rhs);
    if (!admissible) {
      throw IncompatibleStage("no admissible column at stage (" + std::to_string(step.letter) + "," +
                              std::to_string(step.occurrence) + ") of " + to_string(t));
    }

    StageRecord record{step, target.dim(), admissible->dim(), std::nullopt, 0};

    // Annihilator of the excluded subspace; column w is excluded iff it kills w.
    std::optional<RatMatrix> ex_constraint;
    std::optional<AffineSpace<Rational>> excluded_set;
    if (c >= 2) {
      ex_constraint = detail::stage_preimage(b, c - 1).annihilator();
      RatMatrix stacked(constraint.rows() + ex_constraint->rows(), rows.size());
      std::vector<Rational> stacked_rhs(rhs);
      const RatMatrix cl = constraint * lift;
      const RatMatrix el = *ex_constraint * lift;
      for (std::size_t i = 0; i < cl.rows(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) stacked(i, j) = cl(i, j);
      }
      for (std::size_t i = 0; i < el.rows(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) stacked(cl.rows() + i, j) = el(i, j);
      }
      for (const auto& x : *ex_constraint * shift) stacked_rhs.push_back(-x);
      excluded_set = solve_affine(stacked, stacked_rhs);
      if (excluded_set) record.excluded_dim = excluded_set->dim();
    }

    std::vector<Rational> column;
    if (options.violate_exclusion && !result.exclusion_violated && excluded_set) {
      column = shift;
      const auto v = lift * excluded_set->point;
      for (std::size_t r = 0; r < n; ++r) column[r] += v[r];
      result.exclusion_violated = true;
      record.draws = 1;
    } else {
      bool accepted = false;
      while (record.draws < options.retries) {
        ++record.draws;
        std::vector<Rational> coeffs = admissible->point;
        for (const auto& dir : admissible->directions.basis()) {
          const Rational alpha(rng.uniform(-options.bound, options.bound));
          for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] += alpha * dir[j];
        }
        column = shift;
        const auto v = lift * coeffs;
        for (std::size_t r = 0; r < n; ++r) column[r] += v[r];
        if (!ex_constraint || result.exclusion_violated || !is_zero_vector(*ex_constraint * column)) {
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        throw RetriesExhausted("exclusion failed " + std::to_string(options.retries) + " times at stage (" +
                               std::to_string(step.letter) + "," + std::to_string(step.occurrence) + ") of " +
                               to_string(t));
      }
    }
    for (std::size_t r = 0; r < n; ++r) a(r, n) = column[r];
    result.stages.push_back(std::move(record));
  }

  result.point = SlicePoint::from_matrix(mu, a);
  if (!result.exclusion_violated) {
    if (!boxy_membership(result.point, t) || jordan_type(a) != t.shape()) {
      throw std::logic_error("sampled point for " + to_string(t) + " failed certification");
    }
  }
  return result;
}

}  // namespace mvslice

#endif  // MVSLICE_SAMPLER_HPP
