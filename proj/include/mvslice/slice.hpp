#ifndef MVSLICE_SLICE_HPP
#define MVSLICE_SLICE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvslice/errors.hpp"
#include "mvslice/jordan.hpp"
#include "mvslice/matrix.hpp"
#include "mvslice/partition.hpp"
#include "mvslice/rational.hpp"
#include "mvslice/tableau.hpp"

namespace mvslice {

/// Matrix position, 1-based.
struct Position {
  int row = 0;
  int col = 0;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// The slice 𝕋_μ ∩ 𝔫 as a coordinate space. Its points are J_μ + T where T
/// is supported on the free positions: the last row of each block-row i,
/// first min(μ_i, μ_j) columns of each block-column j, strictly above the
/// diagonal. Since μ is weakly decreasing that leaves, for block-row i, the
/// whole of every block-column j > i.
class SliceShape {
 public:
  explicit SliceShape(Partition mu) : mu_(std::move(mu)) {
    if (mu_.empty()) throw EmptyPartition("slice needs a nonempty weight");
    ends_.push_back(0);
    for (int part : mu_.parts()) ends_.push_back(ends_.back() + part);
    for (const auto& pos : slice_positions(mu_)) {
      if (pos.row < pos.col) free_.push_back(pos);
    }
  }

  /// Every position of 𝕋_μ (before intersecting with 𝔫), row-major.
  static std::vector<Position> slice_positions(const Partition& mu) {
    std::vector<int> ends{0};
    for (int part : mu.parts()) ends.push_back(ends.back() + part);
    std::vector<Position> out;
    const int m = mu.length();
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        const int width = std::min(mu[i - 1], mu[j - 1]);
        for (int k = 1; k <= width; ++k) out.push_back({ends[i], ends[j - 1] + k});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const Partition& mu() const noexcept { return mu_; }
  int blocks() const noexcept { return mu_.length(); }
  int size() const noexcept { return ends_.back(); }

  /// N_i = μ_1 + ⋯ + μ_i, with N_0 = 0.
  int block_end(int i) const { return ends_.at(static_cast<std::size_t>(i)); }

  /// Column (and dimension of V^{(i,k)}) introduced at stage (i, k).
  int stage_column(int i, int k) const { return block_end(i - 1) + k; }

  /// Rows that may carry free entries in the columns of block i.
  std::vector<int> free_rows(int i) const {
    std::vector<int> rows;
    for (int j = 1; j < i; ++j) rows.push_back(block_end(j));
    return rows;
  }

  const std::vector<Position>& free_positions() const noexcept { return free_; }

  std::optional<std::size_t> free_index(Position pos) const {
    const auto it = std::lower_bound(free_.begin(), free_.end(), pos);
    if (it == free_.end() || *it != pos) return std::nullopt;
    return static_cast<std::size_t>(it - free_.begin());
  }

  /// J_μ.
  RatMatrix base() const { return jordan_matrix(mu_); }

  friend bool operator==(const SliceShape& a, const SliceShape& b) { return a.mu_ == b.mu_; }

 private:
  Partition mu_;
  std::vector<int> ends_;
  std::vector<Position> free_;
};

inline SliceShape slice_free_positions(const Partition& mu) { return SliceShape(mu); }

/// A point J_μ + T of 𝕋_μ ∩ 𝔫, stored by its free coordinates.
class SlicePoint {
 public:
  SlicePoint(SliceShape shape, std::vector<Rational> values) : shape_(std::move(shape)), values_(std::move(values)) {
    if (values_.size() != shape_.free_positions().size()) {
      throw DimensionMismatch("slice point needs one value per free position");
    }
  }

  /// Zero free coordinates, i.e. J_μ itself.
  static SlicePoint base_point(const Partition& mu) {
    SliceShape shape(mu);
    std::vector<Rational> zeros(shape.free_positions().size());
    return SlicePoint(std::move(shape), std::move(zeros));
  }

  /// Reads the free coordinates of `a`, rejecting matrices outside 𝕋_μ ∩ 𝔫.
  static SlicePoint from_matrix(const Partition& mu, const RatMatrix& a) {
    SliceShape shape(mu);
    const auto n = static_cast<std::size_t>(shape.size());
    if (a.rows() != n || a.cols() != n) throw DimensionMismatch("matrix size does not match the weight");
    const RatMatrix base = shape.base();
    std::vector<Rational> values;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Position pos{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
        if (shape.free_index(pos)) {
          values.push_back(a(i, j));
        } else if (a(i, j) != base(i, j)) {
          throw NotInSlice("entry (" + std::to_string(pos.row) + "," + std::to_string(pos.col) +
                           ") is not a free position of the slice");
        }
      }
    }
    return SlicePoint(std::move(shape), std::move(values));
  }

  const SliceShape& shape() const noexcept { return shape_; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  Rational value_at(Position pos) const {
    const auto idx = shape_.free_index(pos);
    if (!idx) throw std::out_of_range("not a free position");
    return values_[*idx];
  }

  RatMatrix matrix() const {
    RatMatrix a = shape_.base();
    const auto& free = shape_.free_positions();
    for (std::size_t k = 0; k < free.size(); ++k) a(free[k].row - 1, free[k].col - 1) = values_[k];
    return a;
  }

  friend bool operator==(const SlicePoint&, const SlicePoint&) = default;

 private:
  SliceShape shape_;
  std::vector<Rational> values_;
};

namespace detail {

inline void require_weight(const SlicePoint& a, const Tableau& t) {
  const auto w = t.weight();
  if (w != a.shape().mu().parts()) {
    throw WeightMismatch("tableau weight " + to_string(w) + " differs from slice weight " +
                         to_string(a.shape().mu()));
  }
}

}  // namespace detail

/// Jordan types of the leading p×p submatrices, p = 0, 1, …, N.
inline std::vector<Partition> leading_jordan_types(const RatMatrix& a) {
  std::vector<Partition> out{Partition()};
  for (std::size_t p = 1; p <= a.rows(); ++p) out.push_back(jordan_type(a.leading(p)));
  return out;
}

/// A|_{V^{(i)}} ∈ 𝒪_{λ^{(i)}} for every i.
inline bool blocky_membership(const SlicePoint& a, const Tableau& t) {
  detail::require_weight(a, t);
  const auto chain = gt_chain(t);
  const RatMatrix m = a.matrix();
  for (int i = 1; i <= a.shape().blocks(); ++i) {
    const auto n = static_cast<std::size_t>(a.shape().block_end(i));
    if (jordan_type(m.leading(n)) != chain.blocks[i - 1]) return false;
  }
  return true;
}

/// First stage (i, k) at which A|_{V^{(i,k)}} ∉ 𝒪_{λ^{(i,k)}}, if any.
inline std::optional<BoxStep> first_boxy_failure(const SlicePoint& a, const Tableau& t) {
  detail::require_weight(a, t);
  const auto chain = gt_chain(t);
  const RatMatrix m = a.matrix();
  for (const auto& step : chain.steps) {
    const auto n = static_cast<std::size_t>(a.shape().stage_column(step.letter, step.occurrence));
    if (jordan_type(m.leading(n)) != step.shape) return step;
  }
  return std::nullopt;
}

/// A|_{V^{(i,k)}} ∈ 𝒪_{λ^{(i,k)}} for every stage (i, k).
inline bool boxy_membership(const SlicePoint& a, const Tableau& t) { return !first_boxy_failure(a, t); }

/// Tableau read off the block Jordan types λ(A|_{V^{(i)}}) only.
inline Tableau block_tableau(const SlicePoint& a) {
  const RatMatrix m = a.matrix();
  std::vector<Partition> blocks;
  for (int i = 1; i <= a.shape().blocks(); ++i) {
    blocks.push_back(jordan_type(m.leading(static_cast<std::size_t>(a.shape().block_end(i)))));
  }
  return tableau_from_blocks(blocks);
}

/// Tableau whose boxy ladder is the chain of Jordan types of the leading
/// submatrices. Raises NotASemistandardChain when that chain is not the
/// ladder of any tableau.
inline Tableau tableau_of(const SlicePoint& a) {
  const auto types = leading_jordan_types(a.matrix());
  const SliceShape& shape = a.shape();
  std::vector<Partition> blocks;
  for (int i = 1; i <= shape.blocks(); ++i) {
    int last_col = 0;
    for (int k = 1; k <= shape.mu()[i - 1]; ++k) {
      const auto p = static_cast<std::size_t>(shape.stage_column(i, k));
      const Partition& before = types[p - 1];
      const Partition& after = types[p];
      if (after.size() != before.size() + 1) throw NotASemistandardChain("leading types do not grow by one box");
      int row = 0;
      while (after[row] == before[row]) ++row;
      const int col = after[row];
      if (col <= last_col) {
        throw NotASemistandardChain("box columns do not increase within block " + std::to_string(i) + " at stage (" +
                                    std::to_string(i) + "," + std::to_string(k) + ")");
      }
      last_col = col;
    }
    blocks.push_back(types[static_cast<std::size_t>(shape.block_end(i))]);
  }
  return tableau_from_blocks(blocks);
}

}  // namespace mvslice

#endif  // MVSLICE_SLICE_HPP
