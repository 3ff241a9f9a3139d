#ifndef MVSLICE_MV_MAP_HPP
#define MVSLICE_MV_MAP_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "mvslice/errors.hpp"
#include "mvslice/linalg.hpp"
#include "mvslice/matrix.hpp"
#include "mvslice/partition.hpp"
#include "mvslice/poly.hpp"
#include "mvslice/slice.hpp"

namespace mvslice {

using PolyMatrix = Matrix<Poly<Rational>>;

/// g = t^μ + a(t) with a_{ij}(t) = −Σ_k A^k_{ij} t^{k−1}, where A^k_{ij} is
/// the k-th entry of the last row of block (j, i) of A (block-row j,
/// block-column i), k ≤ min(μ_i, μ_j).
inline PolyMatrix mv_phi(const SlicePoint& point) {
  const SliceShape& shape = point.shape();
  const int m = shape.blocks();
  const RatMatrix a = point.matrix();
  const Partition& mu = shape.mu();
  PolyMatrix g(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int width = std::min(mu[i - 1], mu[j - 1]);
      const auto row = static_cast<std::size_t>(shape.block_end(j) - 1);
      std::vector<Rational> coeffs(static_cast<std::size_t>(width));
      for (int k = 1; k <= width; ++k) {
        coeffs[k - 1] = -a(row, static_cast<std::size_t>(shape.block_end(i - 1) + k - 1));
      }
      Poly<Rational> entry(std::move(coeffs));
      if (i == j) entry += Poly<Rational>::monomial(1, mu[i - 1]);
      g(i - 1, j - 1) = std::move(entry);
    }
  }
  return g;
}

/// Inverse of mv_phi: the matrix A of multiplication by t on the quotient
/// module 𝒪^m / g·𝒪^m (the column span of g), written in the basis
/// t^{q−1} e_i ↔ e_i^q of β_μ and transposed.
///
/// The quotient is computed in (ℚ[t]/t^K)^m with K = N + 1. Since t^N
/// annihilates a module of length N, the truncation is exact whenever the
/// quotient really has dimension N, and that is checked.
inline RatMatrix mv_phi_inverse(const PolyMatrix& g, const Partition& mu) {
  const int m = mu.length();
  if (mu.empty()) throw EmptyPartition("mv_phi_inverse needs a nonempty weight");
  if (g.rows() != static_cast<std::size_t>(m) || g.cols() != static_cast<std::size_t>(m)) {
    throw DimensionMismatch("g must be " + std::to_string(m) + "×" + std::to_string(m));
  }
  const int n = mu.size();
  const int trunc = n + 1;
  const auto dim = static_cast<std::size_t>(m * trunc);
  auto coord = [&](int letter, int power) { return static_cast<std::size_t>((letter - 1) * trunc + power); };

  // Columns: first the N candidate basis vectors t^{q−1} e_i, then the
  // generators t^p·(column j of g) of the submodule.
  std::vector<std::vector<Rational>> columns;
  for (int i = 1; i <= m; ++i) {
    for (int q = 1; q <= mu[i - 1]; ++q) {
      std::vector<Rational> v(dim);
      v[coord(i, q - 1)] = 1;
      columns.push_back(std::move(v));
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int p = 0; p < trunc; ++p) {
      std::vector<Rational> v(dim);
      for (int i = 1; i <= m; ++i) {
        const auto& entry = g(i - 1, j - 1);
        for (int d = 0; d <= entry.degree(); ++d) {
          if (d + p < trunc) v[coord(i, d + p)] = entry.coeff(d);
        }
      }
      columns.push_back(std::move(v));
    }
  }
  const RatMatrix system = RatMatrix::from_columns(dim, columns);
  const RatMatrix generators = system.block(0, static_cast<std::size_t>(n), dim, system.cols() - n);
  const std::size_t sub_rank = rank(generators);
  const std::size_t quotient_dim = dim - sub_rank;
  if (quotient_dim != static_cast<std::size_t>(n)) {
    throw QuotientDimensionMismatch("quotient has dimension " + std::to_string(quotient_dim) + ", expected " +
                                    std::to_string(n));
  }
  if (rank(system) != dim) {
    throw QuotientDimensionMismatch("the vectors t^(q-1) e_i do not form a basis of the quotient");
  }

  RatMatrix action(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::size_t col = 0;
  for (int i = 1; i <= m; ++i) {
    for (int q = 1; q <= mu[i - 1]; ++q, ++col) {
      std::vector<Rational> rhs(dim);
      rhs[coord(i, q)] = 1;  // q ≤ μ_i ≤ N < trunc
      const auto sol = solve_affine(system, rhs);
      if (!sol) throw QuotientDimensionMismatch("t·basis vector is not in the span");
      // Basis-vector coordinates are unique because the basis is independent
      // modulo the submodule.
      for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) action(r, col) = sol->point[r];
    }
  }
  return action.transpose();
}

/// mv_phi_inverse as a slice point; raises NotInSlice if the result leaves 𝕋_μ ∩ 𝔫.
inline SlicePoint mv_phi_inverse_point(const PolyMatrix& g, const Partition& mu) {
  return SlicePoint::from_matrix(mu, mv_phi_inverse(g, mu));
}

}  // namespace mvslice

#endif  // MVSLICE_MV_MAP_HPP
