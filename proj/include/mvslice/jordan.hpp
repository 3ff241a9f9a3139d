#ifndef MVSLICE_JORDAN_HPP
#define MVSLICE_JORDAN_HPP

#include <string>
#include <vector>

#include "mvslice/errors.hpp"
#include "mvslice/linalg.hpp"
#include "mvslice/matrix.hpp"
#include "mvslice/partition.hpp"

namespace mvslice {

/// Ranks of A^0, A^1, …, stopping at the first zero power (nilpotent A).
template <typename F>
std::vector<std::size_t> rank_sequence(const Matrix<F>& a) {
  if (!a.is_square()) throw DimensionMismatch("rank sequence of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> ranks{n};
  Matrix<F> p = Matrix<F>::identity(n);
  while (ranks.back() > 0) {
    if (ranks.size() > n) throw NotNilpotent("A^" + std::to_string(n) + " is nonzero");
    p = p * a;
    const auto r = rank(p);
    if (r == ranks.back()) throw NotNilpotent("rank sequence stabilizes at " + std::to_string(r));
    ranks.push_back(r);
  }
  return ranks;
}

/// Jordan type of a nilpotent matrix: the number of parts ≥ p equals
/// rk A^{p−1} − rk A^p.
template <typename F>
Partition jordan_type(const Matrix<F>& a) {
  const auto ranks = rank_sequence(a);
  std::vector<int> columns;
  for (std::size_t p = 1; p < ranks.size(); ++p) columns.push_back(static_cast<int>(ranks[p - 1] - ranks[p]));
  return Partition(std::move(columns)).conjugate();
}

}  // namespace mvslice

#endif  // MVSLICE_JORDAN_HPP
