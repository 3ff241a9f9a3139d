#ifndef MVSLICE_LUSZTIG_GEOMETRIC_HPP
#define MVSLICE_LUSZTIG_GEOMETRIC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvslice/errors.hpp"
#include "mvslice/jordan.hpp"
#include "mvslice/linalg.hpp"
#include "mvslice/mv_map.hpp"
#include "mvslice/poly.hpp"
#include "mvslice/tableau.hpp"

namespace mvslice {

namespace detail {

/// Calls f(subset) for every k-subset of {0, …, n−1}, in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline Valuation minor_valuation(const PolyMatrix& g, const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) {
  PolyMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = g(rows[i], cols[j]);
  }
  return determinant(sub).valuation();
}

}  // namespace detail

/// D_{[a⋯b]}: the least valuation of a maximal minor of g on the row window
/// {a, …, b} (1-based), minimized over all column subsets of size b − a + 1.
/// Zero for the empty window b < a; +∞ if every such minor vanishes.
inline Valuation d_function(const PolyMatrix& g, int a, int b) {
  if (b < a) return Valuation(0);
  const auto m = static_cast<int>(g.rows());
  if (a < 1 || b > m) throw std::out_of_range("row window outside the matrix");
  std::vector<std::size_t> rows;
  for (int r = a; r <= b; ++r) rows.push_back(static_cast<std::size_t>(r - 1));
  Valuation best = Valuation::infinity();
  detail::for_each_subset(g.cols(), rows.size(), [&](const std::vector<std::size_t>& cols) {
    const auto v = detail::minor_valuation(g, rows, cols);
    if (v < best) best = v;
  });
  return best;
}

/// Least valuation over every k×k minor of the leading b×b block of g: the
/// sum of the k smallest invariant factors of that block.
inline Valuation smallest_invariant_sum(const PolyMatrix& g, int b, int k) {
  const PolyMatrix lead = g.leading(static_cast<std::size_t>(b));
  Valuation best = Valuation::infinity();
  detail::for_each_subset(lead.rows(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& rows) {
    detail::for_each_subset(lead.cols(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& cols) {
      const auto v = detail::minor_valuation(lead, rows, cols);
      if (v < best) best = v;
    });
  });
  return best;
}

/// The D-table together with the Lusztig datum derived from it.
struct GeometricDatum {
  int rank = 0;
  /// d[a][b] for 1 ≤ a ≤ b ≤ m (index 0 unused); entries with b < a are 0.
  std::vector<std::vector<Valuation>> d;
  LusztigDatum datum;

  Valuation at(int a, int b) const { return b < a ? Valuation(0) : d[a][b]; }
};

inline std::vector<std::vector<Valuation>> d_table(const PolyMatrix& g) {
  const int m = static_cast<int>(g.rows());
  std::vector<std::vector<Valuation>> d(m + 1, std::vector<Valuation>(m + 1, Valuation(0)));
  for (int a = 1; a <= m; ++a) {
    for (int b = a; b <= m; ++b) d[a][b] = d_function(g, a, b);
  }
  return d;
}

/// n_{(a,b)} = D_{[a⋯b]} − D_{[a+1⋯b]} − D_{[a⋯b−1]} + D_{[a+1⋯b−1]}.
inline GeometricDatum geometric_lusztig(const PolyMatrix& g) {
  if (!g.is_square()) throw DimensionMismatch("g must be square");
  const int m = static_cast<int>(g.rows());
  GeometricDatum out;
  out.rank = m;
  out.d = d_table(g);
  std::vector<int> entries;
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      const Valuation terms[] = {out.at(a, b), out.at(a + 1, b), out.at(a, b - 1), out.at(a + 1, b - 1)};
      for (const auto& v : terms) {
        if (!v.is_finite()) {
          throw NotGeneric("D-function is infinite near root (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
      }
      const int n = terms[0].value() - terms[1].value() - terms[2].value() + terms[3].value();
      if (n < 0) {
        throw NotGeneric("negative Lusztig datum entry at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      entries.push_back(n);
    }
  }
  out.datum = LusztigDatum(m, std::move(entries));
  return out;
}

/// First window (a, b) of a lower-triangular g whose D-value exceeds the
/// smallest-invariant-factor bound of the leading b×b block, i.e. where g
/// leaves the open cell on which D takes its generic value.
inline std::optional<std::pair<int, int>> genericity_defect(const PolyMatrix& g) {
  const int m = static_cast<int>(g.rows());
  for (int b = 1; b <= m; ++b) {
    for (int a = 1; a <= b; ++a) {
      if (d_function(g, a, b) != smallest_invariant_sum(g, b, b - a + 1)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

/// Outcome of the consistency checks on g = φ(A).
struct CoweightReport {
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// val det g = N; g lower triangular with g_ii = t^{μ_i} and deg g_ij <
/// min(μ_i, μ_j) below the diagonal; A has Jordan type λ.
inline CoweightReport coweight_checks(const PolyMatrix& g, const RatMatrix& a, const Partition& lambda,
                                      const Partition& mu) {
  CoweightReport report;
  const int m = mu.length();
  if (g.rows() != static_cast<std::size_t>(m) || !g.is_square()) {
    report.failures.push_back("shape: g is not " + std::to_string(m) + "x" + std::to_string(m));
    return report;
  }
  const auto det_val = determinant(g).valuation();
  if (det_val != Valuation(mu.size())) {
    report.failures.push_back("det: valuation " + to_string(det_val) + " != N = " + std::to_string(mu.size()));
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const auto& e = g(i - 1, j - 1);
      const std::string where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (i == j && e != Poly<Rational>::monomial(1, mu[i - 1])) {
        report.failures.push_back("diagonal: g" + where + " != t^" + std::to_string(mu[i - 1]));
      } else if (i < j && !e.is_zero()) {
        report.failures.push_back("triangularity: g" + where + " is nonzero above the diagonal");
      } else if (i > j && e.degree() >= std::min(mu[i - 1], mu[j - 1])) {
        report.failures.push_back("degree: deg g" + where + " >= min(mu_i, mu_j)");
      }
    }
  }
  try {
    if (jordan_type(a) != lambda) report.failures.push_back("jordan: type of A differs from " + to_string(lambda));
  } catch (const NotNilpotent&) {
    report.failures.push_back("jordan: A is not nilpotent");
  }
  return report;
}

}  // namespace mvslice

#endif  // MVSLICE_LUSZTIG_GEOMETRIC_HPP
