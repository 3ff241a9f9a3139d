#ifndef MVSLICE_LINALG_HPP
#define MVSLICE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mvslice/errors.hpp"
#include "mvslice/matrix.hpp"
#include "mvslice/rational.hpp"

namespace mvslice {

// ---------------------------------------------------------------------------
// Fraction-free elimination (Bareiss). Works over any integral domain whose
// element type provides an `exact_divide(a, b)` overload found by ADL or here.
// ---------------------------------------------------------------------------

inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }

namespace detail {

/// Brings `m` to fraction-free row echelon form in place; returns the pivot
/// columns and the sign of the applied row permutation.
template <typename T>
std::pair<std::vector<std::size_t>, int> bareiss_echelon(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  int sign = 1;
  T previous(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == T(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        T num = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        m(i, j) = exact_divide(num, previous);
      }
      m(i, c) = T(0);
    }
    previous = m(r, c);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(pivots), sign};
}

}  // namespace detail

/// Exact rank by fraction-free elimination.
template <typename T>
std::size_t rank(Matrix<T> m) {
  return detail::bareiss_echelon(m).first.size();
}

/// Determinant by fraction-free elimination; exact over integral domains.
template <typename T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  auto [pivots, sign] = detail::bareiss_echelon(m);
  if (pivots.size() < n) return T(0);
  T det = m(n - 1, n - 1);
  if (sign < 0) det = T(0) - det;
  return det;
}

// ---------------------------------------------------------------------------
// Field linear algebra.
// ---------------------------------------------------------------------------

template <typename F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form (pivots normalized to 1, zero above and below).
template <typename F>
RowEchelon<F> reduced_row_echelon(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == F(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == F(0)) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Basis of {x : m x = 0}, one vector per free column of the echelon form.
template <typename F>
std::vector<std::vector<F>> null_space_basis(const Matrix<F>& m) {
  const auto ech = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) v[ech.pivots[k]] = -ech.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename F>
bool is_zero_vector(const std::vector<F>& v) {
  for (const auto& x : v) {
    if (!(x == F(0))) return false;
  }
  return true;
}

/// Subspace of F^n stored by its canonical basis: the nonzero rows of the
/// reduced row echelon form of any spanning set. Equal subspaces have
/// identical bases.
template <typename F = Rational>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }

  static Subspace whole(std::size_t ambient) {
    std::vector<std::vector<F>> basis;
    for (std::size_t i = 0; i < ambient; ++i) {
      std::vector<F> e(ambient, F(0));
      e[i] = F(1);
      basis.push_back(std::move(e));
    }
    return Subspace(ambient, std::move(basis));
  }

  static Subspace span(std::size_t ambient, const std::vector<std::vector<F>>& vectors) {
    for (const auto& v : vectors) {
      if (v.size() != ambient) throw DimensionMismatch("spanning vector has wrong length");
    }
    if (vectors.empty()) return zero(ambient);
    const auto ech = reduced_row_echelon(Matrix<F>::from_rows(vectors));
    std::vector<std::vector<F>> basis;
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) basis.push_back(ech.reduced.row(k));
    return Subspace(ambient, std::move(basis));
  }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::vector<F>>& basis() const noexcept { return basis_; }

  /// dim × ambient matrix with the canonical basis as rows.
  Matrix<F> basis_matrix() const {
    Matrix<F> out(basis_.size(), ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (std::size_t j = 0; j < ambient_; ++j) out(i, j) = basis_[i][j];
    }
    return out;
  }

  /// Rows spanning the annihilator: x ∈ *this iff annihilator() x = 0.
  Matrix<F> annihilator() const {
    const auto rows = null_space_basis(basis_matrix());
    Matrix<F> out(rows.size(), ambient_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < ambient_; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  bool contains(const std::vector<F>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector has wrong length");
    return is_zero_vector(annihilator() * v);
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces in different ambient spaces");
    for (const auto& v : other.basis_) {
      if (!contains(v)) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient, std::vector<std::vector<F>> basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  std::vector<std::vector<F>> basis_;
};

template <typename F>
Subspace<F> image(const Matrix<F>& m) {
  std::vector<std::vector<F>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace<F>::span(m.rows(), cols);
}

template <typename F>
Subspace<F> kernel(const Matrix<F>& m) {
  return Subspace<F>::span(m.cols(), null_space_basis(m));
}

template <typename F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v) {
  if (u.ambient() != v.ambient()) throw DimensionMismatch("subspaces in different ambient spaces");
  auto vectors = u.basis();
  vectors.insert(vectors.end(), v.basis().begin(), v.basis().end());
  return Subspace<F>::span(u.ambient(), vectors);
}

template <typename F>
Subspace<F> intersect(const Subspace<F>& u, const Subspace<F>& v) {
  if (u.ambient() != v.ambient()) throw DimensionMismatch("subspaces in different ambient spaces");
  const auto a = u.annihilator();
  const auto b = v.annihilator();
  Matrix<F> stacked(a.rows() + b.rows(), u.ambient());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < u.ambient(); ++j) stacked(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < u.ambient(); ++j) stacked(a.rows() + i, j) = b(i, j);
  }
  return kernel(stacked);
}

/// {v : m v ∈ w}.
template <typename F>
Subspace<F> preimage(const Matrix<F>& m, const Subspace<F>& w) {
  if (w.ambient() != m.rows()) throw DimensionMismatch("preimage target has wrong ambient dimension");
  return kernel(w.annihilator() * m);
}

/// dim(U+V) − dim U = dim V − dim(U∩V).
template <typename F>
bool codim_identity_check(const Subspace<F>& u, const Subspace<F>& v) {
  const auto s = sum(u, v).dim();
  const auto i = intersect(u, v).dim();
  return s - u.dim() == v.dim() - i;
}

/// Solution set {x : m x = rhs} as a particular point plus a direction space.
template <typename F>
struct AffineSpace {
  std::vector<F> point;
  Subspace<F> directions;

  std::size_t dim() const noexcept { return directions.dim(); }
};

/// Returns nullopt when the system is inconsistent. The particular solution
/// has zeros in all free coordinates.
template <typename F>
std::optional<AffineSpace<F>> solve_affine(const Matrix<F>& m, const std::vector<F>& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("right-hand side has wrong length");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const auto ech = reduced_row_echelon(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  std::vector<F> point(m.cols(), F(0));
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) point[ech.pivots[k]] = ech.reduced(k, m.cols());
  return AffineSpace<F>{std::move(point), kernel(m)};
}

}  // namespace mvslice

#endif  // MVSLICE_LINALG_HPP
