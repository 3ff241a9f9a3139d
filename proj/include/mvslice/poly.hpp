#ifndef MVSLICE_POLY_HPP
#define MVSLICE_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvslice/rational.hpp"

namespace mvslice {

/// t-adic valuation: a non-negative integer or +∞ (the valuation of zero).
/// +∞ is a distinct state, never a large integer.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(int v) : value_(v), finite_(true) {}

  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_finite() const noexcept { return finite_; }

  int value() const {
    if (!finite_) throw std::logic_error("value() of an infinite valuation");
    return value_;
  }

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;

  friend constexpr bool operator<(const Valuation& a, const Valuation& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }

 private:
  int value_ = 0;
  bool finite_ = false;
};

inline std::string to_string(const Valuation& v) { return v.is_finite() ? std::to_string(v.value()) : "inf"; }

/// Polynomial in t with coefficients in F, lowest degree first. No trailing
/// zero coefficients, so the zero polynomial has no coefficients at all.
template <typename F = Rational>
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(F(c)) {}  // NOLINT: implicit, so Matrix<Poly> can build T(0) and T(1)
  Poly(const F& c) : coeffs_{c} { trim(); }  // NOLINT
  explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c·t^k.
  static Poly monomial(const F& c, int k) {
    std::vector<F> v(static_cast<std::size_t>(k) + 1, F(0));
    v.back() = c;
    return Poly(std::move(v));
  }

  const std::vector<F>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// −1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  F coeff(int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[k] : F(0);
  }

  Valuation valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) return Valuation(static_cast<int>(k));
    }
    return Valuation::infinity();
  }

  /// Remainder modulo t^k.
  Poly truncated(int k) const {
    std::vector<F> v(coeffs_.begin(), coeffs_.begin() + std::min<std::ptrdiff_t>(k, coeffs_.size()));
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> v(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Euclidean division: a = q·b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> rem(a.coeffs_);
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0) return {Poly(), a};
    std::vector<F> quo(static_cast<std::size_t>(dq) + 1, F(0));
    const F lead = b.coeffs_.back();
    for (int k = dq; k >= 0; --k) {
      const F q = rem[static_cast<std::size_t>(k + db)] / lead;
      quo[static_cast<std::size_t>(k)] = q;
      if (q == 0) continue;
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

/// a / b for b dividing a; used by fraction-free elimination.
template <typename F>
Poly<F> exact_divide(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

/// Human-readable form, e.g. "-1 - t + t^2".
template <typename F>
std::string to_string(const Poly<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const F& c = p.coeffs()[k];
    if (c == 0) continue;
    std::string mag = c < 0 ? F(-c).get_str() : c.get_str();
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const bool unit = mag == "1" && k > 0;
    if (!unit) out += mag;
    if (k > 0) out += (unit ? "" : "*") + std::string("t") + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out;
}

}  // namespace mvslice

#endif  // MVSLICE_POLY_HPP
