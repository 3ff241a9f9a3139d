#ifndef MVSLICE_RATIONAL_HPP
#define MVSLICE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "mvslice/errors.hpp"

namespace mvslice {

/// Arbitrary-precision rational; the only scalar type used by the math core.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign, q > 0).
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false)) {
    throw ParseError("malformed rational '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Canonical "p/q" form; integers are written with denominator 1.
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace mvslice

#endif  // MVSLICE_RATIONAL_HPP
