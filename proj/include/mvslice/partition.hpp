#ifndef MVSLICE_PARTITION_HPP
#define MVSLICE_PARTITION_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvslice/errors.hpp"

namespace mvslice {

/// A weight vector: the number of occurrences of each letter 1..m.
/// Not required to be weakly decreasing.
using Weight = std::vector<int>;

/// Weakly decreasing sequence of non-negative integers. Trailing zeros are
/// dropped on construction, so equality ignores them.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw std::invalid_argument("partition parts must be weakly decreasing");
      }
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Nonzero parts.
  const std::vector<int>& parts() const noexcept { return parts_; }

  /// Number of nonzero parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  /// Number of boxes.
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool empty() const noexcept { return parts_.empty(); }

  /// Part j (0-based); zero beyond the length.
  int operator[](std::size_t j) const noexcept { return j < parts_.size() ? parts_[j] : 0; }

  /// Parts zero-padded (never truncated) to length m.
  std::vector<int> padded(std::size_t m) const {
    if (parts_.size() > m) throw SizeMismatch("partition has more than " + std::to_string(m) + " parts");
    std::vector<int> out(parts_);
    out.resize(m, 0);
    return out;
  }

  Partition conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_) {
      for (int c = 0; c < p; ++c) ++out[c];
    }
    return Partition(std::move(out));
  }

  /// Shape obtained by appending one box to row `row` (0-based).
  Partition with_box_in_row(std::size_t row) const {
    std::vector<int> out(parts_);
    if (row > out.size()) throw std::invalid_argument("box would leave a gap");
    if (row == out.size()) out.push_back(0);
    ++out[row];
    return Partition(std::move(out));
  }

  /// Dominance order: *this ⊴ other.
  bool dominated_by(const Partition& other) const {
    if (size() != other.size()) return false;
    int a = 0, b = 0;
    const std::size_t n = std::max(parts_.size(), other.parts_.size());
    for (std::size_t j = 0; j < n; ++j) {
      a += (*this)[j];
      b += other[j];
      if (a > b) return false;
    }
    return true;
  }

  /// True if `inner` ⊆ *this and the skew shape has no two boxes in one column.
  bool is_horizontal_strip_over(const Partition& inner) const {
    const std::size_t n = std::max(parts_.size(), inner.parts_.size());
    for (std::size_t j = 0; j < n; ++j) {
      if (inner[j] > (*this)[j]) return false;
      if ((*this)[j + 1] > inner[j]) return false;
    }
    return true;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Comma-separated parts, e.g. "3,2". The empty partition is written "0".
inline std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

/// Parses a comma-separated list of non-negative integers.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("empty entry in list '" + std::string(text) + "'");
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(cur, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + cur + "'");
    }
    if (used != cur.size() || v < 0 || v > 1'000'000) throw ParseError("bad integer '" + cur + "'");
    out.push_back(static_cast<int>(v));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  flush();
  return out;
}

inline Partition parse_partition(std::string_view text) {
  auto parts = parse_int_list(text);
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline std::string to_string(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

/// All partitions of n in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace mvslice

#endif  // MVSLICE_PARTITION_HPP
