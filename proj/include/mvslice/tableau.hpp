#ifndef MVSLICE_TABLEAU_HPP
#define MVSLICE_TABLEAU_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvslice/errors.hpp"
#include "mvslice/partition.hpp"

namespace mvslice {

/// Semi-standard Young tableau over the alphabet {1..m}.
class Tableau {
 public:
  Tableau() = default;

  /// `alphabet` defaults to the largest entry; it may exceed it when the
  /// trailing letters have zero weight.
  explicit Tableau(std::vector<std::vector<int>> rows, int alphabet = 0) : rows_(std::move(rows)) {
    int max_entry = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& row = rows_[r];
      if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
      if (r > 0 && row.size() > rows_[r - 1].size()) {
        throw std::invalid_argument("tableau row lengths must weakly decrease");
      }
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] < 1) throw std::invalid_argument("tableau entries must be positive");
        if (c > 0 && row[c] < row[c - 1]) throw std::invalid_argument("tableau rows must weakly increase");
        if (r > 0 && row[c] <= rows_[r - 1][c]) {
          throw std::invalid_argument("tableau columns must strictly increase");
        }
        max_entry = std::max(max_entry, row[c]);
      }
    }
    if (alphabet != 0 && alphabet < max_entry) throw std::invalid_argument("entry outside the alphabet");
    alphabet_ = alphabet == 0 ? max_entry : alphabet;
  }

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int alphabet() const noexcept { return alphabet_; }

  /// Entry at (row, col), both 0-based.
  int at(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }

  Partition shape() const {
    std::vector<int> lens;
    for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lens));
  }

  Weight weight() const {
    Weight w(alphabet_, 0);
    for (const auto& row : rows_) {
      for (int e : row) ++w[e - 1];
    }
    return w;
  }

  int size() const { return shape().size(); }

  /// Concatenated rows, top to bottom.
  std::vector<int> reading_word() const {
    std::vector<int> out;
    for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
    return out;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  int alphabet_ = 0;
};

/// "112/23"; rows are comma-separated when some entry has two digits.
inline std::string to_string(const Tableau& t) {
  bool wide = false;
  for (const auto& row : t.rows()) {
    for (int e : row) wide = wide || e >= 10;
  }
  std::string out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (wide && c) out += ',';
      out += std::to_string(t.rows()[r][c]);
    }
  }
  return out;
}

inline Tableau parse_tableau(std::string_view text, int alphabet = 0) {
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto slash = text.find('/', start);
    const auto piece = text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    std::vector<int> row;
    if (piece.find(',') != std::string_view::npos) {
      row = parse_int_list(piece);
    } else {
      for (char ch : piece) {
        if (ch < '0' || ch > '9') throw ParseError("bad tableau entry in '" + std::string(text) + "'");
        row.push_back(ch - '0');
      }
    }
    if (row.empty()) throw ParseError("empty tableau row in '" + std::string(text) + "'");
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  try {
    return Tableau(std::move(rows), alphabet);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid tableau '") + std::string(text) + "': " + e.what());
  }
}

/// Valid fillings of shape λ with weight μ, in lexicographic order of the
/// reading word. Empty when μ is not dominated by λ.
inline std::vector<Tableau> enumerate_tableaux(const Partition& shape, const Weight& weight) {
  const int total = std::accumulate(weight.begin(), weight.end(), 0);
  if (shape.size() != total) {
    throw SizeMismatch("shape has " + std::to_string(shape.size()) + " boxes but weight sums to " +
                       std::to_string(total));
  }
  for (int w : weight) {
    if (w < 0) throw std::invalid_argument("negative weight entry");
  }
  const int m = static_cast<int>(weight.size());
  std::vector<Tableau> out;
  if (shape.length() > m) return out;

  std::vector<std::vector<int>> rows;
  for (int len : shape.parts()) rows.emplace_back(len, 0);
  std::vector<int> remaining(weight);

  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  }

  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      out.emplace_back(rows, m);
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    // A letter below row r+1 cannot fit in row r (columns strictly increase from 1).
    for (int v = std::max(lo, r + 1); v <= m; ++v) {
      if (remaining[v - 1] == 0) continue;
      rows[r][c] = v;
      --remaining[v - 1];
      self(self, idx + 1);
      ++remaining[v - 1];
    }
    rows[r][c] = 0;
  };
  fill(fill, 0);
  return out;
}

/// Number of GT-patterns λ^{(1)} ⊆ ⋯ ⊆ λ^{(m)} = λ with interlacing layers
/// of sizes μ_1 + ⋯ + μ_i (the Kostka number), counted layer by layer
/// without building tableaux.
inline long long count_gt_patterns(const Partition& shape, const Weight& weight) {
  const int m = static_cast<int>(weight.size());
  if (shape.length() > m) return 0;
  if (shape.size() != std::accumulate(weight.begin(), weight.end(), 0)) return 0;
  // Count layers below `outer` (which has at most `level` parts).
  auto count = [&](auto&& self, const std::vector<int>& outer, int level) -> long long {
    if (level == 0) return 1;
    const int outer_size = std::accumulate(outer.begin(), outer.end(), 0);
    const int target = outer_size - weight[level - 1];
    if (target < 0) return 0;
    // inner has level-1 parts with outer[j+1] <= inner[j] <= outer[j].
    std::vector<int> inner(static_cast<std::size_t>(level - 1), 0);
    long long total = 0;
    auto place = [&](auto&& rec, int j, int remaining) -> void {
      if (j == level - 1) {
        if (remaining == 0) total += self(self, inner, level - 1);
        return;
      }
      for (int v = outer[j + 1]; v <= outer[j]; ++v) {
        if (v > remaining) break;
        inner[j] = v;
        rec(rec, j + 1, remaining - v);
      }
    };
    place(place, 0, target);
    return total;
  };
  return count(count, shape.padded(static_cast<std::size_t>(m)), m);
}

/// One step of the boxy ladder: the k-th occurrence (leftmost first) of
/// letter i sits at (row, col), and `shape` is λ^{(i,k)}. Row and column
/// are 1-based.
struct BoxStep {
  int letter = 0;
  int occurrence = 0;
  int row = 0;
  int col = 0;
  Partition shape;

  friend bool operator==(const BoxStep&, const BoxStep&) = default;
};

/// Gelfand–Tsetlin pattern of a tableau together with its one-box refinement.
struct GTChain {
  /// blocks[i-1] = λ^{(i)}, the shape of the entries ≤ i.
  std::vector<Partition> blocks;
  /// Steps in reading order (1,1), (1,2), …, (m, μ_m).
  std::vector<BoxStep> steps;

  friend bool operator==(const GTChain&, const GTChain&) = default;
};

inline GTChain gt_chain(const Tableau& t) {
  GTChain chain;
  Partition current;
  for (int letter = 1; letter <= t.alphabet(); ++letter) {
    std::vector<std::pair<int, int>> cells;  // (col, row), 0-based
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
      for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
        if (t.rows()[r][c] == letter) cells.emplace_back(static_cast<int>(c), static_cast<int>(r));
      }
    }
    std::sort(cells.begin(), cells.end());
    int k = 0;
    for (const auto& [col, row] : cells) {
      current = current.with_box_in_row(row);
      chain.steps.push_back(BoxStep{letter, ++k, row + 1, col + 1, current});
    }
    chain.blocks.push_back(current);
  }
  return chain;
}

/// Places letter i in the skew strip blocks[i-1] / blocks[i-2].
inline Tableau tableau_from_blocks(const std::vector<Partition>& blocks) {
  Partition previous;
  const Partition& shape = blocks.empty() ? previous : blocks.back();
  std::vector<std::vector<int>> rows;
  for (int len : shape.parts()) rows.emplace_back(len, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!blocks[i].is_horizontal_strip_over(previous)) {
      throw NotASemistandardChain("block " + std::to_string(i + 1) + " is not a horizontal strip");
    }
    for (int r = 0; r < blocks[i].length(); ++r) {
      for (int c = previous[r]; c < blocks[i][r]; ++c) rows[r][c] = static_cast<int>(i) + 1;
    }
    previous = blocks[i];
  }
  return Tableau(std::move(rows), static_cast<int>(blocks.size()));
}

/// Non-negative integers indexed by positive roots z_a − z_b (a < b ≤ m),
/// stored in the order (1,2) < (1,3) < … < (1,m) < (2,3) < … < (m−1,m).
class LusztigDatum {
 public:
  LusztigDatum() = default;
  LusztigDatum(int rank, std::vector<int> entries) : rank_(rank), entries_(std::move(entries)) {
    if (entries_.size() != root_count(rank)) throw std::invalid_argument("wrong number of Lusztig datum entries");
  }

  static std::size_t root_count(int m) { return m < 2 ? 0 : static_cast<std::size_t>(m * (m - 1) / 2); }

  static std::size_t index(int m, int a, int b) {
    if (a < 1 || a >= b || b > m) throw std::out_of_range("root index out of range");
    std::size_t offset = 0;
    for (int x = 1; x < a; ++x) offset += static_cast<std::size_t>(m - x);
    return offset + static_cast<std::size_t>(b - a - 1);
  }

  int rank() const noexcept { return rank_; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int at(int a, int b) const { return entries_[index(rank_, a, b)]; }

  /// Σ n_{(a,b)} (e_a − e_b) in ℤ^m.
  std::vector<int> coweight() const {
    std::vector<int> out(rank_, 0);
    for (int a = 1; a <= rank_; ++a) {
      for (int b = a + 1; b <= rank_; ++b) {
        out[a - 1] += at(a, b);
        out[b - 1] -= at(a, b);
      }
    }
    return out;
  }

  friend bool operator==(const LusztigDatum&, const LusztigDatum&) = default;

 private:
  int rank_ = 0;
  std::vector<int> entries_;
};

inline std::string to_string(const LusztigDatum& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.entries().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d.entries()[i]);
  }
  return out + ")";
}

/// Zig-zag differences n_{(a,b)} = λ^{(b)}_a − λ^{(b−1)}_a of the GT-pattern.
inline LusztigDatum lusztig_datum(const Tableau& t) {
  const int m = t.alphabet();
  const auto chain = gt_chain(t);
  std::vector<int> entries;
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      entries.push_back(chain.blocks[b - 1][a - 1] - chain.blocks[b - 2][a - 1]);
    }
  }
  return LusztigDatum(m, std::move(entries));
}

/// ⟨λ − μ, ρ⟩ with ρ = (m, m−1, …, 1).
inline int dimension_formula(const Partition& shape, const Weight& weight, int m) {
  if (static_cast<int>(weight.size()) != m) throw SizeMismatch("weight must have m entries");
  const auto lam = shape.padded(static_cast<std::size_t>(m));
  int d = 0;
  for (int j = 0; j < m; ++j) d += (m - j) * (lam[j] - weight[j]);
  return d;
}

/// Σ over the boxy ladder of (i − r_{i,k}).
inline int fibre_dimension_sum(const Tableau& t) {
  int d = 0;
  for (const auto& step : gt_chain(t).steps) d += step.letter - step.row;
  return d;
}

}  // namespace mvslice

#endif  // MVSLICE_TABLEAU_HPP
