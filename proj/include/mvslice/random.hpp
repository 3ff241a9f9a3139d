#ifndef MVSLICE_RANDOM_HPP
#define MVSLICE_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string_view>

namespace mvslice {

/// SplitMix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Child seed for work item `salt` of a run seeded with `base`.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) noexcept {
  return mix64(mix64(base) ^ (salt * 0xd6e8feb86659fd93ULL));
}

/// FNV-1a, for salting seeds with tableau strings.
constexpr std::uint64_t hash_string(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seeded generator with a platform-independent bounded draw (the standard
/// distributions are implementation-defined, which would break golden files).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(mix64(seed)) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty draw range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mvslice

#endif  // MVSLICE_RANDOM_HPP
