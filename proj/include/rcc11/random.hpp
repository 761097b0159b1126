#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace rcc11 {

/// Seeded generator. Draws are reduced without std distributions so that a
/// seed gives the same sequence with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(eng_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = eng_();
    while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  bool coin() { return (eng_() >> 63) != 0; }

  template <typename C>
  const auto& pick(const C& c) {
    return c[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(std::size(c)) - 1))];
  }

 private:
  std::mt19937_64 eng_;
};

/// splitmix64 finalizer, for deriving independent per-item seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t item) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (item + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace rcc11
