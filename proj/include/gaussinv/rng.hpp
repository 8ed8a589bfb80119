#pragma once

#include <cstdint>

namespace gaussinv {

/// SplitMix64 with an unbiased bounded draw. Output depends only on the seed,
/// never on the standard library's distribution implementations.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = (*this)();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() noexcept { return ((*this)() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Independent stream seed for trial `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  Rng mix(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
  return mix();
}

}  // namespace gaussinv
