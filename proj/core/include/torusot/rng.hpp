#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace torusot {

/// SplitMix64 step; used for seeding and for deriving sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic counter-based stream seed: hash of (seed, ids...).
/// Replicates, axes and methods each get their own stream so results do
/// not depend on evaluation order or thread count.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id_a,
                                 std::uint64_t id_b = 0, std::uint64_t id_c = 0) {
  std::uint64_t s = seed;
  splitmix64(s);
  s ^= 0x517cc1b727220a95ULL * (id_a + 1);
  splitmix64(s);
  s ^= 0x2545f4914f6cdd1dULL * (id_b + 1);
  splitmix64(s);
  s ^= 0x9e6c63d0876a9a47ULL * (id_c + 1);
  return splitmix64(s);
}

/// xoshiro256++ with explicit distribution code so that sequences are
/// identical across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : state_) w = splitmix64(sm);
    has_spare_normal_ = false;
    spare_normal_ = 0.0;
  }

  static Rng stream(std::uint64_t seed, std::uint64_t id_a, std::uint64_t id_b = 0,
                    std::uint64_t id_c = 0) {
    return Rng(derive_seed(seed, id_a, id_b, id_c));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). Rejection-free modulo bias is
  /// negligible for bound << 2^64 but we reject anyway to stay exact.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  /// Standard normal via Box-Muller; caches the second variate.
  double normal() {
    if (has_spare_normal_) {
      has_spare_normal_ = false;
      return spare_normal_;
    }
    // u1 in (0,1] so log() stays finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_normal_ = r * std::sin(a);
    has_spare_normal_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace torusot
