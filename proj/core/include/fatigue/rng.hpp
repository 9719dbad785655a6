#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fatigue {

// SplitMix64 mixing step. Used both as a stand-alone bit mixer and to expand
// a user seed into engine state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic random source with named sub-streams.
//
// Seeding scheme: stream k of master seed s runs std::mt19937_64 seeded with
// splitmix64 applied to (s, k). Stream k therefore depends only on (s, k),
// never on how many other streams were created or in which order they are
// consumed. Replicate / fold / chain k always uses stream(seed, k).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed, 0)) {}

  static Rng stream(std::uint64_t seed, std::uint64_t stream_index) {
    Rng r(0);
    r.engine_.seed(mix(seed, stream_index));
    return r;
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), unbiased by rejection.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Standard normal variate (Marsaglia polar method; second value cached).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

  // Standard smallest-extreme-value variate.
  double sev() {
    double u;
    do {
      u = uniform01();
    } while (u == 0.0);
    return std::log(-std::log1p(-u));
  }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream_index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = seed ^ (0xD1B54A32D192ED03ULL + stream_index * 0x9E3779B97F4A7C15ULL);
    std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x2545F4914F6CDD1DULL + stream_index);
  }

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fatigue
