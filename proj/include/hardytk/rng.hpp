#ifndef HARDYTK_RNG_HPP
#define HARDYTK_RNG_HPP

#include <cmath>
#include <cstdint>

namespace hardytk {

/// Counter-based generator: the k-th output is a pure function of
/// (seed, stream, k). Substreams are cheap, which makes chunked Monte Carlo
/// runs bitwise reproducible regardless of how chunks are scheduled.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) {
    key_ = mix(mix(seed + kGolden) ^ mix(stream * kGolden + 0x5851F42D4C957F2DULL));
  }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGolden); }

  /// Uniform in the open interval (0,1); never returns 0, safe under log().
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  /// Integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hardytk

#endif
