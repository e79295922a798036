#pragma once

#include <cmath>
#include <cstdint>

namespace effectus {

/// splitmix64. Each suite trial runs on its own stream derived from
/// (master seed, trial index), so trials are independent and individually
/// replayable regardless of execution order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng forTrial(std::uint64_t seed, std::uint64_t trial) {
    Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
    return Rng(mixer.next());
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  int intIn(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform double in [0, 1).
  double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return (next() & 1) != 0; }

  /// Standard normal via Box-Muller.
  double gaussian() {
    double u1 = real();
    double u2 = real();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace effectus
