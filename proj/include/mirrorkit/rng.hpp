#ifndef MIRRORKIT_RNG_HPP
#define MIRRORKIT_RNG_HPP

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace mirrorkit {

/// Mixes a master seed with a stream index (splitmix64 finalizer), so each
/// trial or start owns an independent, reproducible stream.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// mt19937_64 with distribution code written out, so draws are identical
/// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on the open disc of the given radius.
  std::complex<double> in_disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, theta);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mirrorkit

#endif  // MIRRORKIT_RNG_HPP
