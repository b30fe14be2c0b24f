#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace i2g {

// Thin wrapper over mt19937_64 with fixed derivation of uniforms. The
// standard distributions are implementation-defined, so everything that has
// to be reproducible from a seed draws through this class instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? gen_() % n : 0; }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool bernoulli(double p) { return uniform() < p; }

  double normal() {
    // Box-Muller on the deterministic uniform stream.
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Derive an independent child stream (e.g. per sample index).
  Rng fork(std::uint64_t salt) const {
    std::mt19937_64 copy = gen_;
    return Rng(copy() ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace i2g
