#pragma once

#include <cstdint>
#include <random>

namespace qzeno {

// Mixes a base seed with a stream index so that per-instance generators are
// decorrelated but fully determined by (base, stream).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Thin wrapper over mt19937_64 with rejection-sampled bounded draws, so that
// generated instances are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  int range(int lo, int hi) {  // inclusive ends
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double real01() { return (engine_() >> 11) * 0x1.0p-53; }

  double real(double lo, double hi) { return lo + (hi - lo) * real01(); }

  bool coin() { return (engine_() >> 32) & 1; }

  bool bernoulli(double p) { return real01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qzeno
