#pragma once
#include <cstdint>

namespace vmc {

// SplitMix64. All randomness in the library flows through this generator so
// that identical seeds give identical results on every platform. The exact
// constants are part of the reproducibility contract and are documented in
// the README.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound). bound > 0. The modulo bias is below 2^-50
  // for every bound used here.
  uint64_t below(uint64_t bound) { return next() % bound; }

  // True with probability num/denom.
  bool bernoulli(uint64_t num, uint64_t denom) { return below(denom) < num; }

 private:
  uint64_t state_;
};

// Derives an independent stream seed, e.g. one per trial index.
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  SplitMix64 g(a ^ (0x632BE59BD9B4E019ull * (b + 1)));
  return g.next();
}

}  // namespace vmc
