#ifndef SSKM_RNG_HPP
#define SSKM_RNG_HPP

#include <cmath>
#include <cstdint>

namespace sskm {

// Deterministic random source with hand-mapped outputs. The standard library
// distributions are implementation-defined, so uniform/normal/int draws are
// derived directly from a splitmix64 stream to keep seeded runs stable across
// toolchains (golden tests depend on this).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive bounds, unbiased via rejection
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
    uint64_t limit = ~0ULL - ~0ULL % span;
    uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<int>(v % span);
  }

  // standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    double u2 = uniform();
    double m = std::sqrt(-2.0 * std::log(u1));
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    spare_ = m * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return m * std::cos(kTwoPi * u2);
  }

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stable derived stream for (base seed, stream index) pairs.
inline uint64_t mix_seed(uint64_t base, uint64_t stream) {
  uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sskm

#endif  // SSKM_RNG_HPP
