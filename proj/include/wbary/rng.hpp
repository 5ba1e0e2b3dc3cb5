#ifndef WBARY_RNG_HPP_
#define WBARY_RNG_HPP_

#include <cmath>
#include <cstdint>

namespace wbary {

// splitmix64 step; used both as a generator seeder and as a seed mixer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from (seed, stream). Replicate j of a
// bootstrap run uses derive_seed(cfg.seed, j), so results do not depend on
// the order in which replicates execute.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s ^= stream + 0x632be59bd9b4e019ULL;
  std::uint64_t b = splitmix64(s);
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

// Small self-contained generator. All draw routines are written out here so
// that a (seed, call sequence) pair yields bit-identical streams on reruns;
// the standard <random> distributions do not guarantee that across library
// versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // warm up so that small seeds decorrelate
    splitmix64(state_);
    splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform on [0, 1)
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // standard normal, Marsaglia polar method
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
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  // Exp(1)
  double exponential() { return -std::log1p(-uniform01()); }

  // Poisson(1) via Knuth's product method (fine for unit rate)
  int poisson1() {
    const double limit = std::exp(-1.0);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform01();
    } while (p > limit);
    return k - 1;
  }

  // centred normal with scale sigma, rejected outside [-3 sigma, 3 sigma]
  double truncated_normal(double sigma) {
    if (sigma == 0.0) return 0.0;
    double z;
    do {
      z = normal();
    } while (std::fabs(z) > 3.0);
    return sigma * z;
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wbary

#endif  // WBARY_RNG_HPP_
