#ifndef SNIPAL_RNG_HPP_
#define SNIPAL_RNG_HPP_

#include <cstdint>
#include <random>

namespace snipal {

// splitmix64 step; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic seedable generator. The core engine is std::mt19937_64,
// whose output sequence is fixed by the standard; the uniform mappings are
// implemented here because std:: distributions are implementation-defined
// and would break cross-platform reproducibility of generated instances.
//
// Stream splitting: Rng(seed, stream) scrambles (seed, stream) through
// splitmix64 so that distinct streams from the same seed are independent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed ^ (0x632be59bd9b4e019ULL * (stream + 1));
    engine_.seed(splitmix64(s));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform double in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Uniform on the dyadic grid {1, 2, ..., 2^26} / 2^26, i.e. (0,1].
  // Sums of up to ~2^26 such values are exact in double arithmetic, which
  // keeps row/column sum identities of generated data exact.
  double uniform_dyadic() {
    std::uint64_t k = (next() >> 38) + 1ULL;  // in [1, 2^26]
    return static_cast<double>(k) * 0x1.0p-26;
  }

  // Inclusive range, unbiased via rejection.
  std::uint64_t uniform_index(std::uint64_t n) {  // [0, n)
    std::uint64_t threshold = (~n + 1) % n;       // 2^64 mod n
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(uniform_index(
                    static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace snipal

#endif  // SNIPAL_RNG_HPP_
