#ifndef KLMEDIAN_RNG_HPP
#define KLMEDIAN_RNG_HPP

#include <cstdint>
#include <random>

namespace klmedian {

// Seeded random stream with deterministic child-stream derivation. All
// randomness in the library flows through named child streams so that runs
// are reproducible independently of evaluation order.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  // Derives an independent stream keyed by (this stream's seed, salt).
  // Does not advance this stream.
  RngStream child(std::uint64_t salt) const {
    return RngStream(mix(seed_ ^ (salt * 0x9E3779B97F4A7C15ULL)));
  }

  std::mt19937_64& engine() { return engine_; }
  std::uint64_t seed() const { return seed_; }

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

  double uniform_real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace klmedian

#endif
