#pragma once

#include <cstdint>
#include <random>

namespace rmds {

// Stateless 64-bit mixer (splitmix64 finalizer).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the idx-th independent stream under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t idx) {
  return mix64(mix64(master) ^ mix64(idx + 0x632be59bd9b4e019ULL));
}

// mt19937_64 has a standardized output sequence, and below() does its own
// rejection sampling, so draws are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    if ((bound & (bound - 1)) == 0) return eng_() & (bound - 1);
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace rmds
