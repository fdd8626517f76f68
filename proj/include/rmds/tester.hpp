#pragma once

#include <cmath>
#include <cstdint>

#include "rmds/blockops.hpp"
#include "rmds/family.hpp"
#include "rmds/gf.hpp"
#include "rmds/matrix.hpp"
#include "rmds/rng.hpp"

namespace rmds {

// Randomized stand-in for "generic" matrices. A polynomial of total degree
// D that is not identically zero vanishes at a uniform point of a field of
// size Q with probability at most D/Q, so a random evaluation can only miss
// a nonzero polynomial, never invent one.
struct GenericTester {
  unsigned trials = 2;
  double log2_epsilon = -80.0;
  std::uint64_t seed = 0x6e65726963ULL;

  // Field used for generic matrices with no pool structure.
  static constexpr u64 kGenericPrime = (u64{1} << 61) - 1;
  PrimeField generic_field() const { return PrimeField(kGenericPrime); }

  Rng stream(std::uint64_t key) const { return Rng(derive_seed(seed, key)); }

  // log2 of the residual one-sided error after all trials.
  double log2_error(double degree_bound, double log2_field_size) const {
    if (degree_bound <= 0) return -INFINITY;
    return trials * (std::log2(degree_bound) - log2_field_size);
  }
  bool within_budget(double degree_bound, double log2_field_size) const {
    return log2_error(degree_bound, log2_field_size) <= log2_epsilon;
  }
};

inline std::uint64_t family_key(const SetFamily& family, std::uint64_t salt) {
  std::uint64_t h = mix64(salt ^ family.n());
  for (Mask m : family.masks()) h = mix64(h ^ m);
  return h;
}

template <class Field>
Matrix<Field> random_matrix(const Field& F, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix<Field> M(F, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = F.random(rng);
  return M;
}

// Rank of 𝒢 at a generic K×n matrix: the maximum over the tester's trials,
// which equals the generic rank except with probability 2^log2_error.
inline std::size_t generic_rank_G(std::size_t K, const SetFamily& family, const GenericTester& tester) {
  const PrimeField F = tester.generic_field();
  Rng rng = tester.stream(family_key(family, 0x5a7 + K));
  std::size_t best = 0;
  const std::size_t target = std::min(family.ell() * K, K + family.total_size());
  for (unsigned t = 0; t < tester.trials && best < target; ++t) {
    const auto W = random_matrix(F, K, family.n(), rng);
    best = std::max(best, rank(build_G(W, family)));
  }
  return best;
}

// The K-dimensional saturation property: rank 𝒢[W] = ℓK for generic W.
inline bool saturation_property(std::size_t K, const SetFamily& family, const GenericTester& tester) {
  return generic_rank_G(K, family, tester) == family.ell() * K;
}

// Degree of the determinant of a square minor of 𝒢[W] in the entries of W.
inline double saturation_degree_bound(std::size_t K, const SetFamily& family) {
  return static_cast<double>(family.ell() * K);
}

}  // namespace rmds
