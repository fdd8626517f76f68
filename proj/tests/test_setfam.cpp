#include <gtest/gtest.h>

#include "rmds/setfam.hpp"
#include "rmds/tester.hpp"
#include "support.hpp"

using namespace rmds;

namespace {

const PrimeField kBig((u64{1} << 61) - 1);

// Oracle: E is correctable by the tensor of a random (m−a)×m column code and
// a random (n−b)×n row code over a 2^61 field iff the surviving columns of
// the Kronecker generator have full rank (m−a)(n−b).
bool generic_correctable(const ErasurePattern& E, std::size_t a, std::size_t b, Rng& rng) {
  const std::size_t m = E.m(), n = E.n();
  const auto Gc = test::rand_mat(kBig, m - a, m, rng);
  const auto Gr = test::rand_mat(kBig, n - b, n, rng);
  const auto T = kron(Gc, Gr);
  const auto keep = E.surviving_indices();
  return rank(select_columns(T, std::span<const std::size_t>(keep))) == (m - a) * (n - b);
}

// Same with a parity check column code (a = 1).
bool parity_correctable(const ErasurePattern& E, std::size_t b, Rng& rng) {
  const std::size_t m = E.m(), n = E.n();
  Matrix<PrimeField> P(kBig, m - 1, m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    P(i, i) = 1;
    P(i, m - 1) = kBig.neg(1);
  }
  const auto T = kron(P, test::rand_mat(kBig, n - b, n, rng));
  const auto keep = E.surviving_indices();
  return rank(select_columns(T, std::span<const std::size_t>(keep))) == (m - 1) * (n - b);
}

ErasurePattern pattern_from_bits(std::size_t m, std::size_t n, Mask bits) {
  ErasurePattern E(m, n);
  for (std::size_t i = 0; i < m; ++i) E.set_row(i, (bits >> (i * n)) & full_mask(n));
  return E;
}

}  // namespace

TEST(Setfam, NullIntersectionExamples) {
  EXPECT_FALSE(null_intersection(1, SetFamily(2, {{0}, {0}})));
  EXPECT_TRUE(null_intersection(4, SetFamily(4, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(null_intersection(2, SetFamily(6, {{0, 1}, {2, 3}, {4, 5}})));
  EXPECT_FALSE(null_intersection(1, SetFamily(2, {{0, 1}, {}})));  // |A_1| > k
  EXPECT_THROW(null_intersection(1, SetFamily(2, std::vector<std::vector<std::size_t>>(9))), Error);
}

TEST(Setfam, NullIntersectionMatchesRandomMatrix) {
  const PrimeField F(10007);
  Rng rng(1);
  for (int s = 0; s < 300; ++s) {
    const std::size_t k = 1 + rng.below(4), n = 2 + rng.below(5), ell = 1 + rng.below(3);
    const auto fam = test::rand_family(n, ell, rng);
    bool small = true;
    for (std::size_t i = 0; i < ell; ++i) small = small && fam.size(i) <= k;
    if (!small) continue;
    const auto V = test::rand_mat(F, k, n, rng);
    const auto W = test::rand_mat(F, k, n, rng);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < ell; ++i) sum += fam.size(i);
    // generic = max over two draws of the column rank of 𝒢
    const auto r = std::max(rank(build_G(V, fam)), rank(build_G(W, fam)));
    EXPECT_EQ(null_intersection(k, fam), r == k + sum) << fam.to_string() << " k=" << k;
  }
}

TEST(Setfam, NullIntersectionMonotone) {
  Rng rng(2);
  for (int s = 0; s < 300; ++s) {
    const std::size_t k = 1 + rng.below(3), n = 2 + rng.below(4);
    const auto fam = test::rand_family(n, 3, rng);
    if (!null_intersection(k, fam)) continue;
    auto masks = fam.masks();
    const std::size_t i = rng.below(3);
    masks[i] &= rng.next();
    EXPECT_TRUE(null_intersection(k, SetFamily::from_masks(n, masks)));
  }
}

TEST(Setfam, SaturationExamples) {
  const GenericTester tester;
  EXPECT_TRUE(saturation_property(3, SetFamily(4, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}), tester));
  EXPECT_FALSE(saturation_property(1, SetFamily(3, {{}, {}}), tester));
  EXPECT_TRUE(saturation_property(1, SetFamily(2, {{0}, {1}}), tester));
}

TEST(Setfam, SaturationRemovalCorollary) {
  const GenericTester tester;
  Rng rng(3);
  int hits = 0;
  for (int s = 0; s < 400; ++s) {
    const std::size_t n = 2 + rng.below(4), ell = 2 + rng.below(2);
    const std::size_t k = 1 + rng.below(2), d = rng.below(2);
    const auto fam = test::rand_family(n, ell, rng);
    if (!saturation_property(k + d, fam, tester)) continue;
    Mask B = rng.next() & full_mask(n);
    while (popcount(B) > d) B &= B - 1;
    auto masks = fam.masks();
    for (auto& m : masks) m &= ~B;
    EXPECT_TRUE(saturation_property(k, SetFamily::from_masks(n, masks), tester));
    ++hits;
  }
  EXPECT_GT(hits, 20);
}

TEST(Setfam, PatternFamilyConversion) {
  const ErasurePattern none(2, 3);
  const auto f0 = pattern_to_family(none);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(f0.mask(i), full_mask(3));
  const auto f1 = pattern_to_family(ErasurePattern::full(2, 3));
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(f1.mask(i), 0u);
  const ErasurePattern E(2, 2, {{0, 0}});
  const auto f = pattern_to_family(E);
  EXPECT_EQ(f.members(0), (std::vector<std::size_t>{1}));
  EXPECT_EQ(f.members(1), (std::vector<std::size_t>{0, 1}));
  Rng rng(4);
  for (int s = 0; s < 100; ++s) {
    const auto P = pattern_from_bits(3, 4, rng.next());
    EXPECT_EQ(family_to_pattern(pattern_to_family(P)), P);
  }
}

TEST(Setfam, RegularityExamples) {
  EXPECT_TRUE(regularity_check(ErasurePattern(3, 4), 1, 2));
  EXPECT_FALSE(regularity_check(ErasurePattern::full(2, 2), 1, 1));
  EXPECT_TRUE(regularity_check(ErasurePattern(2, 2, {{0, 0}, {0, 1}, {1, 0}}), 1, 1));
  EXPECT_THROW(regularity_check(ErasurePattern(13, 2), 1, 1), Error);
}

// The orientation of the inequality is fixed by this calibration: it must
// agree with rank correctability for every pattern on the small grids.
TEST(Setfam, RegularityCalibration) {
  Rng rng(5);
  for (std::size_t m = 2; m <= 3; ++m)
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t b = 0; b <= 2 && b < n; ++b)
        for (Mask bits = 0; bits < (Mask{1} << (m * n)); ++bits) {
          const auto E = pattern_from_bits(m, n, bits);
          ASSERT_EQ(regularity_check(E, 1, b), parity_correctable(E, b, rng))
              << "m=" << m << " n=" << n << " b=" << b << " bits=" << bits;
        }
}

TEST(Setfam, SaturationMatchesRegularity) {
  const GenericTester tester;
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t b = 0; b < n; ++b)
        for (Mask bits = 0; bits < (Mask{1} << (m * n)); ++bits) {
          const auto E = pattern_from_bits(m, n, bits);
          ASSERT_EQ(saturation_property(n - b, pattern_to_family(E), tester), regularity_check(E, 1, b))
              << "m=" << m << " n=" << n << " b=" << b << " bits=" << bits;
        }
}

TEST(Setfam, ReducePattern) {
  EXPECT_EQ(reduce_pattern(ErasurePattern(2, 2, {{1, 1}}), 1, 1), ErasurePattern(2, 2));
  EXPECT_EQ(reduce_pattern(ErasurePattern::full(3, 3), 1, 1), ErasurePattern::full(3, 3));
  Rng rng(6);
  for (int s = 0; s < 100; ++s) {
    const std::size_t b = 1 + rng.below(2);
    const auto E = pattern_from_bits(3, 4, rng.next());
    const auto R = reduce_pattern(E, 1, b);
    for (auto [i, j] : R.cells()) EXPECT_TRUE(E.erased(i, j));
    EXPECT_EQ(parity_correctable(E, b, rng), parity_correctable(R, b, rng));
  }
}

TEST(Setfam, EnumerationBounds) {
  EXPECT_EQ(pattern_count_bound(3, 4, 1, 1), BigInt(627));  // C(4,≤2)·C(6,≤4) = 11·57
  EXPECT_LE(enumerate_check_patterns(2, 2, 1, 1).size(), 16u);
  for (std::size_t m = 2; m <= 3; ++m)
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t b = 1; b <= 2 && b < n; ++b) {
        const auto pats = enumerate_check_patterns(m, n, 1, b);
        EXPECT_LE(BigInt(pats.size()), pattern_count_bound(m, n, 1, b));
        for (const auto& E : pats) {
          EXPECT_TRUE(regularity_check(E, 1, b));
          EXPECT_EQ(reduce_pattern(E, 1, b), E);
        }
      }
  EXPECT_THROW(enumerate_check_patterns(5, 6, 1, 1), Error);
}

TEST(Setfam, BinomialSums) {
  EXPECT_EQ(binomial_sum(5, -1), 0);
  EXPECT_EQ(binomial_sum(5, 5), 32);
  EXPECT_EQ(binomial_sum(5, 9), 32);
  EXPECT_EQ(binomial_sum(5, 2), 16);
  EXPECT_EQ(binomial_sum(0, 0), 1);
  EXPECT_EQ(binomial(6, 3), 20);
}

TEST(Setfam, PadPattern) {
  const ErasurePattern E(3, 4, {{0, 1}});
  EXPECT_EQ(pad_pattern(E, 0, 0), E);
  EXPECT_EQ(pad_pattern(E, full_mask(3), 0), ErasurePattern::full(3, 4));
  Rng rng(7);
  int promoted = 0;
  for (int s = 0; s < 200 && promoted < 50; ++s) {
    const std::size_t a = 1 + rng.below(2), b = 1 + rng.below(2);
    const auto P = pattern_from_bits(3, 4, rng.next() & rng.next());
    if (!generic_correctable(P, a, b, rng)) continue;
    const Mask A = rng.below(2) ? Mask{1} << rng.below(3) : 0;
    const Mask B = rng.below(2) ? Mask{1} << rng.below(4) : 0;
    const std::size_t a2 = std::min<std::size_t>(a + popcount(A), 3), b2 = std::min<std::size_t>(b + popcount(B), 4);
    EXPECT_TRUE(generic_correctable(pad_pattern(P, A, B), a2, b2, rng));
    ++promoted;
  }
  EXPECT_EQ(promoted, 50);
}

TEST(Setfam, IndexType) {
  const SetFamily f(3, {{0, 1}, {1}});
  EXPECT_EQ(index_type(2, f), 0u);
  EXPECT_EQ(index_type(1, f), 3u);
  EXPECT_EQ(index_type(0, f), 1u);
}

TEST(Setfam, FamilyEnumerationDedupes) {
  const auto cands = subsets_with_size(3, 0, 3);
  EXPECT_EQ(cands.size(), 8u);
  // multisets of size 2 from 8 candidates: C(9, 2) = 36
  EXPECT_EQ(for_each_family(2, cands, [](const std::vector<Mask>&) { return true; }), 36u);
}
