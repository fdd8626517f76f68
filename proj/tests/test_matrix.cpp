#include <gtest/gtest.h>

#include "rmds/matrix.hpp"
#include "support.hpp"

using namespace rmds;
using rmds::test::mat;

TEST(Matrix, RankExamples) {
  const PrimeField F7(7);
  EXPECT_EQ(rank(Matrix<PrimeField>::identity(F7, 3)), 3u);
  EXPECT_EQ(rank(Matrix<PrimeField>(F7, 2, 5)), 0u);
  EXPECT_EQ(rank(Matrix<PrimeField>(F7, 0, 0)), 0u);
  const PrimeField F2(2);
  EXPECT_EQ(rank(mat(F2, {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}})), 2u);
}

TEST(Matrix, KernelExamples) {
  const PrimeField F2(2);
  const auto K = kernel(mat(F2, {{1, 1}}));
  ASSERT_EQ(K.cols(), 1u);
  EXPECT_EQ(K(0, 0), 1u);
  EXPECT_EQ(K(1, 0), 1u);
  EXPECT_EQ(kernel(Matrix<PrimeField>::identity(F2, 2)).cols(), 0u);
}

TEST(Matrix, KernelProperty) {
  const auto F = TableField::smallest(2, 3);
  Rng rng(21);
  for (int s = 0; s < 100; ++s) {
    const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(7);
    auto M = test::rand_mat(F, r, c, rng);
    if (s % 3 == 0 && r > 1)  // force dependence
      for (std::size_t j = 0; j < c; ++j) M(r - 1, j) = M(0, j);
    const auto K = kernel(M);
    EXPECT_EQ(K.cols(), c - rank(M));
    EXPECT_EQ(rank(K), K.cols());
    EXPECT_TRUE(is_zero_matrix(multiply(M, K)));
  }
}

TEST(Matrix, DetExamples) {
  const PrimeField F7(7);
  EXPECT_EQ(det(Matrix<PrimeField>::identity(F7, 2)), 1u);
  EXPECT_EQ(det(mat(F7, {{1, 2}, {3, 4}})), 5u);
  EXPECT_EQ(det(mat(F7, {{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})), 0u);
  try {
    det(mat(F7, {{1, 2, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonSquare);
  }
}

TEST(Matrix, DetMatchesLeibniz) {
  const PrimeField F(101);
  Rng rng(5);
  for (int s = 0; s < 30; ++s) {
    const auto M = test::rand_mat(F, 4, 4, rng);
    std::vector<std::size_t> perm{0, 1, 2, 3};
    u64 sum = 0;
    do {
      int inv = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) inv += perm[i] > perm[j];
      u64 term = 1;
      for (std::size_t i = 0; i < 4; ++i) term = F.mul(term, M(i, perm[i]));
      sum = inv % 2 ? F.sub(sum, term) : F.add(sum, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(det(M), sum);
  }
}

TEST(Matrix, IndexErrors) {
  const PrimeField F7(7);
  const auto I = Matrix<PrimeField>::identity(F7, 2);
  const std::vector<std::size_t> bad{2};
  EXPECT_THROW(select_columns(I, std::span<const std::size_t>(bad)), Error);
  EXPECT_THROW(hstack(I, Matrix<PrimeField>(F7, 3, 1)), Error);
}

TEST(Matrix, StackShapes) {
  const PrimeField F7(7);
  const auto A = mat(F7, {{1, 2}}), B = mat(F7, {{3, 4}});
  const auto H = hstack(A, B), V = vstack(A, B);
  EXPECT_EQ(H.rows(), 1u);
  EXPECT_EQ(H.cols(), 4u);
  EXPECT_EQ(H(0, 2), 3u);
  EXPECT_EQ(V.rows(), 2u);
  EXPECT_EQ(V(1, 1), 4u);
  const std::vector<std::size_t> r{1}, c{0};
  EXPECT_EQ(submatrix(V, std::span<const std::size_t>(r), std::span<const std::size_t>(c))(0, 0), 3u);
}

TEST(Matrix, SpanIntersectionExamples) {
  const PrimeField F2(2);
  const auto V = mat(F2, {{1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(span_intersection_dim(V, SetFamily(3, {{0, 1}, {2}})), 1u);
  EXPECT_EQ(span_intersection_dim(V, SetFamily(3, {{0, 1, 2}, {0, 1, 2}})), 2u);
  EXPECT_EQ(span_intersection_dim(Matrix<PrimeField>::identity(F2, 2), SetFamily(2, {{0}, {1}})), 0u);
  EXPECT_EQ(span_intersection_dim(V, SetFamily(3, {{}, {0}})), 0u);
}

TEST(Matrix, SpanIntersectionMatchesBruteForce) {
  const PrimeField F7(7);
  Rng rng(31);
  for (int s = 0; s < 60; ++s) {
    const std::size_t k = 1 + rng.below(3), n = 2 + rng.below(5), ell = 1 + rng.below(3);
    auto V = test::rand_mat(F7, k, n, rng);
    if (s % 4 == 0) V(0, 0) = 0;
    const auto fam = test::rand_family(n, ell, rng);
    EXPECT_EQ(span_intersection_dim(V, fam), test::brute_intersection_dim(V, fam));
  }
}

TEST(Matrix, SelfIntersectionIsRank) {
  const auto F = TableField::smallest(3, 2);
  Rng rng(41);
  for (int s = 0; s < 100; ++s) {
    const std::size_t k = 1 + rng.below(4), n = 1 + rng.below(7);
    const auto V = test::rand_mat(F, k, n, rng);
    const Mask A = rng.next() & full_mask(n);
    EXPECT_EQ(span_intersection_dim(V, SetFamily::from_masks(n, {A, A})), rank_of_columns(V, A));
  }
}
