#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "rmds/codes.hpp"
#include "support.hpp"

using namespace rmds;

namespace {

// Every k-subset of columns independent.
template <class F>
bool every_k_columns_independent(const Matrix<F>& G) {
  const std::size_t k = G.rows(), n = G.cols();
  for (Mask S = 0; S < (Mask{1} << n); ++S)
    if (popcount(S) == k && rank_of_columns(G, S) != k) return false;
  return true;
}

}  // namespace

TEST(Codes, RsPoolVandermonde) {
  const PrimeField F(7);
  const auto P = rs_pool(F, 2, std::vector<u64>{0, 1, 2});
  EXPECT_EQ(P.columns()(0, 0), 1u);
  EXPECT_EQ(P.columns()(0, 2), 1u);
  EXPECT_EQ(P.columns()(1, 0), 0u);
  EXPECT_EQ(P.columns()(1, 2), 2u);
  const auto P1 = rs_pool(F, 1, std::vector<u64>{3, 4});
  EXPECT_EQ(P1.columns()(0, 0), 1u);
  EXPECT_EQ(P1.columns()(0, 1), 1u);
  EXPECT_THROW(rs_pool(F, 2, std::vector<u64>{1, 1}), Error);
}

TEST(Codes, FullRsIsMds) {
  for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{5, 1}, {7, 1}, {2, 3}}) {
    const auto F = TableField::smallest(p, m);
    const u64 q = *F.order();
    std::vector<TableField::value_type> pts;
    for (u64 t = 0; t < q; ++t) pts.push_back(F.element(t));
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto P = rs_pool(F, k, pts);
      EXPECT_TRUE(every_k_columns_independent(P.columns()));
      const auto C = make_code(P.columns(), "rs");
      EXPECT_EQ(min_distance(C), q - k + 1);
    }
  }
}

TEST(Codes, RandomLinearPoolUniform) {
  const auto F = TableField::smallest(2, 1);
  const auto P = random_linear_pool(F, 3);
  EXPECT_EQ(*P.size(), 8u);
  Rng rng(1);
  std::map<std::vector<u64>, int> counts;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    auto [c, key] = P.draw(rng);
    for (auto x : c) EXPECT_LE(x, 1u);
    counts[key]++;
  }
  EXPECT_EQ(counts.size(), 8u);  // includes the zero column
  double chi2 = 0;
  for (auto& [k, v] : counts) chi2 += (v - draws / 8.0) * (v - draws / 8.0) / (draws / 8.0);
  EXPECT_LT(chi2, 24.32);  // chi-square, 7 dof, p = 0.001
}

TEST(Codes, EvalPool) {
  const PrimeField F(7);
  const auto P = rs_pool(F, 2, std::vector<u64>{0, 1, 2, 3});
  const auto E = eval_pool(P.columns());
  EXPECT_EQ(E.columns()(1, 3), P.columns()(1, 3));
  auto dup = test::mat(F, {{1, 2, 3}, {1, 2, 3}});
  try {
    eval_pool(dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DependentFunctions);
  }
}

TEST(Codes, HermitianExamples) {
  const auto h3 = hermitian_data(2, 3);
  EXPECT_EQ(h3.points.size(), 8u);
  EXPECT_EQ(h3.genus, 1u);
  EXPECT_EQ(h3.basis, (std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {1, 0}, {0, 1}}));
  const auto h2 = hermitian_data(2, 2);
  EXPECT_EQ(h2.basis, (std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {1, 0}}));
  // every point satisfies y² + y = x³ over GF(4)
  const auto& F = h3.field;
  for (auto [x, y] : h3.points) EXPECT_EQ(F.add(F.mul(y, y), y), F.pow(x, 3));
  for (std::size_t s = 1; s < 8; ++s) {
    const auto h = hermitian_data(2, s);
    const auto pool = hermitian_pool(h);
    EXPECT_EQ(pool.k(), s - h.genus + 1);
    EXPECT_EQ(rank(pool.columns()), s);
  }
  const auto C = make_code(hermitian_pool(h3).columns(), "hermitian");
  EXPECT_GE(min_distance(C), 5u);
  EXPECT_THROW(hermitian_data(2, 8), Error);
  EXPECT_THROW(hermitian_data(2, 0), Error);
}

TEST(Codes, PunctureDeterminismAndPermutation) {
  const PrimeField F(11);
  std::vector<u64> pts;
  for (u64 t = 0; t < 11; ++t) pts.push_back(t);
  const auto P = rs_pool(F, 3, pts);
  const auto a = puncture(P, 6, PunctureMode::WithRepetition, 99);
  const auto b = puncture(P, 6, PunctureMode::WithRepetition, 99);
  EXPECT_TRUE(a.G == b.G);
  const auto perm = puncture(P, 11, PunctureMode::WithoutRepetition, 5);
  std::vector<u64> seen;
  for (std::size_t j = 0; j < 11; ++j) seen.push_back(perm.G(1, j));
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, pts);
  EXPECT_THROW(puncture(P, 12, PunctureMode::WithoutRepetition, 5), Error);
}

TEST(Codes, PunctureMarginalUniform) {
  const PrimeField F(5);
  const auto P = rs_pool(F, 2, std::vector<u64>{0, 1, 2, 3, 4});
  std::vector<int> counts(5, 0);
  for (u64 s = 0; s < 2000; ++s) {
    const auto C = puncture(P, 5, PunctureMode::WithRepetition, s);
    for (std::size_t j = 0; j < 5; ++j) counts[C.G(1, j)]++;
  }
  double chi2 = 0;
  for (int c : counts) chi2 += (c - 2000.0) * (c - 2000.0) / 2000.0;
  EXPECT_LT(chi2, 18.47);  // 4 dof, p = 0.001
}

TEST(Codes, Dual) {
  const PrimeField F2(2);
  const auto C = make_code(test::mat(F2, {{1, 1}}), "rep");
  const auto D = dual(C);
  ASSERT_EQ(D.k(), 1u);
  EXPECT_EQ(D.G(0, 0), 1u);
  EXPECT_EQ(D.G(0, 1), 1u);
  const auto F = TableField::smallest(3, 2);
  Rng rng(2);
  int done = 0;
  while (done < 100) {
    const std::size_t k = 1 + rng.below(3), n = k + rng.below(4);
    const auto G = test::rand_mat(F, k, n, rng);
    if (rank(G) != k) continue;
    const Code<TableField> Ck{F, G, "random"};
    const auto H = parity_check(Ck);
    EXPECT_EQ(H.rows(), n - k);
    EXPECT_EQ(rank(H), n - k);
    EXPECT_TRUE(is_zero_matrix(multiply(G, transpose(H))));
    const auto DD = dual(dual(Ck));
    EXPECT_EQ(rank(vstack(DD.G, G)), k);
    ++done;
  }
  EXPECT_THROW(parity_check(Code<PrimeField>{F2, test::mat(F2, {{1, 1}, {1, 1}}), "bad"}), Error);
}

TEST(Codes, Tensor) {
  const PrimeField F2(2);
  const auto P2 = parity_code(F2, 2);
  const auto T = tensor(P2, P2);
  EXPECT_EQ(T.k(), 1u);
  EXPECT_EQ(T.n(), 4u);
  for (std::size_t j = 1; j < 4; ++j) EXPECT_EQ(T.G(0, j), T.G(0, 0));
  const PrimeField F(7);
  std::vector<u64> pts;
  for (u64 t = 0; t < 7; ++t) pts.push_back(t);
  const auto R = make_code(rs_pool(F, 3, pts).columns(), "rs");
  const auto T2 = tensor(parity_code(F, 3), R);
  EXPECT_EQ(rank(T2.G), 2u * 3u);
  // the (m = 3, n = 14, a = 1, b = 4) configuration over GF(16)
  const auto F16 = TableField::smallest(2, 4);
  std::vector<TableField::value_type> p16;
  for (u64 t = 0; t < 14; ++t) p16.push_back(F16.element(t));
  const auto big = tensor(parity_code(F16, 3), make_code(rs_pool(F16, 10, p16).columns(), "rs"));
  EXPECT_EQ(big.n(), 42u);
  EXPECT_EQ(rank(big.G), 20u);
  const PrimeField F5(5);
  EXPECT_THROW(tensor(P2, parity_code(F5, 2)), Error);
}
