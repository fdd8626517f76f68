#pragma once

#include <cstdint>
#include <vector>

#include "rmds/blockops.hpp"
#include "rmds/family.hpp"
#include "rmds/matrix.hpp"
#include "rmds/rng.hpp"

namespace rmds::test {

template <class F>
Matrix<F> mat(const F& field, const std::vector<std::vector<u64>>& rows) {
  Matrix<F> M(field, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) M(i, j) = field.element(rows[i][j]);
  return M;
}

template <class F>
Matrix<F> rand_mat(const F& field, std::size_t r, std::size_t c, Rng& rng) {
  Matrix<F> M(field, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = field.random(rng);
  return M;
}

inline SetFamily rand_family(std::size_t n, std::size_t ell, Rng& rng) {
  std::vector<Mask> masks;
  for (std::size_t i = 0; i < ell; ++i) masks.push_back(rng.next() & full_mask(n));
  return SetFamily::from_masks(n, masks);
}

// Brute force over all q^k vectors: a vector is in span(V|_A) iff appending
// it keeps the rank. Returns log_q of the number of common vectors.
template <class F>
std::size_t brute_intersection_dim(const Matrix<F>& V, const SetFamily& fam) {
  const F& field = V.field();
  const u64 q = *field.order();
  const std::size_t k = V.rows();
  u64 total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= q;
  std::vector<std::size_t> base(fam.ell());
  std::vector<Matrix<F>> blocks;
  for (std::size_t i = 0; i < fam.ell(); ++i) {
    auto idx = fam.members(i);
    blocks.push_back(select_columns(V, std::span<const std::size_t>(idx)));
    base[i] = rank(blocks.back());
  }
  u64 common = 0;
  for (u64 x = 0; x < total; ++x) {
    Matrix<F> col(field, k, 1);
    u64 t = x;
    for (std::size_t r = 0; r < k; ++r, t /= q) col(r, 0) = field.element(t % q);
    bool all = true;
    for (std::size_t i = 0; i < fam.ell() && all; ++i) all = rank(hstack(blocks[i], col)) == base[i];
    common += all;
  }
  std::size_t d = 0;
  for (u64 c = common; c > 1; c /= q) ++d;
  return d;
}

}  // namespace rmds::test
