#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rmds/family.hpp"
#include "rmds/matrix.hpp"

namespace rmds {

enum class BlockKind { GBlock, HBlock };

// Column of a block matrix: either a constant identity column (point empty)
// or the column of point `point` placed in row block `block`.
struct BlockColumn {
  std::optional<std::size_t> point;
  std::size_t block = 0;
  std::size_t unit = 0;  // identity coordinate for constant columns
};

// Row of a block matrix: a top identity row of ℋ (top set) or coordinate
// `coord` of row block `block`.
struct BlockRow {
  std::optional<std::size_t> top;
  std::size_t block = 0;
  std::size_t coord = 0;
};

struct BlockLayout {
  BlockKind kind = BlockKind::GBlock;
  std::size_t n = 0, k = 0, ell = 0;
  std::vector<BlockRow> rows;
  std::vector<BlockColumn> cols;
};

// 𝒢: ℓ row blocks of k rows; k identity columns stacked ℓ times, then the
// columns of A_1, ..., A_ℓ in ascending order, each in its own block.
inline BlockLayout layout_G(std::size_t n, std::size_t k, const SetFamily& family) {
  require(family.n() == n, Errc::IndexOutOfBounds, "family ground set differs from column count");
  BlockLayout L{BlockKind::GBlock, n, k, family.ell(), {}, {}};
  for (std::size_t i = 0; i < family.ell(); ++i)
    for (std::size_t t = 0; t < k; ++t) L.rows.push_back({std::nullopt, i, t});
  for (std::size_t t = 0; t < k; ++t) L.cols.push_back({std::nullopt, 0, t});
  for (std::size_t i = 0; i < family.ell(); ++i)
    for (auto j : family.members(i)) L.cols.push_back({j, i, 0});
  return L;
}

// ℋ: n top identity rows then ℓ blocks of k rows; columns of Ā_1, ..., Ā_ℓ.
inline BlockLayout layout_H(std::size_t n, std::size_t k, const SetFamily& family) {
  require(family.n() == n, Errc::IndexOutOfBounds, "family ground set differs from column count");
  BlockLayout L{BlockKind::HBlock, n, k, family.ell(), {}, {}};
  for (std::size_t j = 0; j < n; ++j) L.rows.push_back({j, 0, 0});
  for (std::size_t i = 0; i < family.ell(); ++i)
    for (std::size_t t = 0; t < k; ++t) L.rows.push_back({std::nullopt, i, t});
  for (std::size_t i = 0; i < family.ell(); ++i)
    for (auto j : family.complement_members(i)) L.cols.push_back({j, i, 0});
  return L;
}

// Entry of the block matrix at (row, col) with point columns read from V.
template <class Field>
typename Field::value_type layout_entry(const BlockRow& r, const BlockColumn& c,
                                        const Matrix<Field>& V) {
  const Field& F = V.field();
  if (!c.point) {
    // Identity columns exist only in 𝒢, where every row is a block row.
    return (!r.top && r.coord == c.unit) ? F.one() : F.zero();
  }
  if (r.top) return *r.top == *c.point ? F.one() : F.zero();
  return r.block == c.block ? V(r.coord, *c.point) : F.zero();
}

template <class Field>
Matrix<Field> assemble(const BlockLayout& L, const Matrix<Field>& V, std::span<const std::size_t> rows,
                       std::span<const std::size_t> cols) {
  require(V.rows() == L.k && V.cols() == L.n, Errc::DimensionMismatch, "point matrix does not match layout");
  Matrix<Field> M(V.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i] < L.rows.size(), Errc::IndexOutOfBounds, "row outside the block matrix");
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require(cols[j] < L.cols.size(), Errc::IndexOutOfBounds, "column outside the block matrix");
      M(i, j) = layout_entry(L.rows[rows[i]], L.cols[cols[j]], V);
    }
  }
  return M;
}

inline std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

template <class Field>
Matrix<Field> assemble(const BlockLayout& L, const Matrix<Field>& V) {
  auto r = iota_indices(L.rows.size()), c = iota_indices(L.cols.size());
  return assemble(L, V, std::span<const std::size_t>(r), std::span<const std::size_t>(c));
}

template <class Field>
Matrix<Field> build_G(const Matrix<Field>& V, const SetFamily& family) {
  return assemble(layout_G(V.cols(), V.rows(), family), V);
}

template <class Field>
Matrix<Field> build_H(const Matrix<Field>& V, const SetFamily& family) {
  return assemble(layout_H(V.cols(), V.rows(), family), V);
}

template <class Field>
std::size_t rank_of_columns(const Matrix<Field>& V, Mask cols) {
  auto idx = mask_members(cols);
  return rank(select_columns(V, std::span<const std::size_t>(idx)));
}

// k + Σ rank(V|A_i) − rank 𝒢.
template <class Field>
std::size_t tian_dim(const Matrix<Field>& V, const SetFamily& family) {
  std::size_t s = V.rows();
  for (std::size_t i = 0; i < family.ell(); ++i) s += rank_of_columns(V, family.mask(i));
  return s - rank(build_G(V, family));
}

// n − k + Σ rank(G|Ā_i) − rank ℋ: the intersection dimension of the dual
// code's column spans.
template <class Field>
std::size_t dual_dim(const Matrix<Field>& G, const SetFamily& family) {
  const std::size_t n = G.cols(), k = G.rows();
  require(n >= k, Errc::PreconditionViolated, "generator must have at least as many columns as rows");
  std::size_t s = n - k;
  for (std::size_t i = 0; i < family.ell(); ++i) s += rank_of_columns(G, family.complement(i));
  return s - rank(build_H(G, family));
}

// rank ℋ_{A}[G] ≥ |B| + rank ℋ_{A∖B}[G|B̄], the reduced family living on
// the ground set [n]∖B (relabelled in order).
template <class Field>
bool puncture_rank_floor(const Matrix<Field>& G, const SetFamily& family, Mask B) {
  const std::size_t n = G.cols();
  Mask uni = 0;
  for (std::size_t i = 0; i < family.ell(); ++i) uni |= family.complement(i);
  require((B & ~uni) == 0, Errc::PreconditionViolated, "B must lie in the union of the complements");
  const auto keep = mask_members(full_mask(n) & ~B);
  std::vector<std::size_t> relabel(n, 0);
  for (std::size_t t = 0; t < keep.size(); ++t) relabel[keep[t]] = t;
  std::vector<Mask> reduced;
  for (std::size_t i = 0; i < family.ell(); ++i) {
    Mask m = 0;
    for (auto j : mask_members(family.mask(i) & ~B)) m |= Mask{1} << relabel[j];
    reduced.push_back(m);
  }
  const auto Gp = select_columns(G, std::span<const std::size_t>(keep));
  const std::size_t lhs = rank(build_H(G, family));
  const std::size_t rhs = popcount(B) + rank(build_H(Gp, SetFamily::from_masks(keep.size(), reduced)));
  return lhs >= rhs;
}

}  // namespace rmds
