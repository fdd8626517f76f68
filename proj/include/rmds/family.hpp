#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rmds/error.hpp"

namespace rmds {

using Mask = std::uint64_t;

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }
std::vector<std::size_t> mask_members(Mask m);
Mask members_mask(const std::vector<std::size_t>& members);

// ℓ subsets A_1..A_ℓ of the ground set [n], n ≤ 64, stored as bitmasks.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::size_t n, const std::vector<std::vector<std::size_t>>& sets);
  static SetFamily from_masks(std::size_t n, std::vector<Mask> masks);

  std::size_t n() const { return n_; }
  std::size_t ell() const { return sets_.size(); }
  Mask mask(std::size_t i) const { return sets_[i]; }
  Mask complement(std::size_t i) const { return full_mask(n_) & ~sets_[i]; }
  const std::vector<Mask>& masks() const { return sets_; }
  std::size_t size(std::size_t i) const { return popcount(sets_[i]); }
  std::vector<std::size_t> members(std::size_t i) const { return mask_members(sets_[i]); }
  std::vector<std::size_t> complement_members(std::size_t i) const { return mask_members(complement(i)); }
  std::size_t total_size() const;
  std::string to_string() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Mask> sets_;
};

// Subset of the m×n grid; erased(i) is the mask of erased columns in row i.
class ErasurePattern {
 public:
  ErasurePattern() = default;
  ErasurePattern(std::size_t m, std::size_t n);
  ErasurePattern(std::size_t m, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& cells);
  static ErasurePattern full(std::size_t m, std::size_t n);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  Mask row(std::size_t i) const { return rows_[i]; }
  void set_row(std::size_t i, Mask erased) { rows_[i] = erased & full_mask(n_); }
  bool erased(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1; }
  void erase(std::size_t i, std::size_t j);
  std::size_t count() const;
  std::size_t column_count(std::size_t j) const;
  std::vector<std::pair<std::size_t, std::size_t>> cells() const;
  // Cell (i, j) has linear index i*n + j.
  std::vector<std::size_t> surviving_indices() const;

  friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;

 private:
  std::size_t m_ = 0, n_ = 0;
  std::vector<Mask> rows_;
};

// τ = { j : i ∈ A_j }, as a mask over [ℓ].
using IndexType = Mask;

}  // namespace rmds
