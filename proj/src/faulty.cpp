#include "rmds/faulty.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace rmds {

FrameworkInstance make_instance(FrameworkMode mode, const SetFamily& family, std::size_t k, std::size_t r) {
  require(family.ell() >= 1, Errc::PreconditionViolated, "empty family");
  require(k >= 1 && k <= family.n(), Errc::ParameterOutOfRange, "need 1 ≤ k ≤ n");
  FrameworkInstance inst{mode, family, family.n(), k, r, family.ell()};
  return inst;
}

std::string check_structure(const FrameworkInstance& inst) {
  const auto L = inst.layout();
  std::vector<std::size_t> refs(inst.n, 0);
  for (const auto& c : L.cols)
    if (c.point) ++refs[*c.point];
  for (std::size_t j = 0; j < inst.n; ++j) {
    const std::size_t t = popcount(index_type(j, inst.family));
    const std::size_t want = inst.mode == FrameworkMode::Upper ? t : inst.ell - t;
    if (refs[j] != want)
      return "point " + std::to_string(j) + " is referenced by " + std::to_string(refs[j]) + " columns, expected " +
             std::to_string(want);
  }
  return {};
}

bool minor_less(const MinorDesc& a, const MinorDesc& b) {
  if (a.cols != b.cols) return a.cols < b.cols;
  return a.rows < b.rows;
}

namespace {

std::map<std::pair<std::size_t, std::size_t>, std::size_t> column_lookup(const BlockLayout& L) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> at;
  for (std::size_t j = 0; j < L.cols.size(); ++j)
    if (L.cols[j].point) at[{*L.cols[j].point, L.cols[j].block}] = j;
  return at;
}

}  // namespace

MinorDesc embed_minor(const FrameworkInstance& inst, const MinorDesc& reduced, Mask excluded) {
  if (inst.mode == FrameworkMode::Upper) return reduced;
  const auto L = inst.layout();
  const auto at = column_lookup(L);
  MinorDesc out = reduced;
  for (auto i : mask_members(excluded)) {
    std::size_t block = inst.ell;
    for (std::size_t j = 0; j < inst.ell && block == inst.ell; ++j)
      if (!((inst.family.mask(j) >> i) & 1)) block = j;
    require(block < inst.ell, Errc::PreconditionViolated, "point lies in every set and has no column in ℋ");
    out.rows.push_back(i);  // top rows come first in the layout
    out.cols.push_back(at.at({i, block}));
  }
  std::sort(out.rows.begin(), out.rows.end());
  std::sort(out.cols.begin(), out.cols.end());
  return out;
}

MinorDesc swap_points(const FrameworkInstance& inst, const MinorDesc& M, std::size_t beta, std::size_t gamma) {
  require(index_type(beta, inst.family) == index_type(gamma, inst.family), Errc::PreconditionViolated,
          "swapped points must have the same type");
  const auto L = inst.layout();
  const auto at = column_lookup(L);
  auto sigma = [&](std::size_t p) { return p == beta ? gamma : p == gamma ? beta : p; };
  MinorDesc out;
  for (auto r : M.rows) out.rows.push_back(L.rows[r].top ? sigma(*L.rows[r].top) : r);
  for (auto c : M.cols) {
    const auto& col = L.cols[c];
    out.cols.push_back(col.point ? at.at({sigma(*col.point), col.block}) : c);
  }
  std::sort(out.rows.begin(), out.rows.end());
  std::sort(out.cols.begin(), out.cols.end());
  return out;
}

Mask involved_points(const FrameworkInstance& inst, const MinorDesc& M) {
  const auto L = inst.layout();
  Mask m = 0;
  for (auto c : M.cols)
    if (L.cols[c].point) m |= Mask{1} << *L.cols[c].point;
  return m;
}

std::map<Mask, std::vector<std::size_t>> refresh_sets(const FrameworkInstance& inst, Mask used) {
  const std::size_t per_type = inst.r >> (inst.ell + 1);
  Mask uni = 0;
  for (Mask m : inst.family.masks()) uni |= m;
  std::map<Mask, std::vector<std::size_t>> S;
  auto pool = mask_members(uni & ~used);
  for (auto it = pool.rbegin(); it != pool.rend(); ++it) {
    auto& v = S[index_type(*it, inst.family)];
    if (v.size() < per_type) v.push_back(*it);
  }
  return S;
}

}  // namespace rmds
