#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rmds/blockops.hpp"
#include "rmds/family.hpp"
#include "rmds/matrix.hpp"
#include "rmds/setfam.hpp"
#include "rmds/tester.hpp"

// Instrumented faulty-index search over the block matrices ℋ (Lower mode)
// and 𝒢 (Upper mode). Minors are always described by row and column indices
// of the full ambient block matrix built on all n points.

namespace rmds {

enum class FrameworkMode { Lower, Upper };

struct FrameworkInstance {
  FrameworkMode mode = FrameworkMode::Lower;
  SetFamily family;
  std::size_t n = 0, k = 0, r = 0, ell = 0;

  // Target rank w(n', k, ·, ℓ) of the matrix on n' remaining points.
  std::size_t w(std::size_t n_remaining) const {
    return mode == FrameworkMode::Lower ? n_remaining + (ell - 1) * k : ell * k;
  }
  BlockLayout layout() const { return mode == FrameworkMode::Lower ? layout_H(n, k, family) : layout_G(n, k, family); }
};

FrameworkInstance make_instance(FrameworkMode mode, const SetFamily& family, std::size_t k, std::size_t r);

// Property 3 and 4 introspection: every ambient column references at most
// one point; a point of type τ is referenced by |τ| columns of 𝒢 and by
// ℓ−|τ| columns of ℋ. Returns an empty string when both hold.
std::string check_structure(const FrameworkInstance& inst);

struct MinorDesc {
  std::vector<std::size_t> rows, cols;  // sorted
  bool operator==(const MinorDesc&) const = default;
};

// Lexicographic order: columns first, then rows.
bool minor_less(const MinorDesc& a, const MinorDesc& b);

enum class TraceOutcome { Success, Trace };

struct FaultyTrace {
  std::vector<std::size_t> B;
  std::vector<MinorDesc> D;
  std::vector<std::size_t> R;  // 1-based positions in B where a refresh happened, then r/2+1
  TraceOutcome outcome = TraceOutcome::Success;
  std::uint64_t seed = 0;
};

// Generic points of the variety the columns come from, over the tester's
// field: a sampler plus the degree of one column in its parameters.
template <class TF>
struct GenericPoints {
  TF field;
  std::function<std::vector<typename TF::value_type>(Rng&)> draw;
  double column_degree = 1;
};

namespace detail {

inline std::uint64_t desc_key(const MinorDesc& M, std::uint64_t salt) {
  std::uint64_t h = mix64(salt);
  for (auto r : M.rows) h = mix64(h ^ (r + 1));
  h = mix64(h ^ 0xfeed);
  for (auto c : M.cols) h = mix64(h ^ (c + 1));
  return h;
}

// Points matrix with α on the indices in `fixed`, generic points elsewhere.
template <class TF>
Matrix<TF> instantiate(const GenericPoints<TF>& pts, const Matrix<TF>* alpha, Mask fixed, std::size_t k,
                       std::size_t n, Rng& rng) {
  Matrix<TF> V(pts.field, k, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (alpha && ((fixed >> j) & 1)) {
      for (std::size_t i = 0; i < k; ++i) V(i, j) = (*alpha)(i, j);
    } else {
      const auto c = pts.draw(rng);
      for (std::size_t i = 0; i < k; ++i) V(i, j) = c[i];
    }
  }
  return V;
}

// Greedy lexicographically first set of independent columns among `cand`.
template <class TF>
std::vector<std::size_t> greedy_columns(const Matrix<TF>& M, const std::vector<std::size_t>& cand, std::size_t want) {
  std::vector<std::size_t> chosen;
  for (auto c : cand) {
    if (chosen.size() == want) break;
    chosen.push_back(c);
    if (rank(select_columns(M, std::span<const std::size_t>(chosen))) < chosen.size()) chosen.pop_back();
  }
  return chosen;
}

}  // namespace detail

// True iff some completion of the free points by generic points gives a
// nonzero value, within tester.trials attempts. Errs only toward false.
template <class TF>
bool generically_nonvanishing(const std::function<typename TF::value_type(const Matrix<TF>&)>& poly_eval,
                              const GenericPoints<TF>& pts, const Matrix<TF>& fixed_points, Mask fixed,
                              const GenericTester& tester, std::uint64_t key) {
  Rng rng = tester.stream(key);
  for (unsigned t = 0; t < tester.trials; ++t) {
    const auto V = detail::instantiate(pts, &fixed_points, fixed, fixed_points.rows(), fixed_points.cols(), rng);
    if (!pts.field.is_zero(poly_eval(V))) return true;
  }
  return false;
}

template <class TF>
typename TF::value_type minor_value(const BlockLayout& L, const MinorDesc& M, const Matrix<TF>& V) {
  return det(assemble(L, V, std::span<const std::size_t>(M.rows), std::span<const std::size_t>(M.cols)));
}

// Lexicographically earliest generically nonvanishing w×w minor of the
// block matrix with every column of an excluded point removed (and, for ℋ,
// the now-zero top rows of excluded points). Indices refer to the ambient
// matrix. Greedy selection of columns, then rows, is exact for this order.
template <class TF>
MinorDesc get_minor(const FrameworkInstance& inst, Mask excluded, const GenericPoints<TF>& pts,
                    const GenericTester& tester) {
  const auto L = inst.layout();
  const std::size_t w = inst.w(inst.n - popcount(excluded));
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < L.rows.size(); ++i)
    if (!L.rows[i].top || !((excluded >> *L.rows[i].top) & 1)) rows.push_back(i);
  for (std::size_t j = 0; j < L.cols.size(); ++j)
    if (!L.cols[j].point || !((excluded >> *L.cols[j].point) & 1)) cols.push_back(j);
  Rng rng = tester.stream(mix64(excluded ^ 0x6d696e6f72ULL));
  const auto V = detail::instantiate<TF>(pts, nullptr, 0, inst.k, inst.n, rng);
  const auto Mr = assemble(L, V, std::span<const std::size_t>(rows), std::span<const std::size_t>(cols));
  const auto local_c = detail::greedy_columns(Mr, iota_indices(cols.size()), w);
  require(local_c.size() == w, Errc::NoMinorFound, "reduced block matrix has generic rank below w");
  const auto Mt = transpose(select_columns(Mr, std::span<const std::size_t>(local_c)));
  const auto local_r = detail::greedy_columns(Mt, iota_indices(rows.size()), w);
  require(local_r.size() == w, Errc::NoMinorFound, "no nonsingular row selection");
  MinorDesc out;
  for (auto c : local_c) out.cols.push_back(cols[c]);
  for (auto r : local_r) out.rows.push_back(rows[r]);
  return out;
}

// Lift a minor of the reduced ℋ to ℋ itself: for each excluded point i add
// its top row and one of its columns. The determinant is unchanged up to
// sign since that top row has a single nonzero in the new minor.
MinorDesc embed_minor(const FrameworkInstance& inst, const MinorDesc& reduced, Mask excluded);

// Relabel the points β and γ (same type) in a minor of the ambient matrix.
MinorDesc swap_points(const FrameworkInstance& inst, const MinorDesc& M, std::size_t beta, std::size_t gamma);

// Points whose columns appear in the minor.
Mask involved_points(const FrameworkInstance& inst, const MinorDesc& M);

// Smallest i such that fixing α_0..α_i makes the minor vanish identically.
template <class TF>
std::optional<std::size_t> faulty_index(const FrameworkInstance& inst, const MinorDesc& M, const Matrix<TF>& alpha,
                                        const GenericPoints<TF>& pts, const GenericTester& tester) {
  const auto L = inst.layout();
  const std::function<typename TF::value_type(const Matrix<TF>&)> eval = [&](const Matrix<TF>& V) {
    return minor_value(L, M, V);
  };
  const Mask inv = involved_points(inst, M);
  Mask fixed = 0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    fixed |= Mask{1} << i;
    if (!((inv >> i) & 1)) continue;
    if (!generically_nonvanishing(eval, pts, alpha, fixed, tester, detail::desc_key(M, i))) return i;
  }
  return std::nullopt;
}

// Sets S_τ: the r/2^{ℓ+1} largest unused indices of each type, drawn from
// the union of the family.
std::map<Mask, std::vector<std::size_t>> refresh_sets(const FrameworkInstance& inst, Mask used);

// Shared driver: `choose` supplies the faulty index at each step (the
// search on α, or the recorded B during replay).
template <class TF>
FaultyTrace faulty_driver(const FrameworkInstance& inst, const GenericPoints<TF>& pts, const GenericTester& tester,
                          const std::function<bool(const MinorDesc&)>& nonvanishing_at_alpha,
                          const std::function<std::size_t(const MinorDesc&, std::size_t step)>& choose) {
  require(inst.r % 2 == 0, Errc::PreconditionViolated, "r must be even");
  require(inst.ell < 63 && (inst.r >> (inst.ell + 1)) >= 1, Errc::PreconditionViolated, "need r/2^{ℓ+1} ≥ 1");
  FaultyTrace T;
  T.seed = tester.seed;
  const std::size_t half = inst.r / 2;
  std::map<Mask, std::vector<std::size_t>> S;
  MinorDesc cur;
  Mask Bmask = 0;
  bool refresh = true;
  while (T.B.size() < half) {
    if (refresh) {
      T.R.push_back(T.B.size() + 1);
      S = refresh_sets(inst, Bmask);
      Mask Smask = 0;
      for (const auto& [tau, v] : S)
        for (auto j : v) Smask |= Mask{1} << j;
      refresh = false;
      const Mask excl = Bmask | Smask;
      cur = get_minor(inst, excl, pts, tester);
      if (inst.mode == FrameworkMode::Lower) cur = embed_minor(inst, cur, excl);
    }
    if (nonvanishing_at_alpha(cur)) {
      T.outcome = TraceOutcome::Success;
      return T;
    }
    const std::size_t beta = choose(cur, T.B.size());
    require(!((Bmask >> beta) & 1), Errc::NoFaultyIndex, "faulty index repeats an earlier one");
    T.B.push_back(beta);
    T.D.push_back(cur);
    Bmask |= Mask{1} << beta;
    auto& St = S[index_type(beta, inst.family)];
    if (!St.empty()) {
      const auto it = std::min_element(St.begin(), St.end());
      const std::size_t gamma = *it;
      St.erase(it);
      cur = swap_points(inst, cur, beta, gamma);
    } else {
      refresh = true;
    }
  }
  T.R.push_back(half + 1);
  T.outcome = TraceOutcome::Trace;
  return T;
}

template <class TF>
FaultyTrace run_faulty_algorithm(const FrameworkInstance& inst, const Matrix<TF>& alpha, const GenericPoints<TF>& pts,
                                 const GenericTester& tester) {
  require(alpha.cols() == inst.n && alpha.rows() == inst.k, Errc::PreconditionViolated, "α must be k×n");
  const auto L = inst.layout();
  return faulty_driver<TF>(
      inst, pts, tester,
      [&](const MinorDesc& M) { return !pts.field.is_zero(minor_value(L, M, alpha)); },
      [&](const MinorDesc& M, std::size_t) {
        const auto b = faulty_index(inst, M, alpha, pts, tester);
        require(b.has_value(), Errc::NoFaultyIndex, "minor vanishes at α but no faulty index was found");
        return *b;
      });
}

struct TraceCheck {
  bool ok = true;
  std::string clause;  // first violated clause: "distinct", "increasing-runs", "refresh-gaps", "replay", "shape"
};

// Checks the structural claims on an emitted trace; clause (iv) replays the
// algorithm from B and the family alone and compares D and R.
template <class TF>
TraceCheck validate_trace(const FaultyTrace& T, const FrameworkInstance& inst, const GenericPoints<TF>& pts,
                          const GenericTester& tester) {
  const std::size_t half = inst.r / 2;
  if (T.outcome != TraceOutcome::Trace || T.B.size() != half || T.D.size() != half || T.R.empty() ||
      T.R.back() != half + 1)
    return {false, "shape"};
  for (std::size_t i = 0; i < T.B.size(); ++i)
    for (std::size_t j = i + 1; j < T.B.size(); ++j)
      if (T.B[i] == T.B[j]) return {false, "distinct"};
  for (std::size_t i = 0; i + 1 < T.R.size(); ++i)
    if (T.R[i] >= T.R[i + 1]) return {false, "shape"};
  for (std::size_t s = 0; s + 1 < T.R.size(); ++s)
    for (std::size_t p = T.R[s]; p + 1 < T.R[s + 1]; ++p)  // 1-based positions p, p+1 in one run
      if (T.B[p - 1] >= T.B[p]) return {false, "increasing-runs"};
  const std::size_t gap = inst.r >> (inst.ell + 1);
  for (std::size_t s = 0; s + 2 < T.R.size(); ++s)
    if (T.R[s + 1] - T.R[s] < gap) return {false, "refresh-gaps"};
  FaultyTrace replay;
  try {
    replay = faulty_driver<TF>(
        inst, pts, tester, [](const MinorDesc&) { return false; },
        [&](const MinorDesc&, std::size_t step) { return T.B[step]; });
  } catch (const Error&) {
    return {false, "replay"};
  }
  if (replay.D != T.D || replay.R != T.R) return {false, "replay"};
  return {};
}

// Generic points of the moment curve t ↦ (1, t, ..., t^{k−1}) over TF.
template <class TF>
GenericPoints<TF> moment_curve_points(const TF& F, std::size_t k) {
  return GenericPoints<TF>{F,
                           [F, k](Rng& rng) {
                             std::vector<typename TF::value_type> c;
                             auto t = F.random(rng), x = F.one();
                             for (std::size_t i = 0; i < k; ++i, x = F.mul(x, t)) c.push_back(x);
                             return c;
                           },
                           static_cast<double>(k > 0 ? k - 1 : 0)};
}

// α with n independent uniform moment-curve columns.
template <class TF>
Matrix<TF> moment_curve_alpha(const TF& F, std::size_t k, std::size_t n, std::uint64_t seed) {
  const auto pts = moment_curve_points(F, k);
  Rng rng(seed);
  return detail::instantiate<TF>(pts, nullptr, 0, k, n, rng);
}

// α with every column equal to the moment-curve point of `t`.
template <class TF>
Matrix<TF> constant_alpha(const TF& F, std::size_t k, std::size_t n, const typename TF::value_type& t) {
  Matrix<TF> A(F, k, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = F.one();
    for (std::size_t i = 0; i < k; ++i, x = F.mul(x, t)) A(i, j) = x;
  }
  return A;
}

}  // namespace rmds
