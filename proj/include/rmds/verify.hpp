#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "rmds/blockops.hpp"
#include "rmds/bounds.hpp"
#include "rmds/codes.hpp"
#include "rmds/report.hpp"
#include "rmds/setfam.hpp"
#include "rmds/tester.hpp"

namespace rmds {

inline constexpr double kFamilyCap = 1e7;
inline constexpr double kTupleCap = 1e7;

struct ListDecodeParams {
  Rational rho{0};
  std::size_t L = 1;
  std::size_t d = 0;
};

namespace detail {

inline double multiset_count(std::size_t N, std::size_t ell) {
  double c = 1;
  for (std::size_t i = 0; i < ell; ++i) c = c * static_cast<double>(N + i) / static_cast<double>(i + 1);
  return c;
}

inline void check_cap(std::size_t N, std::size_t ell) {
  require(multiset_count(N, ell) <= kFamilyCap, Errc::EnumerationTooLarge, "more than 10^7 families");
}

template <class Field>
class RankCache {
 public:
  explicit RankCache(const Matrix<Field>& V) : V_(V) {}
  std::size_t operator()(Mask cols) {
    auto it = cache_.find(cols);
    if (it != cache_.end()) return it->second;
    return cache_[cols] = rank_of_columns(V_, cols);
  }

 private:
  const Matrix<Field>& V_;
  std::unordered_map<Mask, std::size_t> cache_;
};

inline VerificationReport start_report(const std::string& property, std::map<std::string, long long> params) {
  VerificationReport r;
  r.property = property;
  r.params = std::move(params);
  return r;
}

inline Witness family_witness(const SetFamily& f, std::string note) {
  Witness w;
  w.kind = "family";
  w.family = f;
  w.note = std::move(note);
  return w;
}

template <class Field>
std::vector<std::size_t> zero_columns(const Matrix<Field>& G) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < G.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < G.rows() && zero; ++i) zero = G.field().is_zero(G(i, j));
    if (zero) out.push_back(j);
  }
  return out;
}

}  // namespace detail

// Lower relaxation: nonzero columns, and span intersection 0 for every
// family of sets of size ≤ k−d with the (k−d)-dimensional null
// intersection property. Families with an empty member intersect trivially
// and are skipped. At d = k the property is vacuous, zero columns included:
// that is the reading under which the order-2 duality with the upper
// relaxation and the list-decoding duality at d = n−k hold.
template <class Field>
VerificationReport is_rmds_lower(const Code<Field>& code, std::size_t d, std::size_t ell) {
  Stopwatch sw;
  const std::size_t n = code.n(), k = code.k();
  require(ell >= 2, Errc::ParameterOutOfRange, "order ℓ must be at least 2");
  require(d <= k, Errc::ParameterOutOfRange, "need d ≤ k");
  auto rep = detail::start_report("rmds-lower", {{"d", (long long)d}, {"ell", (long long)ell}, {"n", (long long)n}, {"k", (long long)k}});
  if (d == k) {
    rep.wall_ms = sw.ms();
    return rep;
  }
  if (auto z = detail::zero_columns(code.G); !z.empty()) {
    rep.verdict = Verdict::Fails;
    Witness w;
    w.kind = "columns";
    w.indices = {z.front()};
    w.note = "zero column";
    rep.witness = w;
    rep.wall_ms = sw.ms();
    return rep;
  }
  const std::size_t K = k - d;
  const auto cands = subsets_with_size(n, 1, K);
  detail::check_cap(cands.size(), ell);
  detail::RankCache<Field> rk(code.G);
  for_each_family(ell, cands, [&](const std::vector<Mask>& fam) {
    std::size_t total = 0;
    for (Mask m : fam) total += popcount(m);
    if (total > (ell - 1) * K) return true;
    const auto F = SetFamily::from_masks(n, fam);
    if (!null_intersection(K, F)) return true;
    ++rep.checked;
    std::size_t s = k;
    for (Mask m : fam) s += rk(m);
    const std::size_t dim = s - rank(build_G(code.G, F));
    if (dim != 0) {
      rep.verdict = Verdict::Fails;
      rep.witness = detail::family_witness(F, "span intersection has dimension " + std::to_string(dim));
      return false;
    }
    return true;
  });
  rep.wall_ms = sw.ms();
  return rep;
}

template <class Field>
VerificationReport is_mds_ell(const Code<Field>& code, std::size_t ell) {
  auto rep = is_rmds_lower(code, 0, ell);
  rep.property = "mds";
  rep.params.erase("d");
  return rep;
}

// Upper relaxation: every family with the (k+d)-dimensional saturation
// property is G-saturated.
template <class Field>
VerificationReport is_rmds_upper(const Code<Field>& code, std::size_t d, std::size_t ell, const GenericTester& tester) {
  Stopwatch sw;
  const std::size_t n = code.n(), k = code.k();
  require(ell >= 2, Errc::ParameterOutOfRange, "order ℓ must be at least 2");
  require(k + d <= n, Errc::ParameterOutOfRange, "need d ≤ n − k");
  auto rep = detail::start_report("rmds-upper", {{"d", (long long)d}, {"ell", (long long)ell}, {"n", (long long)n}, {"k", (long long)k}});
  rep.seed = tester.seed;
  const std::size_t K = k + d;
  const auto cands = subsets_with_size(n, 0, n);
  detail::check_cap(cands.size(), ell);
  const double log2_q = tester.generic_field().log2_order();
  double worst = -INFINITY;
  for_each_family(ell, cands, [&](const std::vector<Mask>& fam) {
    std::size_t total = 0;
    for (Mask m : fam) total += popcount(m);
    // rank 𝒢[W] ≤ K + Σ|A_i| < ℓK rules out saturation.
    if (K + total < ell * K) return true;
    const auto F = SetFamily::from_masks(n, fam);
    worst = std::max(worst, tester.log2_error(saturation_degree_bound(K, F), log2_q));
    if (!saturation_property(K, F, tester)) return true;
    ++rep.checked;
    if (rank(build_G(code.G, F)) != ell * k) {
      rep.verdict = Verdict::Fails;
      rep.witness = detail::family_witness(F, "saturated family that is not G-saturated");
      return false;
    }
    return true;
  });
  rep.log2_error = worst;
  if (rep.verdict == Verdict::Holds && worst > tester.log2_epsilon) rep.verdict = Verdict::Inconclusive;
  rep.wall_ms = sw.ms();
  return rep;
}

// Distance part of the relaxed LD-MDS test: rank(G|Ā) = k for all |A| = n−k−d.
template <class Field>
std::optional<Mask> rldmds_distance_witness(const Code<Field>& code, std::size_t d) {
  const std::size_t n = code.n(), k = code.k();
  const std::size_t K = n - k - d;
  detail::RankCache<Field> rk(code.G);
  for (Mask A : subsets_with_size(n, K, K))
    if (rk(full_mask(n) & ~A) != k) return A;
  return std::nullopt;
}

// rank ℋ = n + (ℓ−1)k over families of nonempty sets with the (n−k−d)-
// dimensional null intersection property, for one ℓ.
template <class Field>
VerificationReport rldmds_level(const Code<Field>& code, std::size_t d, std::size_t ell) {
  Stopwatch sw;
  const std::size_t n = code.n(), k = code.k();
  require(k + d <= n, Errc::ParameterOutOfRange, "need d ≤ n − k");
  auto rep = detail::start_report("rldmds-level", {{"d", (long long)d}, {"ell", (long long)ell}, {"n", (long long)n}, {"k", (long long)k}});
  const std::size_t K = n - k - d;
  const auto cands = subsets_with_size(n, 1, K);
  detail::check_cap(cands.size(), ell);
  const std::size_t target = n + (ell - 1) * k;
  for_each_family(ell, cands, [&](const std::vector<Mask>& fam) {
    std::size_t total = 0;
    for (Mask m : fam) total += popcount(m);
    if (total > (ell - 1) * K) return true;
    const auto F = SetFamily::from_masks(n, fam);
    if (!null_intersection(K, F)) return true;
    ++rep.checked;
    const std::size_t r = rank(build_H(code.G, F));
    if (r != target) {
      rep.verdict = Verdict::Fails;
      rep.witness = detail::family_witness(F, "rank of the dual block matrix is " + std::to_string(r));
      return false;
    }
    return true;
  });
  rep.wall_ms = sw.ms();
  return rep;
}

template <class Field>
VerificationReport is_rldmds(const Code<Field>& code, std::size_t d, std::size_t L) {
  Stopwatch sw;
  const std::size_t n = code.n(), k = code.k();
  require(L >= 1, Errc::ParameterOutOfRange, "list size must be positive");
  require(k + d <= n, Errc::ParameterOutOfRange, "need d ≤ n − k");
  auto rep = detail::start_report("rldmds", {{"d", (long long)d}, {"L", (long long)L}, {"n", (long long)n}, {"k", (long long)k}});
  if (rank(code.G) != k) {
    rep.verdict = Verdict::Fails;
    Witness w;
    w.kind = "columns";
    w.note = "generator rows are dependent";
    rep.witness = w;
    rep.wall_ms = sw.ms();
    return rep;
  }
  if (auto A = rldmds_distance_witness(code, d)) {
    // Equivalent to the rank condition failing on the family (A, ∅).
    rep.verdict = Verdict::Fails;
    rep.witness = detail::family_witness(SetFamily::from_masks(n, {*A, 0}),
                                         "a nonzero codeword is supported inside the first set");
    rep.wall_ms = sw.ms();
    return rep;
  }
  for (std::size_t ell = 2; ell <= L + 1; ++ell) {
    auto lv = rldmds_level(code, d, ell);
    rep.checked += lv.checked;
    if (!lv.holds()) {
      rep.verdict = lv.verdict;
      rep.witness = lv.witness;
      break;
    }
  }
  rep.wall_ms = sw.ms();
  return rep;
}

// Smallest total distance Σ_i wt(y − c_i) over L+1 distinct codewords and
// the best center y, with the minimizing tuple (message indices).
struct RadiusSearch {
  std::size_t min_total = 0;
  std::vector<std::uint64_t> tuple;
  std::uint64_t tuples = 0;
  bool exists = false;  // false when the code has fewer than L+1 codewords
};

template <class Field>
RadiusSearch min_total_distance(const Code<Field>& code, std::size_t L) {
  const Field& F = code.field;
  const std::size_t n = code.n();
  std::vector<std::vector<std::uint32_t>> words;
  for_each_codeword<Field>(
      code,
      [&](const std::vector<typename Field::value_type>& cw) {
        std::vector<std::uint32_t> w(n);
        for (std::size_t j = 0; j < n; ++j) w[j] = static_cast<std::uint32_t>(F.index_of(cw[j]));
        words.push_back(std::move(w));
      },
      100'000);
  RadiusSearch res;
  // Translation invariance: one of the codewords may be taken to be zero
  // (message index 0), leaving L distinct nonzero codewords to choose.
  const std::size_t N = words.size() - 1;
  if (N < L) return res;
  require(detail::multiset_count(N - L + 1, L) <= kTupleCap, Errc::EnumerationTooLarge, "more than 10^7 codeword tuples");
  res.exists = true;
  res.min_total = n * (L + 1) + 1;
  std::vector<std::size_t> idx(L);
  for (std::size_t i = 0; i < L; ++i) idx[i] = i + 1;
  std::vector<std::uint32_t> sym(L + 1);
  for (;;) {
    ++res.tuples;
    std::size_t total = 0;
    for (std::size_t j = 0; j < n && total < res.min_total; ++j) {
      sym[0] = words[0][j];
      for (std::size_t i = 0; i < L; ++i) sym[i + 1] = words[idx[i]][j];
      std::size_t best = 1;
      for (std::size_t a = 0; a <= L; ++a) {
        std::size_t c = 0;
        for (std::size_t b = 0; b <= L; ++b) c += sym[a] == sym[b];
        best = std::max(best, c);
      }
      total += (L + 1) - best;
    }
    if (total < res.min_total) {
      res.min_total = total;
      res.tuple.assign(1, 0);
      for (auto i : idx) res.tuple.push_back(i);
    }
    std::size_t i = L;
    while (i > 0 && idx[i - 1] == N - (L - i)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < L; ++j) idx[j] = idx[j - 1] + 1;
  }
  return res;
}

// Average-radius list decoding by brute force: fails iff some L+1
// distinct codewords have total distance ≤ ρ·n·(L+1) from a common center.
template <class Field>
VerificationReport avg_radius_oracle(const Code<Field>& code, const ListDecodeParams& params) {
  Stopwatch sw;
  const std::size_t n = code.n(), L = params.L;
  require(params.rho >= 0 && params.rho <= 1, Errc::ParameterOutOfRange, "radius must lie in [0, 1]");
  auto rep = detail::start_report("avg-radius", {{"L", (long long)L}, {"n", (long long)n}, {"k", (long long)code.k()},
                                                 {"rho_num", params.rho.numerator()}, {"rho_den", params.rho.denominator()}});
  const auto res = min_total_distance(code, L);
  rep.checked = res.tuples;
  if (res.exists) {
    const long long lhs = static_cast<long long>(res.min_total) * params.rho.denominator();
    const long long rhs = params.rho.numerator() * static_cast<long long>(n * (L + 1));
    if (lhs <= rhs) {
      rep.verdict = Verdict::Fails;
      Witness w;
      w.kind = "codewords";
      w.indices = res.tuple;
      w.note = "total distance " + std::to_string(res.min_total);
      rep.witness = w;
    }
    rep.notes["min_total_distance"] = std::to_string(res.min_total);
  }
  rep.wall_ms = sw.ms();
  return rep;
}

// Correctable iff the surviving columns of the tensor generator have full rank.
template <class Field>
bool mr_correctable(const Code<Field>& tcode, const ErasurePattern& E) {
  require(E.m() * E.n() == tcode.n(), Errc::DimensionMismatch, "pattern grid does not match the tensor code");
  const auto keep = E.surviving_indices();
  return rank(select_columns(tcode.G, std::span<const std::size_t>(keep))) == tcode.k();
}

// Relaxed MR with a single parity column code: every E ∈ ℰ_{1,b′} is
// correctable. Correctability only improves on sub-patterns, so it is
// enough to test the maximal members, those with b′m + n − b′ cells.
template <class Field>
VerificationReport is_relaxed_mr(const Code<Field>& col_code, const Code<Field>& row_code, std::size_t b_prime,
                                 const GenericTester& tester) {
  Stopwatch sw;
  const std::size_t m = col_code.n(), n = row_code.n();
  require(col_code.k() + 1 == m, Errc::PreconditionViolated, "column code must have codimension 1");
  require(b_prime <= n, Errc::ParameterOutOfRange, "need b′ ≤ n");
  require(m * n <= kMaxEnumerationCells, Errc::GridTooLarge, "relaxed MR enumeration limited to 25 cells");
  auto rep = detail::start_report("relaxed-mr", {{"b_prime", (long long)b_prime}, {"m", (long long)m}, {"n", (long long)n}});
  rep.seed = tester.seed;
  const auto tcode = tensor(col_code, row_code);
  const std::size_t cells = m * n;
  const std::size_t size = std::min(cells, b_prime * m + n - b_prime);
  const std::size_t K = n - b_prime;
  const double log2_q = tester.generic_field().log2_order();
  rep.log2_error = tester.log2_error(static_cast<double>(m * K), log2_q);
  // Gosper's hack over all `size`-subsets of the cells.
  std::uint64_t v = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
  const std::uint64_t limit = std::uint64_t{1} << cells;
  while (v < limit) {
    ErasurePattern E(m, n);
    for (std::size_t i = 0; i < m; ++i) E.set_row(i, (v >> (i * n)) & full_mask(n));
    if (saturation_property(K, pattern_to_family(E), tester)) {
      ++rep.checked;
      if (!mr_correctable(tcode, E)) {
        rep.verdict = Verdict::Fails;
        Witness w;
        w.kind = "pattern";
        w.pattern = E;
        w.note = "pattern in the generic class that the code cannot correct";
        rep.witness = w;
        break;
      }
    }
    if (v == 0) break;
    const std::uint64_t c = v & (~v + 1), r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  if (rep.verdict == Verdict::Holds && rep.log2_error > tester.log2_epsilon) rep.verdict = Verdict::Inconclusive;
  rep.wall_ms = sw.ms();
  return rep;
}

// Three-way agreement: relaxed LD-MDS of C, lower relaxation of the dual at
// order L+1, and the brute-force list decoding oracle at every L′ ≤ L; plus
// the order-2 agreement of the lower relaxation of C with the upper
// relaxation of its dual when d ≤ k.
struct DualityOutcome {
  Verdict rldmds = Verdict::Holds;
  Verdict lower_dual = Verdict::Holds;
  Verdict oracle = Verdict::Holds;
  std::optional<Verdict> lower2, upper2_dual;
  std::vector<std::size_t> min_totals;  // per L′ = 1..L
  bool agree = true;
};

template <class Field>
DualityOutcome duality_check(const Code<Field>& code, std::size_t d, std::size_t L, const GenericTester& tester) {
  DualityOutcome out;
  const auto D = dual(code);
  out.rldmds = is_rldmds(code, d, L).verdict;
  out.lower_dual = is_rmds_lower(D, d, L + 1).verdict;
  bool oracle_ok = true;
  for (std::size_t Lp = 1; Lp <= L; ++Lp) {
    const auto rho = singleton_radius(code.n(), code.k(), d, Lp);
    const auto res = min_total_distance(code, Lp);
    out.min_totals.push_back(res.min_total);
    if (res.exists && static_cast<long long>(res.min_total) * rho.denominator() <=
                          rho.numerator() * static_cast<long long>(code.n() * (Lp + 1)))
      oracle_ok = false;
  }
  out.oracle = oracle_ok ? Verdict::Holds : Verdict::Fails;
  out.agree = out.rldmds == out.lower_dual && out.lower_dual == out.oracle;
  if (d <= code.k() && code.k() < code.n()) {
    out.lower2 = is_rmds_lower(code, d, 2).verdict;
    out.upper2_dual = is_rmds_upper(D, d, 2, tester).verdict;
    out.agree = out.agree && *out.lower2 == *out.upper2_dual;
  }
  return out;
}

template <class Field>
VerificationReport duality_suite(const Code<Field>& code, std::size_t d, std::size_t L, const GenericTester& tester) {
  Stopwatch sw;
  auto rep = detail::start_report("duality", {{"d", (long long)d}, {"L", (long long)L}, {"n", (long long)code.n()}, {"k", (long long)code.k()}});
  rep.seed = tester.seed;
  const auto o = duality_check(code, d, L, tester);
  rep.notes["rldmds"] = verdict_name(o.rldmds);
  rep.notes["rmds_lower_dual"] = verdict_name(o.lower_dual);
  rep.notes["avg_radius_oracle"] = verdict_name(o.oracle);
  if (o.lower2) {
    rep.notes["rmds_lower_order2"] = verdict_name(*o.lower2);
    rep.notes["rmds_upper_dual_order2"] = verdict_name(*o.upper2_dual);
  }
  if (!o.agree) {
    rep.verdict = Verdict::Fails;
    Witness w;
    w.kind = "disagreement";
    w.note = "equivalent characterizations disagree";
    rep.witness = w;
  }
  rep.wall_ms = sw.ms();
  return rep;
}

}  // namespace rmds
