#include "rmds/setfam.hpp"

#include <algorithm>
#include <sstream>

namespace rmds {

std::vector<std::size_t> mask_members(Mask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask members_mask(const std::vector<std::size_t>& members) {
  Mask m = 0;
  for (auto i : members) m |= Mask{1} << i;
  return m;
}

SetFamily::SetFamily(std::size_t n, const std::vector<std::vector<std::size_t>>& sets) : n_(n) {
  require(n <= 64, Errc::ParameterOutOfRange, "ground set larger than 64");
  require(!sets.empty(), Errc::PreconditionViolated, "a family needs at least one set");
  for (const auto& s : sets) {
    Mask m = 0;
    for (auto e : s) {
      require(e < n, Errc::IndexOutOfBounds, "family element outside the ground set");
      require(!((m >> e) & 1), Errc::PreconditionViolated, "duplicate element within a set");
      m |= Mask{1} << e;
    }
    sets_.push_back(m);
  }
}

SetFamily SetFamily::from_masks(std::size_t n, std::vector<Mask> masks) {
  require(n <= 64, Errc::ParameterOutOfRange, "ground set larger than 64");
  require(!masks.empty(), Errc::PreconditionViolated, "a family needs at least one set");
  for (Mask m : masks) require((m & ~full_mask(n)) == 0, Errc::IndexOutOfBounds, "family element outside the ground set");
  SetFamily f;
  f.n_ = n;
  f.sets_ = std::move(masks);
  return f;
}

std::size_t SetFamily::total_size() const {
  std::size_t t = 0;
  for (Mask m : sets_) t += popcount(m);
  return t;
}

std::string SetFamily::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) os << ", ";
    os << "{";
    auto mem = mask_members(sets_[i]);
    for (std::size_t j = 0; j < mem.size(); ++j) os << (j ? "," : "") << mem[j];
    os << "}";
  }
  os << ")";
  return os.str();
}

ErasurePattern::ErasurePattern(std::size_t m, std::size_t n) : m_(m), n_(n), rows_(m, 0) {
  require(n <= 64, Errc::GridTooLarge, "grids wider than 64 columns are unsupported");
}

ErasurePattern::ErasurePattern(std::size_t m, std::size_t n,
                               const std::vector<std::pair<std::size_t, std::size_t>>& cells)
    : ErasurePattern(m, n) {
  for (auto [i, j] : cells) erase(i, j);
}

ErasurePattern ErasurePattern::full(std::size_t m, std::size_t n) {
  ErasurePattern E(m, n);
  for (auto& r : E.rows_) r = full_mask(n);
  return E;
}

void ErasurePattern::erase(std::size_t i, std::size_t j) {
  require(i < m_ && j < n_, Errc::IndexOutOfBounds, "cell outside the grid");
  rows_[i] |= Mask{1} << j;
}

std::size_t ErasurePattern::count() const {
  std::size_t c = 0;
  for (Mask r : rows_) c += popcount(r);
  return c;
}

std::size_t ErasurePattern::column_count(std::size_t j) const {
  std::size_t c = 0;
  for (Mask r : rows_) c += (r >> j) & 1;
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> ErasurePattern::cells() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m_; ++i)
    for (auto j : mask_members(rows_[i])) out.emplace_back(i, j);
  return out;
}

std::vector<std::size_t> ErasurePattern::surviving_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (!erased(i, j)) out.push_back(i * n_ + j);
  return out;
}

void for_each_partition(std::size_t ell, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (ell == 0) {
    visit({});
    return;
  }
  std::vector<std::size_t> a(ell, 0), maxp(ell, 0);
  // a[0] = 0; a[i] ≤ 1 + max(a[0..i-1]).
  for (;;) {
    visit(a);
    std::size_t i = ell - 1;
    while (i > 0 && a[i] == maxp[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    maxp[i] = std::max(maxp[i - 1], a[i]);
    for (std::size_t j = i + 1; j < ell; ++j) {
      a[j] = 0;
      maxp[j] = maxp[i];
    }
  }
}

bool null_intersection(std::size_t k, const SetFamily& family) {
  const std::size_t ell = family.ell();
  require(ell <= kMaxPartitionBlocks, Errc::TooManyBlocks, "partition enumeration capped at 8 sets");
  for (std::size_t i = 0; i < ell; ++i)
    if (family.size(i) > k) return false;
  bool ok = true;
  std::vector<Mask> inter;
  for_each_partition(ell, [&](const std::vector<std::size_t>& blk) {
    if (!ok) return;
    std::size_t s = 0;
    for (auto b : blk) s = std::max(s, b + 1);
    inter.assign(s, full_mask(family.n()));
    for (std::size_t i = 0; i < ell; ++i) inter[blk[i]] &= family.mask(i);
    std::size_t sum = 0;
    for (Mask m : inter) sum += popcount(m);
    if (sum > (s - 1) * k) ok = false;
  });
  return ok;
}

SetFamily pattern_to_family(const ErasurePattern& E) {
  require(E.m() >= 1, Errc::PreconditionViolated, "pattern needs at least one row");
  std::vector<Mask> masks;
  for (std::size_t i = 0; i < E.m(); ++i) masks.push_back(full_mask(E.n()) & ~E.row(i));
  return SetFamily::from_masks(E.n(), masks);
}

ErasurePattern family_to_pattern(const SetFamily& family) {
  ErasurePattern E(family.ell(), family.n());
  for (std::size_t i = 0; i < family.ell(); ++i) E.set_row(i, family.complement(i));
  return E;
}

bool regularity_check(const ErasurePattern& E, std::size_t a, std::size_t b) {
  const std::size_t m = E.m(), n = E.n();
  require(a <= m && b <= n, Errc::PreconditionViolated, "regularity needs a ≤ m and b ≤ n");
  require(m <= kMaxRegularityDim && n <= kMaxRegularityDim, Errc::GridTooLarge,
          "exhaustive regularity check limited to 12×12 grids");
  std::vector<long long> colcount(n);
  for (Mask S = 0; S < (Mask{1} << m); ++S) {
    const long long s = static_cast<long long>(popcount(S));
    if (s < static_cast<long long>(a)) continue;
    std::fill(colcount.begin(), colcount.end(), 0);
    for (auto i : mask_members(S))
      for (auto j : mask_members(E.row(i))) ++colcount[j];
    std::sort(colcount.begin(), colcount.end(), std::greater<>());
    // The worst T of size t takes the t heaviest columns.
    long long prefix = 0;
    for (std::size_t t = 1; t <= n; ++t) {
      prefix += colcount[t - 1];
      if (t < b) continue;
      const long long rhs = static_cast<long long>(b) * s + static_cast<long long>(a * t) -
                            static_cast<long long>(a * b);
      if (prefix > rhs) return false;
    }
  }
  return true;
}

ErasurePattern reduce_pattern(const ErasurePattern& E, std::size_t a, std::size_t b) {
  ErasurePattern R = E;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < R.m(); ++i) {
      const std::size_t c = popcount(R.row(i));
      if (c > 0 && c <= b) {
        R.set_row(i, 0);
        changed = true;
      }
    }
    for (std::size_t j = 0; j < R.n(); ++j) {
      const std::size_t c = R.column_count(j);
      if (c > 0 && c <= a) {
        for (std::size_t i = 0; i < R.m(); ++i) R.set_row(i, R.row(i) & ~(Mask{1} << j));
        changed = true;
      }
    }
  }
  return R;
}

std::vector<ErasurePattern> enumerate_check_patterns(std::size_t m, std::size_t n, std::size_t a, std::size_t b) {
  require(a == 1, Errc::PreconditionViolated, "pattern enumeration is only complete for a = 1");
  require(b <= n && a <= m, Errc::PreconditionViolated, "need a ≤ m and b ≤ n");
  require(m * n <= kMaxEnumerationCells && m <= kMaxRegularityDim && n <= kMaxRegularityDim,
          Errc::GridTooLarge, "exhaustive pattern enumeration limited to 25 cells");
  // Rows of a reduced pattern are empty or carry more than b erasures.
  std::vector<Mask> row_choices{0};
  for (Mask r = 1; r <= full_mask(n); ++r)
    if (popcount(r) > b) row_choices.push_back(r);
  std::vector<ErasurePattern> out;
  ErasurePattern E(m, n);
  // Regularity is inherited by sub-patterns, so prune on every prefix.
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i == m) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t c = E.column_count(j);
        if (c > 0 && c <= a) return;
      }
      out.push_back(E);
      return;
    }
    for (Mask r : row_choices) {
      E.set_row(i, r);
      if (r == 0 || regularity_check(E, a, b)) dfs(i + 1);
    }
    E.set_row(i, 0);
  };
  dfs(0);
  return out;
}

BigInt binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;
  }
  return r;
}

BigInt binomial_sum(long long a, long long b) {
  if (b < 0) return 0;
  if (b >= a) return BigInt(1) << static_cast<unsigned>(std::max(a, 0LL));
  BigInt s = 0;
  for (long long i = 0; i <= b; ++i) s += binomial(a, i);
  return s;
}

BigInt pattern_count_bound(std::size_t m, std::size_t n, std::size_t a, std::size_t b) {
  using ll = long long;
  const ll M = static_cast<ll>(m), N = static_cast<ll>(n), A = static_cast<ll>(a), B = static_cast<ll>(b);
  BigInt trivial = BigInt(1) << static_cast<unsigned>(m * n);
  BigInt rows = binomial_sum(N, B * (M - A)) * binomial_sum(B * M * (M - A), B * (A + 1) * (M - A));
  BigInt cols = binomial_sum(M, A * (N - B)) * binomial_sum(A * N * (N - B), A * (B + 1) * (N - B));
  return std::min({trivial, rows, cols});
}

ErasurePattern pad_pattern(const ErasurePattern& E, Mask rows, Mask cols) {
  ErasurePattern P = E;
  for (std::size_t i = 0; i < E.m(); ++i) {
    Mask r = E.row(i) | cols;
    if ((rows >> i) & 1) r = full_mask(E.n());
    P.set_row(i, r);
  }
  return P;
}

IndexType index_type(std::size_t i, const SetFamily& family) {
  require(i < family.n(), Errc::IndexOutOfBounds, "index outside the ground set");
  IndexType t = 0;
  for (std::size_t j = 0; j < family.ell(); ++j)
    if ((family.mask(j) >> i) & 1) t |= Mask{1} << j;
  return t;
}

std::size_t for_each_family(std::size_t ell, const std::vector<Mask>& candidates,
                            const std::function<bool(const std::vector<Mask>&)>& visit) {
  if (candidates.empty() || ell == 0) return 0;
  std::vector<std::size_t> idx(ell, 0);
  std::vector<Mask> fam(ell, candidates[0]);
  std::size_t count = 0;
  for (;;) {
    ++count;
    if (!visit(fam)) return count;
    std::size_t i = ell;
    while (i > 0 && idx[i - 1] + 1 == candidates.size()) --i;
    if (i == 0) return count;
    ++idx[i - 1];
    for (std::size_t j = i; j < ell; ++j) idx[j] = idx[i - 1];
    for (std::size_t j = i - 1; j < ell; ++j) fam[j] = candidates[idx[j]];
  }
}

std::vector<Mask> subsets_with_size(std::size_t n, std::size_t lo, std::size_t hi) {
  require(n <= 24, Errc::EnumerationTooLarge, "subset enumeration limited to n ≤ 24");
  std::vector<Mask> out;
  for (Mask s = 0; s <= full_mask(n); ++s) {
    const std::size_t c = popcount(s);
    if (c >= lo && c <= hi) out.push_back(s);
  }
  return out;
}

}  // namespace rmds
