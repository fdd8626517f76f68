#include "rmds/sweep.hpp"

#include "rmds/rng.hpp"

namespace rmds {

Code<TableField> random_sweep_code(std::uint64_t seed, const SweepLimits& lim) {
  static const std::vector<std::pair<u64, unsigned>> fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                                                               {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};
  std::vector<std::pair<u64, unsigned>> allowed;
  for (auto f : fields) {
    u64 q = 1;
    for (unsigned i = 0; i < f.second; ++i) q *= f.first;
    if (q <= lim.max_q) allowed.push_back(f);
  }
  require(!allowed.empty(), Errc::ParameterOutOfRange, "no field within the size limit");
  Rng rng(seed);
  const auto [p, m] = allowed[rng.below(allowed.size())];
  const TableField F = TableField::smallest(p, m);
  const std::size_t k = 1 + rng.below(lim.max_k);
  const std::size_t n = k + 1 + rng.below(lim.max_n - k);
  for (;;) {
    Matrix<TableField> G(F, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) G(i, j) = F.random(rng);
    if (rank(G) == k)
      return Code<TableField>{F, std::move(G),
                              "random (" + std::to_string(n) + "," + std::to_string(k) + ") over " + F.spec().to_string()};
  }
}

SweepOutcome duality_sweep(std::size_t codes, std::uint64_t master_seed, const GenericTester& tester,
                           const SweepLimits& lim) {
  SweepOutcome out;
  out.codes = codes;
  for (std::size_t c = 0; c < codes; ++c) {
    const auto C = random_sweep_code(derive_seed(master_seed, c), lim);
    const auto D = dual(C);
    const std::size_t n = C.n(), k = C.k();
    const std::size_t q = *C.field.order();
    std::vector<RadiusSearch> best(lim.max_L + 1);
    for (std::size_t L = 1; L <= lim.max_L; ++L) {
      best[L] = min_total_distance(C, L);
      if (best[L].exists && best[L].min_total > L * (n - k) + L + 1) ++out.singleton_violations;
    }
    for (std::size_t d = 0; d <= lim.max_d && k + d <= n; ++d) {
      for (std::size_t L = 1; L <= lim.max_L; ++L) {
        SweepCase sc{C.label, n, k, q, d, L};
        sc.rldmds = is_rldmds(C, d, L).verdict;
        sc.lower_dual = is_rmds_lower(D, d, L + 1).verdict;
        bool ok = true;
        for (std::size_t Lp = 1; Lp <= L; ++Lp) {
          const auto rho = singleton_radius(n, k, d, Lp);
          const auto& b = best[Lp];
          if (b.exists && static_cast<long long>(b.min_total) * rho.denominator() <=
                              rho.numerator() * static_cast<long long>(n * (Lp + 1)))
            ok = false;
        }
        sc.oracle = ok ? Verdict::Holds : Verdict::Fails;
        sc.agree = sc.rldmds == sc.lower_dual && sc.lower_dual == sc.oracle;
        if (!sc.agree) ++out.disagreements;
        out.cases.push_back(sc);
      }
      if (d <= k) {
        ++out.order2_checks;
        const auto lo = is_rmds_lower(C, d, 2).verdict;
        const auto up = is_rmds_upper(D, d, 2, tester).verdict;
        if (lo != up) ++out.order2_disagreements;
      }
    }
  }
  return out;
}

}  // namespace rmds
