#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmds/codes.hpp"
#include "rmds/verify.hpp"

// Seeded random small codes and the oracle-equivalence sweep run over them.

namespace rmds {

struct SweepLimits {
  std::size_t max_n = 7, max_k = 3, max_q = 16, max_d = 2, max_L = 2;
};

// Random full-rank code with n ≤ max_n, k ≤ max_k, q ≤ max_q a prime power.
Code<TableField> random_sweep_code(std::uint64_t seed, const SweepLimits& lim = {});

struct SweepCase {
  std::string code;  // label with parameters
  std::size_t n = 0, k = 0, q = 0, d = 0, L = 0;
  Verdict rldmds{}, lower_dual{}, oracle{};
  bool agree = true;
};

struct SweepOutcome {
  std::vector<SweepCase> cases;
  std::size_t disagreements = 0;
  std::size_t order2_checks = 0, order2_disagreements = 0;
  // Codes whose best average radius exceeds (L/(L+1))(1−k/n) + 1/n.
  std::size_t singleton_violations = 0;
  std::size_t codes = 0;
};

// For each code and every d ≤ max_d (d ≤ n−k), L ≤ max_L: the relaxed
// LD-MDS verdict, the dual lower relaxation at order L+1 and the brute-force
// list decoding oracle must agree; for d ≤ k the order-2 lower relaxation
// must match the dual's order-2 upper relaxation.
SweepOutcome duality_sweep(std::size_t codes, std::uint64_t master_seed, const GenericTester& tester,
                           const SweepLimits& lim = {});

}  // namespace rmds
