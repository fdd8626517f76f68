// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails (a runtime over its limit counts as a failure).

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rmds/bounds.hpp"
#include "rmds/codes.hpp"
#include "rmds/faulty.hpp"
#include "rmds/setfam.hpp"
#include "rmds/sweep.hpp"
#include "rmds/verify.hpp"

using namespace rmds;

namespace {

constexpr std::uint64_t kMaster = 20240601;
const PrimeField kBig((u64{1} << 61) - 1);

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  Stopwatch sw;
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = sw.ms() / 1000.0;
  const bool in_time = s < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  %2d  %-28s %s [%.2f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), s,
              limit_s, in_time ? "" : ", exceeded");
  std::fflush(stdout);
}

template <class F>
Matrix<F> rand_mat(const F& field, std::size_t r, std::size_t c, Rng& rng) {
  return random_matrix(field, r, c, rng);
}

Outcome tian_identity() {
  const PrimeField fields[] = {PrimeField(7), PrimeField(65537)};
  Rng rng(derive_seed(kMaster, 1));
  int agree = 0;
  for (int s = 0; s < 200; ++s) {
    const PrimeField& F = fields[s % 2];
    const std::size_t k = 1 + rng.below(4), n = 1 + rng.below(7), ell = 1 + rng.below(3);
    auto V = rand_mat(F, k, n, rng);
    if (s % 5 == 0 && k > 1)  // rank-deficient instances too
      for (std::size_t j = 0; j < n; ++j) V(k - 1, j) = V(0, j);
    std::vector<Mask> masks;
    for (std::size_t i = 0; i < ell; ++i) masks.push_back(rng.next() & full_mask(n));
    const auto fam = SetFamily::from_masks(n, masks);
    agree += tian_dim(V, fam) == span_intersection_dim(V, fam);
  }
  return {agree == 200, std::to_string(agree) + "/200 instances agree"};
}

Outcome null_intersection_bridge() {
  const GenericTester tester;
  std::size_t families = 0, agree = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto cands = subsets_with_size(n, 0, n);
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t ell = 1; ell <= 3; ++ell)
        for_each_family(ell, cands, [&](const std::vector<Mask>& masks) {
          const auto fam = SetFamily::from_masks(n, masks);
          Rng rng = tester.stream(family_key(fam, 0xb41d9e + k));
          std::size_t best = 0;
          for (unsigned t = 0; t < 2; ++t) best = std::max(best, rank(build_G(rand_mat(kBig, k, n, rng), fam)));
          ++families;
          agree += null_intersection(k, fam) == (best == k + fam.total_size());
          return true;
        });
  }
  return {agree == families, std::to_string(agree) + "/" + std::to_string(families) + " families agree"};
}

SweepOutcome sweep_result;

Outcome duality() {
  sweep_result = duality_sweep(50, derive_seed(kMaster, 3), GenericTester{});
  const auto& o = sweep_result;
  return {o.disagreements == 0 && o.order2_disagreements == 0,
          std::to_string(o.cases.size()) + " (code, d, L) cases, " + std::to_string(o.disagreements) +
              " disagreements; order-2 " + std::to_string(o.order2_disagreements) + "/" +
              std::to_string(o.order2_checks)};
}

Outcome mr_equivalence() {
  const GenericTester tester;
  Rng rng(derive_seed(kMaster, 4));
  const PrimeField F7(7);
  std::size_t patterns = 0, generic_agree = 0, exact_agree = 0, calib = 0, calib_agree = 0;
  for (std::size_t m = 2; m <= 3; ++m)
    for (std::size_t n = 2; n <= 5; ++n)
      for (std::size_t b = 0; b <= 3 && b < n; ++b) {
        const auto col = parity_code(kBig, m);
        const Code<PrimeField> generic_row{kBig, rand_mat(kBig, n - b, n, rng), "generic"};
        const auto T = tensor(col, generic_row);
        // an explicit small-field row code: Reed-Solomon over GF(7)
        std::vector<u64> pts;
        for (u64 t = 0; t < n; ++t) pts.push_back(t);
        const auto rs = make_code(rs_pool(F7, n - b, pts).columns(), "rs");
        const auto Trs = tensor(parity_code(F7, m), rs);
        for (Mask bits = 0; bits < (Mask{1} << (m * n)); ++bits) {
          ErasurePattern E(m, n);
          for (std::size_t i = 0; i < m; ++i) E.set_row(i, (bits >> (i * n)) & full_mask(n));
          const auto fam = pattern_to_family(E);
          ++patterns;
          const bool generic = mr_correctable(T, E);
          generic_agree += saturation_property(n - b, fam, tester) == generic;
          exact_agree += mr_correctable(Trs, E) == (rank(build_G(rs.G, fam)) == m * (n - b));
          if (n <= 4 && b <= 2) {
            ++calib;
            calib_agree += regularity_check(E, 1, b) == generic;
          }
        }
      }
  const bool ok = generic_agree == patterns && exact_agree == patterns && calib_agree == calib;
  return {ok, std::to_string(patterns) + " patterns; saturation " + std::to_string(generic_agree) +
                  ", code-saturation " + std::to_string(exact_agree) + " agree; regularity calibration " +
                  std::to_string(calib_agree) + "/" + std::to_string(calib)};
}

Outcome hermitian() {
  bool ok = true;
  std::string dims;
  for (std::size_t s = 1; s <= 7; ++s) {
    const auto h = hermitian_data(2, s);
    const std::size_t k = rank(hermitian_pool(h).columns());
    ok = ok && k == s - h.genus + 1 && h.basis.size() == k;
    dims += (dims.empty() ? "" : ",") + std::to_string(k);
  }
  const auto h3 = hermitian_data(2, 3);
  const auto C = make_code(hermitian_pool(h3).columns(), "hermitian");
  std::size_t words = 0;
  for_each_codeword<TableField>(C, [&](const std::vector<TableField::value_type>&) { ++words; });
  const std::size_t dist = min_distance(C);
  ok = ok && words == 64 && dist >= 5;
  return {ok, "dimensions " + dims + " for s = 1..7; distance " + std::to_string(dist) + " over " +
                  std::to_string(words) + " codewords"};
}

Outcome bound_vs_monte_carlo() {
  BoundParams p;
  p.n = 8;
  p.k = 2;
  p.r = 4;
  p.L = 2;
  p.pool_size = (BigInt(1) << 31) - 1;
  p.curve_degree = 1;
  const double lg = lower_failure_bound(p).log2;
  const PrimeField F((u64{1} << 31) - 1);
  const auto pool = rs_full_pool(F, 2);
  int fails = 0;
  for (u64 t = 0; t < 200; ++t) {
    const auto C = puncture(pool, 8, PunctureMode::WithRepetition, derive_seed(kMaster, 600 + t));
    fails += !is_rldmds(C, 4, 2).holds();
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "log2 bound %.6f (target -25.2 +- 0.1); %d/200 trials fail", lg, fails);
  return {std::abs(lg + 25.2) <= 0.1 && fails == 0, buf};
}

Outcome algorithm_one() {
  const auto lower = make_instance(FrameworkMode::Lower, SetFamily(14, {{0, 1}, {5}}), 3, 8);
  const auto upper =
      make_instance(FrameworkMode::Upper, SetFamily(14, {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}}), 3, 8);
  int success = 0, traces = 0;
  const auto pts = moment_curve_points(kBig, 3);
  for (u64 s = 0; s < 20; ++s) {
    const auto& inst = s % 2 ? upper : lower;
    GenericTester tester;
    tester.seed = derive_seed(kMaster, 700 + s);
    const auto alpha = moment_curve_alpha(kBig, 3, 14, derive_seed(kMaster, 800 + s));
    const auto T = run_faulty_algorithm(inst, alpha, pts, tester);
    const auto M = inst.mode == FrameworkMode::Lower ? build_H(alpha, inst.family) : build_G(alpha, inst.family);
    success += T.outcome == TraceOutcome::Success && rank(M) >= inst.w(inst.n);
  }
  const Embedding emb(smallest_field_spec(7, 1), 22);
  const auto epts = moment_curve_points(emb.ext(), 3);
  for (u64 s = 0; s < 20; ++s) {
    const auto& inst = s % 2 ? upper : lower;
    GenericTester tester;
    tester.seed = derive_seed(kMaster, 900 + s);
    const auto alpha = constant_alpha(emb.ext(), 3, 14, emb(std::vector<u64>{s % 7}));
    const auto T = run_faulty_algorithm(inst, alpha, epts, tester);
    traces += T.outcome == TraceOutcome::Trace && T.B.size() == inst.r / 2 && validate_trace(T, inst, epts, tester).ok;
  }
  return {success == 20 && traces == 20,
          std::to_string(success) + "/20 SUCCESS with rank >= w; " + std::to_string(traces) + "/20 traces validate"};
}

Outcome pattern_counting() {
  std::size_t cases = 0, within = 0;
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 5; ++n)
      for (std::size_t b = 0; b <= 2 && b <= n; ++b) {
        ++cases;
        within += BigInt(enumerate_check_patterns(m, n, 1, b).size()) <= pattern_count_bound(m, n, 1, b);
      }
  return {within == cases, std::to_string(within) + "/" + std::to_string(cases) + " (m, n, b) counts within the bound"};
}

Outcome singleton_sanity() {
  const auto& o = sweep_result;
  return {o.codes == 50 && o.singleton_violations == 0,
          std::to_string(o.singleton_violations) + " violations over " + std::to_string(o.codes) + " codes"};
}

Outcome thresholds() {
  ThresholdParams p;
  p.n = 8;
  p.k = 2;
  p.L = 2;
  p.epsilon = 1;
  const auto rs = field_threshold(ThresholdKind::RsLower, p);
  const auto gs = gs_arithmetic({2, 2, std::nullopt});
  BoundParams b;
  b.n = 8;
  b.k = 2;
  b.r = 4;
  b.L = 2;
  b.pool_size = (BigInt(1) << 31) - 1;
  b.curve_degree = 1;
  double drift = 0;
  for (const auto& v : {lower_failure_bound(b).value, upper_failure_bound(b).value})
    drift = std::max(drift, std::abs(log2_rational(v, 60) - log2_rational(v, 600)));
  ThresholdParams q;
  q.n = 20;
  q.k = 4;
  q.L = 3;
  q.b = 2;
  q.epsilon = BigRational(3, 7);
  for (auto kind : {ThresholdKind::RsLower, ThresholdKind::RlLower, ThresholdKind::RsUpper, ThresholdKind::LowCodim,
                    ThresholdKind::GsLower, ThresholdKind::GsUpper, ThresholdKind::ListCap})
    drift = std::max(drift, std::abs(field_threshold(kind, q, 60).log2 - field_threshold(kind, q, 600).log2));
  const bool ok = rs.value && *rs.value == 2097160 && gs.genus == 1 && gs.n_points == 4 && drift < 1e-9;
  char buf[160];
  std::snprintf(buf, sizeof buf, "rs_lower %s; GS(2,2) genus %s, N %s; max log2 drift %.2e", rs.value ? rs.value->str().c_str() : "none",
                gs.genus.str().c_str(), gs.n_points.str().c_str(), drift);
  return {ok, buf};
}

}  // namespace

int main() {
  run(1, "tian-identity", 10, tian_identity);
  run(2, "null-intersection-bridge", 120, null_intersection_bridge);
  run(3, "duality", 600, duality);
  run(4, "mr-equivalence", 300, mr_equivalence);
  run(5, "hermitian", 1, hermitian);
  run(6, "bound-vs-monte-carlo", 1800, bound_vs_monte_carlo);
  run(7, "algorithm-1", 300, algorithm_one);
  run(8, "pattern-counting", 60, pattern_counting);
  run(9, "singleton-sanity", 600, singleton_sanity);
  run(10, "thresholds", 60, thresholds);
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
