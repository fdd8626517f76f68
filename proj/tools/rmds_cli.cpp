// Experiment harness: verify, sample, bound, trace, oracle.
// Exit codes: 0 holds / success, 1 fails, 2 inconclusive, 3 error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "rmds/bounds.hpp"
#include "rmds/codes.hpp"
#include "rmds/dispatch.hpp"
#include "rmds/faulty.hpp"
#include "rmds/io.hpp"
#include "rmds/sweep.hpp"
#include "rmds/verify.hpp"

using namespace rmds;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string code_file, pool = "rs", property, out, format = "json", mode = "with-rep";
  std::string kind, family, alpha = "rs", sweep = "duality", epsilon = "1", rate = "1/2", framework = "lower";
  std::size_t ell = 2, d = 0, L = 1, b_prime = 0, n = 0, k = 2, m = 2, r = 0, s = 3, codes = 50, b = 1;
  std::size_t trials = 0, ext = 1, curve_degree = 0, t = 1;
  std::string pool_size, P;
  u64 p = 2147483647ULL, seed = 1;
  unsigned field_m = 1;
  bool reproducible = false;
};

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Holds: return 0;
    case Verdict::Fails: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 3;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  require(bool(f), Errc::MalformedInput, "cannot open output file " + o.out);
  f << text;
}

json envelope(const Options& o, const std::string& command, json config) {
  return json{{"tool", "rmds_cli"}, {"version", kVersion}, {"command", command}, {"config", std::move(config)},
              {"master_seed", o.seed}};
}

void finish(const Options& o, json doc, const Stopwatch& sw) {
  if (!o.reproducible) doc["wall_ms"] = sw.ms();
  emit(o, doc.dump(2) + "\n");
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  require(bool(f), Errc::MalformedInput, "cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedInput, std::string("malformed JSON: ") + e.what());
  }
}

GenericTester tester_for(const Options& o) {
  GenericTester t;
  t.seed = derive_seed(o.seed, 0x7e57);
  return t;
}

template <class Field>
VerificationReport run_property(const Options& o, const Code<Field>& C, const GenericTester& tester) {
  if (o.property == "mds") return is_mds_ell(C, o.ell);
  if (o.property == "rmds-lower") return is_rmds_lower(C, o.d, o.ell);
  if (o.property == "rmds-upper") return is_rmds_upper(C, o.d, o.ell, tester);
  if (o.property == "rldmds") return is_rldmds(C, o.d, o.L);
  if (o.property == "relaxed-mr") return is_relaxed_mr(parity_code(C.field, o.m), C, o.b_prime, tester);
  throw Error(Errc::ParameterOutOfRange, "unknown property: " + o.property);
}

json property_config(const Options& o) {
  return json{{"property", o.property}, {"ell", o.ell}, {"d", o.d}, {"L", o.L}, {"b_prime", o.b_prime}, {"m", o.m}};
}

int cmd_verify(const Options& o) {
  Stopwatch sw;
  const json doc = read_json_file(o.code_file);
  require(doc.contains("field"), Errc::MalformedInput, "code file lacks \"field\"");
  const FieldSpec spec = field_from_json(doc.at("field"));
  return with_field(spec, [&](auto F) {
    const auto C = code_from_json(F, doc);
    const auto rep = run_property(o, C, tester_for(o));
    json cfg = property_config(o);
    cfg["code"] = o.code_file;
    json out = envelope(o, "verify", cfg);
    out["code"] = C.label;
    out["report"] = report_to_json(rep, o.reproducible);
    finish(o, out, sw);
    return exit_code(rep.verdict);
  });
}

std::pair<double, double> clopper_pearson(std::size_t x, std::size_t n) {
  if (n == 0) return {0, 1};
  const double a = 0.05;
  const double lo = x == 0 ? 0.0 : boost::math::ibeta_inv(double(x), double(n - x + 1), a / 2);
  const double hi = x == n ? 1.0 : boost::math::ibeta_inv(double(x + 1), double(n - x), 1 - a / 2);
  return {lo, hi};
}

struct TrialRow {
  u64 seed = 0;
  Verdict verdict{};
  std::string witness;
  double ms = 0;
};

template <class Field>
int sample_with(const Options& o, const Field& F, const Stopwatch& sw) {
  require(o.n >= 1, Errc::ParameterOutOfRange, "--n is required");
  const PunctureMode mode = o.mode == "with-rep" ? PunctureMode::WithRepetition : PunctureMode::WithoutRepetition;
  std::optional<ColumnPool<Field>> pool;
  BoundParams bp;
  bp.n = o.n;
  bp.k = o.k;
  bp.r = o.d;
  bp.repetition = mode == PunctureMode::WithRepetition;
  const BigInt q = F.order() ? BigInt(*F.order()) : BigInt(0);
  if (o.pool == "rs") {
    pool = rs_full_pool(F, o.k);
    bp.pool_size = q;
    bp.curve_degree = o.k - 1;
  } else if (o.pool == "random-linear") {
    pool = random_linear_pool(F, o.k);
    bp.pool_size = boost::multiprecision::pow(q, static_cast<unsigned>(o.k));
    // Schwartz-Zippel count of zeros on the whole space, for degree-ℓ polynomials.
    const std::size_t deg = o.property == "rmds-upper" ? o.ell - 1 : o.L;
    bp.P = BigInt(deg) * boost::multiprecision::pow(q, static_cast<unsigned>(o.k - 1));
  } else {
    throw Error(Errc::ParameterOutOfRange, "unknown pool: " + o.pool);
  }
  if (o.curve_degree) bp.curve_degree = o.curve_degree;
  const GenericTester tester = tester_for(o);
  std::vector<TrialRow> rows(o.trials);
  std::size_t threads = 1;
  if (const char* env = std::getenv("RMDS_THREADS")) threads = std::max<long>(1, std::strtol(env, nullptr, 10));
  threads = std::min(threads, std::max<std::size_t>(o.trials, 1));
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < o.trials;) {
      try {
        Stopwatch tw;
        TrialRow& row = rows[i];
        row.seed = derive_seed(o.seed, i);
        const auto C = puncture(*pool, o.n, mode, row.seed);
        const auto rep = run_property(o, C, tester);
        row.verdict = rep.verdict;
        if (rep.witness && rep.witness->family) row.witness = rep.witness->family->to_string();
        row.ms = tw.ms();
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool_threads;
  for (std::size_t t = 1; t < threads; ++t) pool_threads.emplace_back(worker);
  worker();
  for (auto& th : pool_threads) th.join();
  if (err) std::rethrow_exception(err);

  std::size_t fails = 0, inconclusive = 0;
  for (const auto& r : rows) {
    fails += r.verdict == Verdict::Fails;
    inconclusive += r.verdict == Verdict::Inconclusive;
  }
  std::optional<BoundValue> bound;
  if (o.d % 2 == 0) {
    if (o.property == "rldmds") {
      bp.L = o.L;
      bound = lower_failure_bound(bp);
    } else if (o.property == "rmds-upper") {
      bp.L = o.ell;
      bound = upper_failure_bound(bp);
    }
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "trial,seed,verdict,witness_ref,ms\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << i << ',' << rows[i].seed << ',' << verdict_name(rows[i].verdict) << ",\"" << rows[i].witness << "\",";
      if (!o.reproducible) os << rows[i].ms;
      os << '\n';
    }
    emit(o, os.str());
    return 0;
  }
  json cfg = property_config(o);
  cfg.update(json{{"pool", o.pool}, {"field", F.spec().to_string()}, {"n", o.n}, {"k", o.k}, {"trials", o.trials}, {"mode", o.mode}});
  json out = envelope(o, "sample", cfg);
  json table = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    json row{{"trial", i}, {"seed", rows[i].seed}, {"verdict", verdict_name(rows[i].verdict)},
             {"witness_ref", rows[i].witness}};
    if (!o.reproducible) row["ms"] = rows[i].ms;
    table.push_back(row);
  }
  out["trials"] = table;
  out["failures"] = fails;
  out["inconclusive"] = inconclusive;
  out["failure_rate"] = o.trials ? double(fails) / double(o.trials) : 0.0;
  const auto [lo, hi] = clopper_pearson(fails, o.trials);
  out["clopper_pearson_95"] = {lo, hi};
  out["log2_bound"] = bound ? json(bound->log2) : json(nullptr);
  finish(o, out, sw);
  return 0;
}

int cmd_sample(const Options& o) {
  Stopwatch sw;
  const FieldSpec spec = smallest_field_spec(o.p, o.field_m);
  return with_field(spec, [&](auto F) { return sample_with(o, F, sw); });
}

BigRational parse_rational(const std::string& s) {
  try {
    return BigRational(s);
  } catch (const std::exception&) {
    throw Error(Errc::ParameterOutOfRange, "not a rational number: " + s);
  }
}

int cmd_bound(const Options& o) {
  Stopwatch sw;
  json cfg{{"kind", o.kind}};
  json out;
  if (o.kind == "lower" || o.kind == "upper") {
    BoundParams bp;
    bp.n = o.n;
    bp.k = o.k;
    bp.r = o.r;
    bp.L = o.L;
    bp.pool_size = BigInt(o.pool_size.empty() ? "0" : o.pool_size);
    bp.curve_degree = o.curve_degree;
    if (!o.P.empty()) bp.P = BigInt(o.P);
    bp.repetition = o.mode == "with-rep";
    const auto v = o.kind == "lower" ? lower_failure_bound(bp) : upper_failure_bound(bp);
    cfg.update(json{{"n", o.n}, {"k", o.k}, {"r", o.r}, {"L", o.L}, {"pool_size", o.pool_size},
                    {"curve_degree", o.curve_degree}, {"P", o.P}, {"mode", o.mode}});
    out = envelope(o, "bound", cfg);
    out["kind"] = o.kind;
    out["params"] = cfg;
    out["log2_bound"] = v.log2;
    out["threshold"] = nullptr;
  } else if (o.kind == "gs_arith") {
    const auto g = gs_arithmetic(GSTowerParams{o.p, static_cast<unsigned>(o.t), o.s});
    cfg.update(json{{"p", o.p}, {"t", o.t}, {"s", o.s}});
    out = envelope(o, "bound", cfg);
    out["kind"] = o.kind;
    out["params"] = cfg;
    out["genus"] = bigint_to_json(g.genus);
    out["genus_bounds"] = {g.genus_lo, g.genus_hi};
    out["n_points"] = bigint_to_json(g.n_points);
    out["dimension"] = g.dimension ? bigint_to_json(*g.dimension) : json(nullptr);
  } else {
    ThresholdParams tp;
    tp.n = o.n;
    tp.k = o.k;
    tp.L = o.L;
    tp.b = o.b;
    tp.epsilon = parse_rational(o.epsilon);
    tp.R = parse_rational(o.rate);
    tp.repetition = o.mode == "with-rep";
    const auto t = field_threshold(threshold_kind(o.kind), tp);
    cfg.update(json{{"n", o.n}, {"k", o.k}, {"L", o.L}, {"b", o.b}, {"epsilon", o.epsilon}, {"R", o.rate},
                    {"mode", o.mode}});
    out = envelope(o, "bound", cfg);
    out["kind"] = o.kind;
    out["params"] = cfg;
    out["log2_bound"] = nullptr;
    out["log2_threshold"] = t.log2;
    const json tj = threshold_to_json(t);
    out["threshold"] = tj["threshold"];
    out["detail"] = tj;
  }
  finish(o, out, sw);
  return 0;
}

SetFamily parse_family(const std::string& text, std::size_t n) {
  std::vector<std::vector<std::size_t>> sets;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<std::size_t> s;
    std::stringstream ps(part);
    std::string tok;
    while (std::getline(ps, tok, ','))
      if (!tok.empty()) s.push_back(std::stoul(tok));
    sets.push_back(s);
  }
  return SetFamily(n, sets);
}

template <class TF>
int trace_with(const Options& o, const FrameworkInstance& inst, const Matrix<TF>& alpha, const TF& F,
               const Stopwatch& sw) {
  GenericTester tester = tester_for(o);
  const auto pts = moment_curve_points(F, inst.k);
  const auto T = run_faulty_algorithm(inst, alpha, pts, tester);
  json cfg{{"framework", o.framework}, {"family", o.family}, {"n", inst.n}, {"k", inst.k}, {"r", inst.r},
           {"alpha", o.alpha}, {"p", o.p}, {"ext", o.ext}};
  json out = envelope(o, "trace", cfg);
  out["trace"] = trace_to_json(T);
  const std::size_t w = inst.w(inst.n);
  bool ok;
  if (T.outcome == TraceOutcome::Success) {
    const auto M = inst.mode == FrameworkMode::Lower ? build_H(alpha, inst.family) : build_G(alpha, inst.family);
    const std::size_t rk = rank(M);
    out["rank"] = rk;
    out["w"] = w;
    ok = rk >= w;
  } else {
    const auto chk = validate_trace(T, inst, pts, tester);
    out["validation"] = json{{"ok", chk.ok}, {"clause", chk.clause}};
    ok = chk.ok;
  }
  finish(o, out, sw);
  return ok ? 0 : 1;
}

int cmd_trace(const Options& o) {
  Stopwatch sw;
  require(o.n >= 1 && !o.family.empty(), Errc::ParameterOutOfRange, "--n and --family are required");
  const auto fm = o.framework == "upper" ? FrameworkMode::Upper : FrameworkMode::Lower;
  require(o.framework == "upper" || o.framework == "lower", Errc::ParameterOutOfRange, "--framework is lower or upper");
  const auto inst = make_instance(fm, parse_family(o.family, o.n), o.k, o.r);
  if (o.alpha == "rs") {
    require(o.ext == 1, Errc::ParameterOutOfRange, "random RS α uses the base field directly");
    const PrimeField F(o.p);
    return trace_with(o, inst, moment_curve_alpha(F, o.k, o.n, derive_seed(o.seed, 0xa1)), F, sw);
  }
  if (o.alpha == "equal") {
    const Embedding emb(smallest_field_spec(o.p, 1), static_cast<unsigned>(o.ext));
    const ExtField& E = emb.ext();
    const u64 t = derive_seed(o.seed, 0xa2) % o.p;
    const std::vector<u64> tc{t};
    return trace_with(o, inst, constant_alpha(E, o.k, o.n, emb(tc)), E, sw);
  }
  throw Error(Errc::ParameterOutOfRange, "unknown --alpha: " + o.alpha);
}

int cmd_oracle(const Options& o) {
  Stopwatch sw;
  require(o.sweep == "duality", Errc::ParameterOutOfRange, "unknown sweep: " + o.sweep);
  const auto res = duality_sweep(o.codes, o.seed, tester_for(o));
  json out = envelope(o, "oracle", json{{"sweep", o.sweep}, {"codes", o.codes}});
  json cases = json::array();
  for (const auto& c : res.cases)
    cases.push_back(json{{"code", c.code}, {"d", c.d}, {"L", c.L}, {"rldmds", verdict_name(c.rldmds)},
                         {"rmds_lower_dual", verdict_name(c.lower_dual)}, {"avg_radius_oracle", verdict_name(c.oracle)},
                         {"agree", c.agree}});
  out["cases"] = cases;
  out["disagreements"] = res.disagreements;
  out["order2_checks"] = res.order2_checks;
  out["order2_disagreements"] = res.order2_disagreements;
  out["singleton_violations"] = res.singleton_violations;
  finish(o, out, sw);
  const std::size_t bad = res.disagreements + res.order2_disagreements + res.singleton_violations;
  std::cerr << "disagreements: " << bad << "\n";
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relaxed higher-order MDS experiments"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "master seed");
    c->add_option("--out", o.out, "output file (default stdout)");
    c->add_flag("--reproducible", o.reproducible, "omit wall-clock fields");
  };
  auto params = [&](CLI::App* c) {
    c->add_option("--ell", o.ell, "order ℓ");
    c->add_option("--d", o.d, "slack d");
    c->add_option("--L", o.L, "list size L");
    c->add_option("--b-prime", o.b_prime, "relaxed MR parameter b′");
    c->add_option("--m", o.m, "rows of the parity column code (relaxed-mr)");
  };
  const std::vector<std::string> props{"mds", "rmds-lower", "rmds-upper", "rldmds", "relaxed-mr"};

  auto* verify = app.add_subcommand("verify", "check a property of a code file");
  common(verify);
  params(verify);
  verify->add_option("--code", o.code_file, "code JSON")->required();
  verify->add_option("--property", o.property, "property")->required();

  auto* sample = app.add_subcommand("sample", "Monte Carlo puncturing experiment");
  common(sample);
  params(sample);
  sample->add_option("--pool", o.pool, "rs | random-linear");
  sample->add_option("--p", o.p, "field characteristic");
  sample->add_option("--field-m", o.field_m, "extension degree of the field");
  sample->add_option("--k", o.k, "dimension");
  sample->add_option("--n", o.n, "length")->required();
  sample->add_option("--property", o.property, "property")->required();
  sample->add_option("--trials", o.trials, "number of trials");
  sample->add_option("--mode", o.mode, "with-rep | without-rep")->check(CLI::IsMember({"with-rep", "without-rep"}));
  sample->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  sample->add_option("--curve-degree", o.curve_degree, "override the curve degree used by the bound");

  auto* bound = app.add_subcommand("bound", "evaluate a probability bound or field-size threshold");
  common(bound);
  bound->add_option("--kind", o.kind,
                    "lower | upper | rs_lower | rl_lower | rs_upper | rl_upper | low_codim | gs_lower | gs_upper | "
                    "listcap | gs_arith")
      ->required();
  bound->add_option("--n", o.n);
  bound->add_option("--k", o.k);
  bound->add_option("--r", o.r);
  bound->add_option("--L", o.L);
  bound->add_option("--b", o.b);
  bound->add_option("--pool-size", o.pool_size);
  bound->add_option("--curve-degree", o.curve_degree);
  bound->add_option("--P", o.P, "zero count replacing deg X · degree");
  bound->add_option("--mode", o.mode)->check(CLI::IsMember({"with-rep", "without-rep"}));
  bound->add_option("--epsilon", o.epsilon, "rational, e.g. 1/10");
  bound->add_option("--R", o.rate, "rate, rational");
  bound->add_option("--p", o.p);
  bound->add_option("--t", o.t);
  bound->add_option("--s", o.s);

  auto* trace = app.add_subcommand("trace", "run the faulty-index search");
  common(trace);
  trace->add_option("--framework", o.framework, "lower | upper");
  trace->add_option("--family", o.family, "sets separated by ';', members by ','")->required();
  trace->add_option("--n", o.n)->required();
  trace->add_option("--k", o.k);
  trace->add_option("--r", o.r);
  trace->add_option("--alpha", o.alpha, "rs | equal");
  trace->add_option("--p", o.p, "base prime");
  trace->add_option("--ext", o.ext, "extension degree for generic points");

  auto* oracle = app.add_subcommand("oracle", "oracle-equivalence sweep");
  common(oracle);
  oracle->add_option("--sweep", o.sweep, "duality");
  oracle->add_option("--codes", o.codes, "number of random codes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  try {
    if ((verify->parsed() || sample->parsed()) &&
        std::find(props.begin(), props.end(), o.property) == props.end())
      throw Error(Errc::ParameterOutOfRange, "unknown property: " + o.property);
    if (verify->parsed()) return cmd_verify(o);
    if (sample->parsed()) return cmd_sample(o);
    if (bound->parsed()) return cmd_bound(o);
    if (trace->parsed()) return cmd_trace(o);
    if (oracle->parsed()) return cmd_oracle(o);
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
