#include "rmds/bounds.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "rmds/error.hpp"
#include "rmds/setfam.hpp"

namespace rmds {

namespace mp = boost::multiprecision;
using Float60 = mp::number<mp::cpp_dec_float<60>>;
using Float600 = mp::number<mp::cpp_dec_float<600>>;

Rational singleton_radius(std::size_t n, std::size_t k, std::size_t d, std::size_t L) {
  require(n >= 1 && L >= 1, Errc::ParameterOutOfRange, "need n ≥ 1 and L ≥ 1");
  require(k + d <= n, Errc::ParameterOutOfRange, "need 0 ≤ d ≤ n − k");
  return Rational(static_cast<long long>(L), static_cast<long long>(L + 1)) *
         Rational(static_cast<long long>(n - k - d), static_cast<long long>(n));
}

namespace {

template <class F>
F log2_int(const BigInt& x) {
  // x = m·2^s with m < 2^256, so the conversion to F is accurate.
  const std::size_t bits = mp::msb(x) + 1;
  const std::size_t s = bits > 256 ? bits - 256 : 0;
  const BigInt m = x >> s;
  return mp::log(F(m)) / mp::log(F(2)) + F(s);
}

template <class F>
F log2_rat(const BigRational& x) {
  require(x > 0, Errc::ParameterOutOfRange, "log2 of a nonpositive value");
  return log2_int<F>(mp::numerator(x)) - log2_int<F>(mp::denominator(x));
}

BigRational pow_int(const BigRational& b, std::size_t e) {
  BigRational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

BigRational failure_core(const BoundParams& p, const BigRational& prefactor, std::size_t two_exp, const BigInt& P) {
  require(p.r % 2 == 0, Errc::ParameterOutOfRange, "r must be even");
  require(p.r / 2 <= p.n, Errc::ParameterOutOfRange, "need r/2 ≤ n");
  const BigInt denom = p.pool_size - (p.repetition ? BigInt(0) : BigInt(p.n));
  require(denom > 0, Errc::PoolTooSmall, "pool size must exceed n without repetition");
  BigRational v = prefactor * BigRational(binomial(p.n, p.r / 2));
  v *= BigRational(BigInt(1) << two_exp);
  v *= pow_int(BigRational(P, denom), p.r / 2);
  return v;
}

double to_double_log2(const BigRational& v) {
  if (v == 0) return -std::numeric_limits<double>::infinity();
  return log2_rat<Float60>(v).convert_to<double>();
}

}  // namespace

double log2_rational(const BigRational& x, unsigned digits) {
  if (digits <= 60) return log2_rat<Float60>(x).convert_to<double>();
  return log2_rat<Float600>(x).convert_to<double>();
}

BoundValue lower_failure_bound(const BoundParams& p) {
  require(p.L >= 1, Errc::ParameterOutOfRange, "L must be positive");
  const BigInt P = p.P.value_or(BigInt(p.curve_degree) * p.L);
  const BigRational pre(BigInt(1) << ((p.L + 1) * p.n));
  const auto v = failure_core(p, pre, p.r * (p.L + 1) / 2, P);
  return {v, to_double_log2(v)};
}

BigInt upper_family_count(std::size_t n, std::size_t k, std::size_t r, std::size_t L) {
  require(k + r <= n, Errc::ParameterOutOfRange, "need k + r ≤ n");
  require(L >= 1, Errc::ParameterOutOfRange, "L must be positive");
  const long long c = static_cast<long long>(n - k - r);
  const long long l = static_cast<long long>(L);
  const BigInt second = binomial_sum(c * l * (l - 1), 2 * c * (l - 1)) * binomial_sum(n, c * (l - 1)) +
                        binomial(n, static_cast<long long>(k + r));
  const BigInt first = BigInt(1) << (L * n);
  return first < second ? first : second;
}

BoundValue upper_failure_bound(const BoundParams& p) {
  require(p.L >= 1, Errc::ParameterOutOfRange, "L must be positive");
  const BigInt P = p.P.value_or(BigInt(p.curve_degree) * (p.L - 1));
  const BigRational pre(upper_family_count(p.n, p.k, p.r, p.L));
  const auto v = failure_core(p, pre, p.r * p.L / 2, P);
  return {v, to_double_log2(v)};
}

ThresholdKind threshold_kind(const std::string& name) {
  for (auto k : {ThresholdKind::RsLower, ThresholdKind::RlLower, ThresholdKind::RsUpper, ThresholdKind::RlUpper,
                 ThresholdKind::LowCodim, ThresholdKind::GsLower, ThresholdKind::GsUpper, ThresholdKind::ListCap})
    if (name == threshold_name(k)) return k;
  throw Error(Errc::ParameterOutOfRange, "unknown threshold kind: " + name);
}

const char* threshold_name(ThresholdKind k) {
  switch (k) {
    case ThresholdKind::RsLower: return "rs_lower";
    case ThresholdKind::RlLower: return "rl_lower";
    case ThresholdKind::RsUpper: return "rs_upper";
    case ThresholdKind::RlUpper: return "rl_upper";
    case ThresholdKind::LowCodim: return "low_codim";
    case ThresholdKind::GsLower: return "gs_lower";
    case ThresholdKind::GsUpper: return "gs_upper";
    case ThresholdKind::ListCap: return "listcap";
  }
  return "?";
}

namespace {

// A threshold term: exact when every exponent is an integer, otherwise only
// in floating point.
template <class F>
struct Term {
  std::optional<BigRational> exact;
  F approx;
};

template <class F>
F to_float(const BigRational& x) {
  return F(mp::numerator(x)) / F(mp::denominator(x));
}

template <class F>
Term<F> constant(const BigRational& x) {
  return {x, to_float<F>(x)};
}

std::optional<long long> integral(const BigRational& x) {
  if (mp::denominator(x) != 1 || mp::abs(mp::numerator(x)) > 100000) return std::nullopt;
  return mp::numerator(x).convert_to<long long>();
}

template <class F>
Term<F> power(const BigRational& base, const BigRational& e) {
  Term<F> t;
  t.approx = mp::pow(to_float<F>(base), to_float<F>(e));
  if (auto ie = integral(e); ie && *ie >= 0) {
    // Keep exact values only while they stay reasonably small.
    const F lg = log2_rat<F>(base) * F(*ie);
    if (lg < F(8192)) t.exact = pow_int(base, static_cast<std::size_t>(*ie));
  }
  return t;
}

template <class F>
Term<F> mul(const Term<F>& a, const Term<F>& b) {
  Term<F> t{std::nullopt, a.approx * b.approx};
  if (a.exact && b.exact) t.exact = *a.exact * *b.exact;
  return t;
}

template <class F>
Term<F> add(const Term<F>& a, const Term<F>& b) {
  Term<F> t{std::nullopt, a.approx + b.approx};
  if (a.exact && b.exact) t.exact = *a.exact + *b.exact;
  return t;
}

BigInt ceil_rat(const BigRational& x) {
  BigInt q = mp::numerator(x) / mp::denominator(x);
  if (BigRational(q) < x) ++q;
  return q;
}

template <class F>
Threshold evaluate(ThresholdKind kind, ThresholdParams p) {
  require(p.epsilon > 0 && p.epsilon <= 1, Errc::ParameterOutOfRange, "ε must lie in (0, 1]");
  require(p.L >= 1, Errc::ParameterOutOfRange, "L must be positive");
  const BigRational e_up(BigInt(271828182845905LL), BigInt(100000000000000LL));
  Threshold out;
  out.kind = kind;
  if (kind == ThresholdKind::ListCap) {
    require(p.R > 0 && p.R < 1, Errc::ParameterOutOfRange, "R must lie in (0, 1)");
    p.L = static_cast<std::size_t>(ceil_rat(2 * (1 - p.R) / p.epsilon).convert_to<long long>());
    require(p.L >= 1, Errc::ParameterOutOfRange, "list size must be positive");
    p.epsilon /= 2;
    out.L = p.L;
    out.note = "derived from the gs_lower threshold at ε/2; the asymptotic log2 p condition has no explicit constant";
  }
  const BigRational L(p.L), n(p.n), k(p.k), eps = p.epsilon;
  Term<F> T;
  switch (kind) {
    case ThresholdKind::RsLower:  // n + k·2^{10L/ε}
      T = add(constant<F>(n), mul(constant<F>(k), power<F>(2, 10 * L / eps)));
      break;
    case ThresholdKind::RlLower:
    case ThresholdKind::RlUpper:  // 2^{10L/ε}
      T = power<F>(2, 10 * L / eps);
      break;
    case ThresholdKind::RsUpper:  // k·2^{10L/ε} + n
      T = add(mul(constant<F>(k), power<F>(2, 10 * L / eps)), constant<F>(n));
      break;
    case ThresholdKind::LowCodim: {
      // (k−1)L·n^{2L/(bε)}·(e³L²n/(4b))^{3L(1−ε)/ε} + n
      require(p.b >= 1 && p.k >= 1, Errc::ParameterOutOfRange, "need b ≥ 1 and k ≥ 1");
      const BigRational b(p.b);
      auto t = mul(constant<F>((k - 1) * L), power<F>(n, 2 * L / (b * eps)));
      t = mul(t, power<F>(e_up * e_up * e_up * L * L * n / (4 * b), 3 * L * (1 - eps) / eps));
      T = add(t, constant<F>(n));
      break;
    }
    case ThresholdKind::GsLower:
    case ThresholdKind::ListCap: {  // 1 + [no rep]·4/R + 12eLε⁻¹·2^{5(L+2)/ε}
      require(p.R > 0 && p.R < 1, Errc::ParameterOutOfRange, "R must lie in (0, 1)");
      auto t = mul(constant<F>(12 * e_up * L / eps), power<F>(2, 5 * (L + 2) / eps));
      T = add(constant<F>(1 + (p.repetition ? BigRational(0) : 4 / p.R)), t);
      break;
    }
    case ThresholdKind::GsUpper: {  // 1 + 4/R + 12e(L−1)ε⁻¹·2^{5(L+1)/ε}
      require(p.R > 0 && p.R < 1, Errc::ParameterOutOfRange, "R must lie in (0, 1)");
      auto t = mul(constant<F>(12 * e_up * (L - 1) / eps), power<F>(2, 5 * (L + 1) / eps));
      T = add(constant<F>(1 + 4 / p.R), t);
      break;
    }
  }
  if (T.exact) {
    out.value = ceil_rat(*T.exact);
    out.log2 = log2_rat<F>(BigRational(*out.value)).template convert_to<double>();
  } else {
    const F lg = mp::log(T.approx) / mp::log(F(2));
    out.log2 = lg.template convert_to<double>();
    if (lg < F(150)) out.value = BigInt(mp::ceil(T.approx).template convert_to<BigInt>());
    if (!out.note.empty()) out.note += "; ";
    out.note += "non-integral exponent, evaluated in floating point";
  }
  return out;
}

}  // namespace

Threshold field_threshold(ThresholdKind kind, const ThresholdParams& p, unsigned digits) {
  if (digits <= 60) return evaluate<Float60>(kind, p);
  return evaluate<Float600>(kind, p);
}

GSArithmetic gs_arithmetic(const GSTowerParams& g) {
  require(g.t >= 1, Errc::ParameterOutOfRange, "tower level must be at least 1");
  require(g.p >= 2, Errc::ParameterOutOfRange, "p must be at least 2");
  const BigInt p(g.p);
  auto pw = [&](unsigned e) { return mp::pow(p, e); };
  GSArithmetic out;
  out.n_points = pw(g.t - 1) * (p * p - p);
  if (g.t % 2 == 0) {
    const BigInt h = pw(g.t / 2) - 1;
    out.genus = h * h;
  } else {
    out.genus = (pw((g.t + 1) / 2) - 1) * (pw((g.t - 1) / 2) + 1);
  }
  const double pd = static_cast<double>(g.p), td = g.t;
  out.genus_hi = std::pow(pd, td) + std::pow(pd, (td + 1) / 2) - std::pow(pd, (td - 1) / 2) - 1;
  out.genus_lo = std::pow(pd, td) - 2 * std::pow(pd, td / 2) + 1;
  if (g.s && BigInt(*g.s) + 2 > 2 * out.genus) out.dimension = BigInt(*g.s) - out.genus + 1;
  return out;
}

}  // namespace rmds
