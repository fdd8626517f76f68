#include "rmds/gf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rmds {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::InvalidField: return "InvalidField";
    case Errc::IndexOutOfBounds: return "IndexOutOfBounds";
    case Errc::NonSquare: return "NonSquare";
    case Errc::TooManyBlocks: return "TooManyBlocks";
    case Errc::GridTooLarge: return "GridTooLarge";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::DuplicatePoints: return "DuplicatePoints";
    case Errc::DependentFunctions: return "DependentFunctions";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::PoolTooSmall: return "PoolTooSmall";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::NoMinorFound: return "NoMinorFound";
    case Errc::NoFaultyIndex: return "NoFaultyIndex";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

std::optional<u64> FieldSpec::order() const {
  u128 q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > ~u64{0}) return std::nullopt;
  }
  return static_cast<u64>(q);
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << "GF(" << p;
  if (m > 1) os << "^" << m;
  os << ")";
  return os.str();
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
    if (f > 3 && is_prime(n)) break;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = x >= y ? x - y : x + p - y;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + rmds::mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, u64 p, Poly& quot, Poly& rem) {
  const int db = degree(b);
  require(db >= 0, Errc::DivisionByZero, "polynomial division by zero");
  rem = a;
  trim(rem);
  const u64 lead_inv = rmds::powmod(b[db], p - 2, p);
  const int da = degree(rem);
  quot.assign(da >= db ? da - db + 1 : 0, 0);
  for (int i = da; i >= db; --i) {
    u64 c = rem[i];
    if (c == 0) continue;
    c = rmds::mulmod(c, lead_inv, p);
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      u64 t = rmds::mulmod(c, b[j], p);
      u64& x = rem[i - db + j];
      x = x >= t ? x - t : x + p - t;
    }
  }
  trim(rem);
  trim(quot);
}

Poly mod(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return r;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 li = rmds::powmod(a.back(), p - 2, p);
    for (auto& c : a) c = rmds::mulmod(c, li, p);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) { return mod(mul(a, b, p), f, p); }

Poly powmod(const Poly& a, u64 e, const Poly& f, u64 p) {
  Poly r = mod(Poly{1}, f, p);
  Poly b = mod(a, f, p);
  while (e) {
    if (e & 1) r = mulmod(r, b, f, p);
    e >>= 1;
    if (e) b = mulmod(b, b, f, p);
  }
  return r;
}

Poly invmod(const Poly& a, const Poly& f, u64 p) {
  // Extended Euclid tracking the coefficient of a.
  Poly r0 = f, r1 = mod(a, f, p);
  Poly s0, s1{1};
  require(!r1.empty(), Errc::DivisionByZero, "inverse of zero");
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, q, r);
    Poly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  require(degree(r0) == 0, Errc::DivisionByZero, "element not invertible");
  u64 ci = rmds::powmod(r0[0], p - 2, p);
  for (auto& c : s0) c = rmds::mulmod(c, ci, p);
  return mod(s0, f, p);
}

}  // namespace poly

bool irreducible_bruteforce(const poly::Poly& f, u64 p) {
  const int m = poly::degree(f);
  if (m <= 0) return false;
  if (m == 1) return true;
  for (int d = 1; 2 * d <= m; ++d) {
    u128 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    std::vector<u64> digits(d, 0);
    for (u128 t = 0; t < count; ++t) {
      poly::Poly g(digits.begin(), digits.end());
      g.push_back(1);
      if (poly::mod(f, g, p).empty()) return false;
      for (int i = 0; i < d; ++i) {
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
    }
  }
  return true;
}

bool irreducible_rabin(const poly::Poly& f, u64 p) {
  const int m = poly::degree(f);
  if (m <= 0) return false;
  if (m == 1) return true;
  const poly::Poly x{0, 1};
  auto frob_iter = [&](unsigned times) {
    poly::Poly h = poly::mod(x, f, p);
    for (unsigned i = 0; i < times; ++i) h = poly::powmod(h, p, f, p);
    return h;
  };
  if (!poly::sub(frob_iter(m), x, p).empty()) return false;
  for (u64 r : prime_factors(static_cast<u64>(m))) {
    poly::Poly h = poly::sub(frob_iter(static_cast<unsigned>(m / r)), x, p);
    if (poly::degree(poly::gcd(f, h, p)) != 0) return false;
  }
  return true;
}

bool is_irreducible(const poly::Poly& f, u64 p) {
  const int m = poly::degree(f);
  u128 q = 1;
  for (int i = 0; i < m && q <= TableField::kMaxOrder; ++i) q *= p;
  if (q <= TableField::kMaxOrder) return irreducible_bruteforce(f, p);
  return irreducible_rabin(f, p);
}

FieldSpec smallest_field_spec(u64 p, unsigned m) {
  require(is_prime(p), Errc::InvalidField, "characteristic must be prime");
  require(m >= 1, Errc::InvalidField, "extension degree must be positive");
  FieldSpec spec;
  spec.p = p;
  spec.m = m;
  if (m == 1) {
    spec.modulus = {0, 1};
    return spec;
  }
  std::vector<u64> digits(m, 0);
  for (;;) {
    if (digits[0] != 0) {
      poly::Poly f(digits.begin(), digits.end());
      f.push_back(1);
      if (is_irreducible(f, p)) {
        spec.modulus = f;
        return spec;
      }
    }
    unsigned i = 0;
    while (i < m && ++digits[i] == p) digits[i++] = 0;
    require(i < m, Errc::InvalidField, "no irreducible polynomial found");
  }
}

void validate_spec(const FieldSpec& spec) {
  require(is_prime(spec.p), Errc::InvalidField, "p must be prime");
  require(spec.p < (u64{1} << 63), Errc::InvalidField, "p must be below 2^63");
  require(spec.m >= 1, Errc::InvalidField, "m must be positive");
  require(spec.modulus.size() == spec.m + 1, Errc::InvalidField, "modulus must have m+1 coefficients");
  require(spec.modulus.back() == 1, Errc::InvalidField, "modulus must be monic");
  for (u64 c : spec.modulus) require(c < spec.p, Errc::InvalidField, "modulus coefficient out of range");
  if (spec.m > 1)
    require(is_irreducible(spec.modulus, spec.p), Errc::InvalidField, "modulus is reducible");
}

// ---------------------------------------------------------------- PrimeField

PrimeField::PrimeField(u64 p) : p_(p) {
  require(is_prime(p) && p < (u64{1} << 63), Errc::InvalidField, "PrimeField needs a prime below 2^63");
  spec_.p = p;
  spec_.m = 1;
  spec_.modulus = {0, 1};
}

PrimeField PrimeField::from_spec(const FieldSpec& spec) {
  require(spec.m == 1, Errc::SpecMismatch, "PrimeField requires m = 1");
  validate_spec(spec);
  PrimeField f(spec.p);
  f.spec_ = spec;
  return f;
}

double PrimeField::log2_order() const { return std::log2(static_cast<double>(p_)); }

PrimeField::value_type PrimeField::inv(value_type a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of zero");
  return powmod(a, p_ - 2, p_);
}

PrimeField::value_type PrimeField::from_coeffs(std::span<const u64> c) const {
  require(c.size() == 1, Errc::SpecMismatch, "expected 1 coefficient");
  require(c[0] < p_, Errc::SpecMismatch, "coefficient out of range");
  return c[0];
}

// ---------------------------------------------------------------- TableField

namespace {

std::vector<u64> decode(u64 v, u64 p, unsigned m) {
  std::vector<u64> d(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

u64 encode(const std::vector<u64>& d, u64 p) {
  u64 v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

TableField::TableField(const FieldSpec& spec) {
  validate_spec(spec);
  auto q = spec.order();
  require(q && *q <= kMaxOrder, Errc::InvalidField, "TableField is limited to 2^20 elements");
  auto t = std::make_shared<Tables>();
  t->spec = spec;
  t->q = static_cast<std::uint32_t>(*q);
  const u64 p = spec.p;
  const unsigned m = spec.m;
  const std::uint32_t qm1 = t->q - 1;

  auto slow_mul = [&](u64 a, u64 b) {
    auto r = poly::mulmod(decode(a, p, m), decode(b, p, m), spec.modulus, p);
    r.resize(m, 0);
    return encode(r, p);
  };
  auto slow_pow = [&](u64 a, u64 e) {
    u64 r = 1, b = a;
    while (e) {
      if (e & 1) r = slow_mul(r, b);
      b = slow_mul(b, b);
      e >>= 1;
    }
    return r;
  };

  u64 g = 1;
  if (qm1 > 1) {
    const auto factors = prime_factors(qm1);
    for (g = 2; g < t->q; ++g) {
      bool primitive = true;
      for (u64 r : factors)
        if (slow_pow(g, qm1 / r) == 1) {
          primitive = false;
          break;
        }
      if (primitive) break;
    }
  }
  t->exp.assign(2 * static_cast<std::size_t>(qm1) + 1, 0);
  t->log.assign(t->q, 0);
  u64 x = 1;
  for (std::uint32_t i = 0; i < qm1; ++i) {
    t->exp[i] = static_cast<std::uint32_t>(x);
    t->log[x] = i;
    x = slow_mul(x, g);
  }
  for (std::uint32_t i = qm1; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - qm1];
  t->zech.assign(qm1, -1);
  for (std::uint32_t d = 0; d < qm1; ++d) {
    auto digits = decode(t->exp[d], p, m);
    digits[0] = (digits[0] + 1) % p;
    u64 v = encode(digits, p);
    t->zech[d] = v == 0 ? -1 : static_cast<std::int32_t>(t->log[v]);
  }
  t_ = std::move(t);
}

double TableField::log2_order() const { return std::log2(static_cast<double>(t_->q)); }

TableField::value_type TableField::inv(value_type a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of zero");
  const std::uint32_t qm1 = t_->q - 1;
  std::uint32_t la = t_->log[a];
  return t_->exp[la == 0 ? 0 : qm1 - la];
}

TableField::value_type TableField::pow(value_type a, u64 e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const u64 qm1 = t_->q - 1;
  return t_->exp[static_cast<std::uint32_t>((static_cast<u128>(t_->log[a]) * (e % qm1)) % qm1)];
}

TableField::value_type TableField::from_int(u64 v) const {
  return static_cast<value_type>(v % t_->spec.p);
}

TableField::value_type TableField::from_coeffs(std::span<const u64> c) const {
  require(c.size() == t_->spec.m, Errc::SpecMismatch, "coefficient count differs from m");
  for (u64 x : c) require(x < t_->spec.p, Errc::SpecMismatch, "coefficient out of range");
  return static_cast<value_type>(encode(std::vector<u64>(c.begin(), c.end()), t_->spec.p));
}

std::vector<u64> TableField::to_coeffs(value_type a) const { return decode(a, t_->spec.p, t_->spec.m); }

// ------------------------------------------------------------------ ExtField

ExtField::ExtField(const FieldSpec& spec) : spec_(spec) { validate_spec(spec_); }

double ExtField::log2_order() const { return spec_.m * std::log2(static_cast<double>(spec_.p)); }

ExtField::value_type ExtField::add(const value_type& a, const value_type& b) const {
  value_type r(spec_.m);
  const u64 p = spec_.p;
  for (unsigned i = 0; i < spec_.m; ++i) {
    u64 s = a[i] + b[i];
    r[i] = s >= p ? s - p : s;
  }
  return r;
}

ExtField::value_type ExtField::sub(const value_type& a, const value_type& b) const {
  value_type r(spec_.m);
  const u64 p = spec_.p;
  for (unsigned i = 0; i < spec_.m; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
  return r;
}

ExtField::value_type ExtField::neg(const value_type& a) const {
  value_type r(spec_.m);
  for (unsigned i = 0; i < spec_.m; ++i) r[i] = a[i] == 0 ? 0 : spec_.p - a[i];
  return r;
}

ExtField::value_type ExtField::mul(const value_type& a, const value_type& b) const {
  const unsigned m = spec_.m;
  const u64 p = spec_.p;
  if (m == 1) return {mulmod(a[0], b[0], p)};
  std::vector<u128> acc(2 * m - 1, 0);
  // Accumulate raw products, reducing lazily to keep sums in 128 bits.
  for (unsigned i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) {
      acc[i + j] += static_cast<u128>(a[i]) * b[j];
      if (acc[i + j] >> 126) acc[i + j] %= p;
    }
  }
  std::vector<u64> r(2 * m - 1);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<u64>(acc[i] % p);
  const auto& f = spec_.modulus;
  for (std::size_t i = r.size(); i-- > m;) {
    u64 c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (unsigned j = 0; j < m; ++j) {
      u64 t = mulmod(c, f[j], p);
      u64& x = r[i - m + j];
      x = x >= t ? x - t : x + p - t;
    }
  }
  r.resize(m);
  return r;
}

ExtField::value_type ExtField::inv(const value_type& a) const {
  require(!is_zero(a), Errc::DivisionByZero, "inverse of zero");
  poly::Poly r = poly::invmod(poly::Poly(a.begin(), a.end()), spec_.modulus, spec_.p);
  r.resize(spec_.m, 0);
  return r;
}

ExtField::value_type ExtField::pow(const value_type& a, u64 e) const {
  value_type r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

bool ExtField::is_zero(const value_type& a) const {
  return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
}

ExtField::value_type ExtField::from_int(u64 v) const {
  value_type r(spec_.m, 0);
  r[0] = v % spec_.p;
  return r;
}

ExtField::value_type ExtField::from_coeffs(std::span<const u64> c) const {
  require(c.size() == spec_.m, Errc::SpecMismatch, "coefficient count differs from m");
  for (u64 x : c) require(x < spec_.p, Errc::SpecMismatch, "coefficient out of range");
  return value_type(c.begin(), c.end());
}

ExtField::value_type ExtField::element(u64 idx) const { return decode(idx, spec_.p, spec_.m); }

u64 ExtField::index_of(const value_type& a) const {
  require(spec_.order().has_value(), Errc::ParameterOutOfRange, "field too large to index");
  return encode(a, spec_.p);
}

ExtField::value_type ExtField::random(Rng& rng) const {
  value_type r(spec_.m);
  for (auto& c : r) c = rng.below(spec_.p);
  return r;
}

std::vector<u64> field_arith(const FieldSpec& spec, FieldOp op, const std::vector<u64>& x,
                             const std::vector<u64>& y, u64 exponent) {
  ExtField f(spec);
  require(x.size() == spec.m, Errc::SpecMismatch, "operand length differs from m");
  auto yy = [&]() {
    require(y.size() == spec.m, Errc::SpecMismatch, "operand length differs from m");
    return f.from_coeffs(y);
  };
  auto xx = f.from_coeffs(x);
  switch (op) {
    case FieldOp::Add: return f.add(xx, yy());
    case FieldOp::Sub: return f.sub(xx, yy());
    case FieldOp::Mul: return f.mul(xx, yy());
    case FieldOp::Inv: return f.inv(xx);
    case FieldOp::Pow: return f.pow(xx, exponent);
  }
  return {};
}

// ----------------------------------------------------------------- Embedding

namespace {

// Polynomials with ExtField coefficients, constant first.
using EPoly = std::vector<ExtField::value_type>;

void etrim(const ExtField& F, EPoly& a) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

EPoly emod(const ExtField& F, EPoly a, const EPoly& b) {
  etrim(F, a);
  const std::size_t db = b.size() - 1;
  const auto lead_inv = F.inv(b.back());
  while (a.size() > db) {
    auto c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
    etrim(F, a);
  }
  return a;
}

EPoly emul(const ExtField& F, const EPoly& a, const EPoly& b) {
  if (a.empty() || b.empty()) return {};
  EPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  etrim(F, r);
  return r;
}

EPoly epowmod(const ExtField& F, EPoly a, u64 e, const EPoly& f) {
  EPoly r{F.one()};
  a = emod(F, a, f);
  while (e) {
    if (e & 1) r = emod(F, emul(F, r, a), f);
    e >>= 1;
    if (e) a = emod(F, emul(F, a, a), f);
  }
  return r;
}

EPoly egcd(const ExtField& F, EPoly a, EPoly b) {
  etrim(F, a);
  etrim(F, b);
  while (!b.empty()) {
    EPoly r = emod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    auto li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
  }
  return a;
}

EPoly ediv_exact(const ExtField& F, EPoly a, const EPoly& b) {
  const std::size_t db = b.size() - 1;
  EPoly q(a.size() - db, F.zero());
  const auto lead_inv = F.inv(b.back());
  while (a.size() > db) {
    auto c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
    a.pop_back();
  }
  return q;
}

// One root in F of f, a product of distinct linear factors over F
// (equal-degree splitting).
ExtField::value_type find_root(const ExtField& F, EPoly f) {
  Rng rng(0x5eedULL);
  const u64 p = F.characteristic();
  const unsigned D = F.degree();
  while (f.size() > 2) {
    EPoly a;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) a.push_back(F.random(rng));
    etrim(F, a);
    if (a.empty()) continue;
    EPoly s;
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^{2^{D-1}} mod f.
      EPoly t = emod(F, a, f), acc = t;
      for (unsigned i = 1; i < D; ++i) {
        t = emod(F, emul(F, t, t), f);
        EPoly sum(std::max(acc.size(), t.size()), F.zero());
        for (std::size_t j = 0; j < sum.size(); ++j)
          sum[j] = F.add(j < acc.size() ? acc[j] : F.zero(), j < t.size() ? t[j] : F.zero());
        etrim(F, sum);
        acc = std::move(sum);
      }
      s = acc;
    } else {
      // a^{(p^D - 1)/2} as the product of the Frobenius conjugates of a^{(p-1)/2}.
      EPoly b = epowmod(F, a, (p - 1) / 2, f), acc = b;
      for (unsigned i = 1; i < D; ++i) {
        b = epowmod(F, b, p, f);
        acc = emod(F, emul(F, acc, b), f);
      }
      if (acc.empty()) acc.push_back(F.zero());
      acc[0] = F.sub(acc[0], F.one());
      etrim(F, acc);
      s = acc;
    }
    EPoly g = egcd(F, f, s);
    if (g.size() > 1 && g.size() < f.size()) {
      EPoly h = ediv_exact(F, f, g);
      f = g.size() <= h.size() ? g : h;
      auto li = F.inv(f.back());
      for (auto& c : f) c = F.mul(c, li);
    }
  }
  return F.neg(F.mul(f[0], F.inv(f[1])));
}

}  // namespace

Embedding::Embedding(const FieldSpec& base, unsigned e)
    : base_(base), ext_(smallest_field_spec(base.p, base.m * e)) {
  require(e >= 1, Errc::ParameterOutOfRange, "extension degree must be positive");
  validate_spec(base_);
  if (base_.m == 1) {
    theta_ = ext_.zero();
    return;
  }
  EPoly f;
  for (u64 c : base_.modulus) f.push_back(ext_.from_int(c));
  theta_ = find_root(ext_, f);
}

ExtField::value_type Embedding::operator()(std::span<const u64> c) const {
  require(c.size() == base_.m, Errc::SpecMismatch, "coefficient count differs from base degree");
  auto r = ext_.zero();
  auto pw = ext_.one();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) pw = ext_.mul(pw, theta_);
    r = ext_.add(r, ext_.mul(ext_.from_int(c[i]), pw));
  }
  return r;
}

}  // namespace rmds
