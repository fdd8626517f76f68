#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmds/error.hpp"
#include "rmds/rng.hpp"

namespace rmds {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// GF(p^m) description. modulus holds m+1 coefficients, constant term first.
struct FieldSpec {
  u64 p = 2;
  unsigned m = 1;
  std::vector<u64> modulus{0, 1};

  // p^m when it fits in 64 bits.
  std::optional<u64> order() const;
  std::string to_string() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(u64 n);
std::vector<u64> prime_factors(u64 n);

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 powmod(u64 a, u64 e, u64 p);

// Dense polynomials over GF(p), coefficient vectors with the constant first.
namespace poly {
using Poly = std::vector<u64>;
void trim(Poly& a);
int degree(const Poly& a);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
// Remainder of a modulo b (b nonzero).
Poly mod(const Poly& a, const Poly& b, u64 p);
void divmod(const Poly& a, const Poly& b, u64 p, Poly& quot, Poly& rem);
Poly gcd(Poly a, Poly b, u64 p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p);
Poly powmod(const Poly& a, u64 e, const Poly& f, u64 p);
// Inverse of a modulo f, assuming gcd(a, f) = 1.
Poly invmod(const Poly& a, const Poly& f, u64 p);
}  // namespace poly

// Exhaustive factor search; only sensible for p^m up to about 2^20.
bool irreducible_bruteforce(const poly::Poly& f, u64 p);
// Rabin's test; exact.
bool irreducible_rabin(const poly::Poly& f, u64 p);
bool is_irreducible(const poly::Poly& f, u64 p);

// Monic irreducible of degree m over GF(p) with the smallest integer encoding
// sum c_i p^i.
FieldSpec smallest_field_spec(u64 p, unsigned m);

void validate_spec(const FieldSpec& spec);

// Prime field GF(p), p < 2^63, word arithmetic.
class PrimeField {
 public:
  using value_type = u64;

  explicit PrimeField(u64 p);
  static PrimeField from_spec(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  u64 characteristic() const { return p_; }
  unsigned degree() const { return 1; }
  std::optional<u64> order() const { return p_; }
  double log2_order() const;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const { return mulmod(a, b, p_); }
  value_type inv(value_type a) const;
  value_type pow(value_type a, u64 e) const { return powmod(a, e, p_); }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  value_type from_int(u64 v) const { return v % p_; }
  value_type from_coeffs(std::span<const u64> c) const;
  std::vector<u64> to_coeffs(value_type a) const { return {a}; }
  value_type element(u64 idx) const { return idx; }
  u64 index_of(value_type a) const { return a; }
  value_type random(Rng& rng) const { return rng.below(p_); }

 private:
  u64 p_;
  FieldSpec spec_;
};

// Small field GF(p^m) with at most 2^20 elements. Elements are integer
// encodings sum c_i p^i; multiplication through log tables, addition
// through Zech logarithms.
class TableField {
 public:
  using value_type = std::uint32_t;
  static constexpr u64 kMaxOrder = u64{1} << 20;

  explicit TableField(const FieldSpec& spec);
  static TableField smallest(u64 p, unsigned m) { return TableField(smallest_field_spec(p, m)); }
  static TableField from_spec(const FieldSpec& spec) { return TableField(spec); }

  const FieldSpec& spec() const { return t_->spec; }
  u64 characteristic() const { return t_->spec.p; }
  unsigned degree() const { return t_->spec.m; }
  std::optional<u64> order() const { return t_->q; }
  double log2_order() const;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const {
    if (t_->spec.p == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t qm1 = t_->q - 1;
    std::uint32_t la = t_->log[a], lb = t_->log[b];
    std::uint32_t d = lb >= la ? lb - la : lb + qm1 - la;
    std::int32_t z = t_->zech[d];
    if (z < 0) return 0;
    return t_->exp[la + static_cast<std::uint32_t>(z)];
  }
  value_type neg(value_type a) const {
    if (t_->spec.p == 2 || a == 0) return a;
    return t_->exp[t_->log[a] + (t_->q - 1) / 2];
  }
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  value_type inv(value_type a) const;
  value_type pow(value_type a, u64 e) const;
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  value_type from_int(u64 v) const;
  value_type from_coeffs(std::span<const u64> c) const;
  std::vector<u64> to_coeffs(value_type a) const;
  value_type element(u64 idx) const { return static_cast<value_type>(idx); }
  u64 index_of(value_type a) const { return a; }
  value_type random(Rng& rng) const { return static_cast<value_type>(rng.below(t_->q)); }

 private:
  struct Tables {
    FieldSpec spec;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> exp;   // length 2(q-1)
    std::vector<std::uint32_t> log;   // length q
    std::vector<std::int32_t> zech;   // log(1 + g^d), -1 when 1 + g^d = 0
  };
  std::shared_ptr<const Tables> t_;
};

// General GF(p^m) with coefficient-vector elements. Slow, any size; used
// for large extension fields in the generic tester.
class ExtField {
 public:
  using value_type = std::vector<u64>;

  explicit ExtField(const FieldSpec& spec);
  static ExtField smallest(u64 p, unsigned m) { return ExtField(smallest_field_spec(p, m)); }
  static ExtField from_spec(const FieldSpec& spec) { return ExtField(spec); }

  const FieldSpec& spec() const { return spec_; }
  u64 characteristic() const { return spec_.p; }
  unsigned degree() const { return spec_.m; }
  std::optional<u64> order() const { return spec_.order(); }
  double log2_order() const;

  value_type zero() const { return value_type(spec_.m, 0); }
  value_type one() const {
    value_type r(spec_.m, 0);
    r[0] = 1;
    return r;
  }
  value_type add(const value_type& a, const value_type& b) const;
  value_type sub(const value_type& a, const value_type& b) const;
  value_type neg(const value_type& a) const;
  value_type mul(const value_type& a, const value_type& b) const;
  value_type inv(const value_type& a) const;
  value_type pow(const value_type& a, u64 e) const;
  bool is_zero(const value_type& a) const;
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type from_int(u64 v) const;
  value_type from_coeffs(std::span<const u64> c) const;
  std::vector<u64> to_coeffs(const value_type& a) const { return a; }
  value_type element(u64 idx) const;
  u64 index_of(const value_type& a) const;
  value_type random(Rng& rng) const;

 private:
  FieldSpec spec_;
};

// Operation on coefficient-sequence elements of an arbitrary spec.
enum class FieldOp { Add, Sub, Mul, Inv, Pow };
std::vector<u64> field_arith(const FieldSpec& spec, FieldOp op, const std::vector<u64>& x,
                             const std::vector<u64>& y = {}, u64 exponent = 0);

// Ring embedding GF(p^m) -> GF(p^{m e}) given by a root of the base modulus
// in the extension.
class Embedding {
 public:
  Embedding(const FieldSpec& base, unsigned e);

  const FieldSpec& base() const { return base_; }
  const ExtField& ext() const { return ext_; }
  ExtField::value_type operator()(std::span<const u64> base_coeffs) const;

 private:
  FieldSpec base_;
  ExtField ext_;
  ExtField::value_type theta_;
};

}  // namespace rmds
