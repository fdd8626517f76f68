#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace rmds {

using Rational = boost::rational<long long>;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// ρ_{n,k,d}(L) = (L/(L+1))·(n−k−d)/n, exact.
Rational singleton_radius(std::size_t n, std::size_t k, std::size_t d, std::size_t L);

struct BoundParams {
  std::size_t n = 0, k = 0, r = 0, L = 1;
  BigInt pool_size = 0;     // |S|
  std::size_t curve_degree = 1;  // deg X, for the Bezout count P = deg X · (polynomial degree)
  std::optional<BigInt> P;  // overrides the Bezout count when set
  bool repetition = true;
};

// Exact value of the union bound and its log2.
struct BoundValue {
  BigRational value;
  double log2 = 0;
};

// 2^{(L+1)n}·C(n, r/2)·2^{r(L+1)/2}·(P/(|S| − [no repetition]·n))^{r/2}, P = deg X · L.
BoundValue lower_failure_bound(const BoundParams& p);
// C_{n,k,r,L}·C(n, r/2)·2^{rL/2}·(P/(|S| − [no repetition]·n))^{r/2}, P = deg X · (L−1).
BoundValue upper_failure_bound(const BoundParams& p);
// min(2^{Ln}, C((n−k−r)L(L−1), ≤2(n−k−r)(L−1))·C(n, ≤(n−k−r)(L−1)) + C(n, k+r)).
BigInt upper_family_count(std::size_t n, std::size_t k, std::size_t r, std::size_t L);

// log2 of a positive rational evaluated with `digits` decimal digits.
double log2_rational(const BigRational& x, unsigned digits);

enum class ThresholdKind { RsLower, RlLower, RsUpper, RlUpper, LowCodim, GsLower, GsUpper, ListCap };
ThresholdKind threshold_kind(const std::string& name);  // "rs_lower", ..., "listcap"
const char* threshold_name(ThresholdKind k);

struct ThresholdParams {
  std::size_t n = 0, k = 0, L = 1, b = 1;
  BigRational epsilon{1}, R{1, 2};
  bool repetition = false;
};

struct Threshold {
  ThresholdKind kind{};
  double log2 = 0;                // log2 of the minimal admissible q (or p)
  std::optional<BigInt> value;    // the minimal admissible integer, unless astronomically large
  std::optional<std::size_t> L;   // list size chosen by listcap
  std::string note;
};

// Smallest integer satisfying the printed field-size condition. The constant
// e is replaced by 2.71828182845905, which is slightly larger.
Threshold field_threshold(ThresholdKind kind, const ThresholdParams& p, unsigned digits = 60);

// Upper bound on e used in every threshold.
inline constexpr const char* kEUpper = "2.71828182845905";

struct GSTowerParams {
  unsigned long long p = 2;
  unsigned t = 1;
  std::optional<unsigned long long> s;
};

struct GSArithmetic {
  BigInt n_points, genus;
  double genus_lo = 0, genus_hi = 0;
  std::optional<BigInt> dimension;  // s − g + 1 when s > 2g − 2
};

GSArithmetic gs_arithmetic(const GSTowerParams& p);

}  // namespace rmds
