#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rmds/gf.hpp"
#include "rmds/matrix.hpp"
#include "rmds/rng.hpp"

namespace rmds {

// Linear code given by a k×n generator.
template <class Field>
struct Code {
  Field field;
  Matrix<Field> G;
  std::string label;

  std::size_t n() const { return G.cols(); }
  std::size_t k() const { return G.rows(); }
};

template <class Field>
Code<Field> make_code(Matrix<Field> G, std::string label) {
  require(rank(G) == G.rows(), Errc::RankDeficient, "generator rows are dependent");
  Field F = G.field();
  return Code<Field>{F, std::move(G), std::move(label)};
}

enum class PoolKind { Table, ReedSolomonFull, Affine };
enum class PunctureMode { WithRepetition, WithoutRepetition };

// Candidate generator columns: the point set S the columns are drawn from.
template <class Field>
class ColumnPool {
 public:
  using Scalar = typename Field::value_type;

  static ColumnPool table(Matrix<Field> columns, std::string label) {
    require(columns.cols() >= 1, Errc::PoolTooSmall, "pool needs at least one column");
    ColumnPool P(columns.field(), columns.rows(), PoolKind::Table, std::move(label));
    P.table_ = std::move(columns);
    return P;
  }
  // All q points t with column (1, t, ..., t^{k-1}), generated on demand.
  static ColumnPool reed_solomon_full(const Field& F, std::size_t k) {
    return ColumnPool(F, k, PoolKind::ReedSolomonFull, "reed-solomon");
  }
  // All of F^k, generated on demand.
  static ColumnPool affine(const Field& F, std::size_t k) { return ColumnPool(F, k, PoolKind::Affine, "random-linear"); }

  const Field& field() const { return field_; }
  std::size_t k() const { return k_; }
  PoolKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  bool materialized() const { return kind_ == PoolKind::Table; }
  const Matrix<Field>& columns() const { return *table_; }

  // Number of pool points when it fits in 64 bits.
  std::optional<u64> size() const {
    if (kind_ == PoolKind::Table) return table_->cols();
    auto q = field_.order();
    if (!q) return std::nullopt;
    if (kind_ == PoolKind::ReedSolomonFull) return *q;
    u128 N = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      N *= *q;
      if (N > ~u64{0}) return std::nullopt;
    }
    return static_cast<u64>(N);
  }
  double log2_size() const {
    if (kind_ == PoolKind::Table) return std::log2(static_cast<double>(table_->cols()));
    if (kind_ == PoolKind::ReedSolomonFull) return field_.log2_order();
    return k_ * field_.log2_order();
  }

  std::vector<Scalar> column(u64 idx) const {
    if (kind_ == PoolKind::Table) {
      require(idx < table_->cols(), Errc::IndexOutOfBounds, "pool index out of range");
      return table_->column(idx);
    }
    if (kind_ == PoolKind::ReedSolomonFull) return vandermonde(field_.element(idx));
    std::vector<Scalar> c;
    const u64 q = *field_.order();
    for (std::size_t i = 0; i < k_; ++i) {
      c.push_back(field_.element(idx % q));
      idx /= q;
    }
    return c;
  }

  std::vector<Scalar> vandermonde(const Scalar& t) const {
    std::vector<Scalar> c;
    auto x = field_.one();
    for (std::size_t i = 0; i < k_; ++i) {
      c.push_back(x);
      x = field_.mul(x, t);
    }
    return c;
  }

  // Uniform draw from the pool; returns the column and an identity key
  // (the pool index when known).
  std::pair<std::vector<Scalar>, std::vector<u64>> draw(Rng& rng) const {
    if (kind_ == PoolKind::Table) {
      u64 idx = rng.below(table_->cols());
      return {table_->column(idx), {idx}};
    }
    if (kind_ == PoolKind::ReedSolomonFull) {
      auto t = field_.random(rng);
      return {vandermonde(t), field_.to_coeffs(t)};
    }
    std::vector<Scalar> c;
    std::vector<u64> key;
    for (std::size_t i = 0; i < k_; ++i) {
      c.push_back(field_.random(rng));
      for (u64 v : field_.to_coeffs(c.back())) key.push_back(v);
    }
    return {c, key};
  }

 private:
  ColumnPool(const Field& F, std::size_t k, PoolKind kind, std::string label)
      : field_(F), k_(k), kind_(kind), label_(std::move(label)) {
    require(k >= 1, Errc::ParameterOutOfRange, "pool dimension must be positive");
  }

  Field field_;
  std::size_t k_;
  PoolKind kind_;
  std::string label_;
  std::optional<Matrix<Field>> table_;
};

template <class Field>
ColumnPool<Field> rs_pool(const Field& F, std::size_t k, const std::vector<typename Field::value_type>& points) {
  require(k >= 1, Errc::ParameterOutOfRange, "k must be positive");
  require(!points.empty(), Errc::PoolTooSmall, "no evaluation points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      require(!F.equal(points[i], points[j]), Errc::DuplicatePoints, "evaluation points must be distinct");
  Matrix<Field> T(F, k, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    auto x = F.one();
    for (std::size_t i = 0; i < k; ++i) {
      T(i, j) = x;
      x = F.mul(x, points[j]);
    }
  }
  return ColumnPool<Field>::table(std::move(T), "reed-solomon");
}

// Every field element as an evaluation point.
template <class Field>
ColumnPool<Field> rs_full_pool(const Field& F, std::size_t k) {
  auto q = F.order();
  if (q && *q <= (u64{1} << 16)) {
    std::vector<typename Field::value_type> pts;
    for (u64 i = 0; i < *q; ++i) pts.push_back(F.element(i));
    return rs_pool(F, k, pts);
  }
  return ColumnPool<Field>::reed_solomon_full(F, k);
}

template <class Field>
ColumnPool<Field> random_linear_pool(const Field& F, std::size_t k) {
  return ColumnPool<Field>::affine(F, k);
}

template <class Field>
ColumnPool<Field> eval_pool(const Matrix<Field>& function_table, std::string label = "evaluation") {
  require(rank(function_table) == function_table.rows(), Errc::DependentFunctions,
          "evaluated functions are linearly dependent");
  return ColumnPool<Field>::table(function_table, std::move(label));
}

// Columns drawn uniformly from the pool, deterministically from seed.
template <class Field>
Code<Field> puncture(const ColumnPool<Field>& pool, std::size_t n, PunctureMode mode, u64 seed) {
  const Field& F = pool.field();
  Rng rng(seed);
  Matrix<Field> G(F, pool.k(), n);
  auto put = [&](std::size_t j, const std::vector<typename Field::value_type>& c) {
    for (std::size_t i = 0; i < pool.k(); ++i) G(i, j) = c[i];
  };
  if (mode == PunctureMode::WithRepetition) {
    for (std::size_t j = 0; j < n; ++j) put(j, pool.draw(rng).first);
  } else if (pool.materialized()) {
    const u64 N = pool.columns().cols();
    require(N >= n, Errc::PoolTooSmall, "pool smaller than n without repetition");
    std::vector<u64> idx(N);
    for (u64 i = 0; i < N; ++i) idx[i] = i;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(idx[j], idx[j + rng.below(N - j)]);
      put(j, pool.column(idx[j]));
    }
  } else {
    auto N = pool.size();
    require(!N || *N >= n, Errc::PoolTooSmall, "pool smaller than n without repetition");
    std::set<std::vector<u64>> seen;
    for (std::size_t j = 0; j < n;) {
      auto [c, key] = pool.draw(rng);
      if (!seen.insert(key).second) continue;
      put(j++, c);
    }
  }
  std::string label = pool.label() + (mode == PunctureMode::WithRepetition ? " punctured with repetition"
                                                                         : " punctured without repetition");
  return Code<Field>{F, std::move(G), label};
}

// Parity-check matrix: rows span the dual code.
template <class Field>
Matrix<Field> parity_check(const Code<Field>& code) {
  require(rank(code.G) == code.k(), Errc::RankDeficient, "generator rows are dependent");
  return transpose(kernel(code.G));
}

template <class Field>
Code<Field> dual(const Code<Field>& code) {
  return Code<Field>{code.field, parity_check(code), "dual of " + code.label};
}

// Generator of the (m, m−1) single parity check code.
template <class Field>
Code<Field> parity_code(const Field& F, std::size_t m) {
  require(m >= 2, Errc::ParameterOutOfRange, "parity code needs length ≥ 2");
  Matrix<Field> G(F, m - 1, m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    G(i, i) = F.one();
    G(i, m - 1) = F.neg(F.one());
  }
  return Code<Field>{F, std::move(G), "parity"};
}

// Codewords of the tensor code are m×n arrays, rows in row_code and columns
// in col_code; column (i, j) of the generator has index i*n + j.
template <class Field>
Code<Field> tensor(const Code<Field>& col_code, const Code<Field>& row_code) {
  require(col_code.field.spec() == row_code.field.spec(), Errc::SpecMismatch, "codes over different fields");
  return Code<Field>{col_code.field, kron(col_code.G, row_code.G), col_code.label + " ⊗ " + row_code.label};
}

// Visits every message-codeword pair; q^k must be at most `cap`.
template <class Field>
void for_each_codeword(const Code<Field>& code,
                       const std::function<void(const std::vector<typename Field::value_type>&)>& visit,
                       u64 cap = 10'000'000) {
  const Field& F = code.field;
  auto q = F.order();
  u128 total = 1;
  for (std::size_t i = 0; i < code.k(); ++i) {
    total *= q.value_or(~u64{0});
    require(q && total <= cap, Errc::EnumerationTooLarge, "too many codewords to enumerate");
  }
  std::vector<u64> msg(code.k(), 0);
  std::vector<typename Field::value_type> cw(code.n(), F.zero());
  for (u128 t = 0; t < total; ++t) {
    for (std::size_t j = 0; j < code.n(); ++j) {
      auto acc = F.zero();
      for (std::size_t i = 0; i < code.k(); ++i)
        if (msg[i]) acc = F.add(acc, F.mul(F.element(msg[i]), code.G(i, j)));
      cw[j] = acc;
    }
    visit(cw);
    for (std::size_t i = 0; i < code.k(); ++i) {
      if (++msg[i] < *q) break;
      msg[i] = 0;
    }
  }
}

template <class Field>
std::size_t min_distance(const Code<Field>& code) {
  std::size_t best = code.n() + 1;
  bool first = true;
  for_each_codeword<Field>(code, [&](const std::vector<typename Field::value_type>& cw) {
    if (first) {  // the zero message
      first = false;
      return;
    }
    std::size_t w = 0;
    for (const auto& x : cw) w += !code.field.is_zero(x);
    best = std::min(best, w);
  });
  return best;
}

// One-point code on the Hermitian curve y^{q0} + y = x^{q0+1} over GF(q0²).
struct HermitianData {
  TableField field;
  std::size_t q0 = 0, genus = 0, s = 0;
  std::vector<std::pair<TableField::value_type, TableField::value_type>> points;
  std::vector<std::pair<unsigned, unsigned>> basis;  // exponents (i, j) of x^i y^j
  Matrix<TableField> table;
};

HermitianData hermitian_data(std::size_t q0, std::size_t s);
ColumnPool<TableField> hermitian_pool(const HermitianData& h);

}  // namespace rmds
