#include "rmds/codes.hpp"

namespace rmds {

HermitianData hermitian_data(std::size_t q0, std::size_t s) {
  require(q0 >= 2, Errc::ParameterOutOfRange, "q0 must be a prime power ≥ 2");
  u64 p = 0;
  unsigned e = 0;
  for (u64 cand = 2; cand <= q0; ++cand) {
    if (q0 % cand) continue;
    u64 t = q0;
    unsigned c = 0;
    while (t % cand == 0) {
      t /= cand;
      ++c;
    }
    require(t == 1 && is_prime(cand), Errc::ParameterOutOfRange, "q0 must be a prime power");
    p = cand;
    e = c;
    break;
  }
  const std::size_t n = q0 * q0 * q0;
  const std::size_t g = q0 * (q0 - 1) / 2;
  require(static_cast<long long>(s) > 2 * static_cast<long long>(g) - 2 && s < n, Errc::ParameterOutOfRange,
          "need 2g−2 < s < n");
  require(q0 * q0 <= 64, Errc::ParameterOutOfRange, "Hermitian pools limited to q0² ≤ 64");
  const TableField F0 = TableField::smallest(p, 2 * e);
  HermitianData h{F0, q0, g, s, {}, {}, Matrix<TableField>(F0, 0, 0)};
  const TableField& F = h.field;
  const u64 q = *F.order();
  // Solve the Artin-Schreier equation by exhaustive search over y.
  for (u64 xi = 0; xi < q; ++xi) {
    auto x = F.element(xi);
    auto rhs = F.pow(x, q0 + 1);
    for (u64 yi = 0; yi < q; ++yi) {
      auto y = F.element(yi);
      if (F.equal(F.add(F.pow(y, q0), y), rhs)) h.points.emplace_back(x, y);
    }
  }
  require(h.points.size() == n, Errc::ParameterOutOfRange, "unexpected number of affine points");
  // Pole order of x^i y^j at infinity is i*q0 + j*(q0+1).
  for (unsigned j = 0; j < q0; ++j)
    for (unsigned i = 0; i * q0 + j * (q0 + 1) <= s; ++i) h.basis.emplace_back(i, j);
  std::sort(h.basis.begin(), h.basis.end(), [&](auto a, auto b) {
    return std::pair(a.first * q0 + a.second * (q0 + 1), a.second) <
           std::pair(b.first * q0 + b.second * (q0 + 1), b.second);
  });
  h.table = Matrix<TableField>(F, h.basis.size(), n);
  for (std::size_t r = 0; r < h.basis.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      h.table(r, c) = F.mul(F.pow(h.points[c].first, h.basis[r].first), F.pow(h.points[c].second, h.basis[r].second));
  return h;
}

ColumnPool<TableField> hermitian_pool(const HermitianData& h) {
  return eval_pool(h.table, "hermitian q0=" + std::to_string(h.q0) + " s=" + std::to_string(h.s));
}

}  // namespace rmds
