#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rmds/error.hpp"
#include "rmds/family.hpp"
#include "rmds/gf.hpp"

namespace rmds {

// Dense row-major matrix over a field engine.
template <class Field>
class Matrix {
 public:
  using Scalar = typename Field::value_type;

  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Scalar& at(std::size_t r, std::size_t c) {
    require(r < rows_ && c < cols_, Errc::IndexOutOfBounds, "matrix index out of range");
    return (*this)(r, c);
  }
  const Scalar& at(std::size_t r, std::size_t c) const {
    require(r < rows_ && c < cols_, Errc::IndexOutOfBounds, "matrix index out of range");
    return (*this)(r, c);
  }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Scalar> column(std::size_t c) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// In-place reduced row echelon form with first-nonzero pivoting in column
// order. Returns the pivot columns.
template <class Field>
std::vector<std::size_t> rref_inplace(Matrix<Field>& M) {
  const Field& F = M.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t piv = r;
    while (piv < M.rows() && F.is_zero(M(piv, c))) ++piv;
    if (piv == M.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(piv, j), M(r, j));
    const auto inv = F.inv(M(r, c));
    for (std::size_t j = c; j < M.cols(); ++j) M(r, j) = F.mul(M(r, j), inv);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || F.is_zero(M(i, c))) continue;
      const auto f = M(i, c);
      for (std::size_t j = c; j < M.cols(); ++j) M(i, j) = F.sub(M(i, j), F.mul(f, M(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Forward elimination only; returns the rank.
template <class Field>
std::size_t rank(Matrix<Field> M) {
  const Field& F = M.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t piv = r;
    while (piv < M.rows() && F.is_zero(M(piv, c))) ++piv;
    if (piv == M.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < M.cols(); ++j) std::swap(M(piv, j), M(r, j));
    const auto inv = F.inv(M(r, c));
    for (std::size_t i = r + 1; i < M.rows(); ++i) {
      if (F.is_zero(M(i, c))) continue;
      const auto f = F.mul(M(i, c), inv);
      for (std::size_t j = c; j < M.cols(); ++j) M(i, j) = F.sub(M(i, j), F.mul(f, M(r, j)));
    }
    ++r;
  }
  return r;
}

// Basis of the right null space, one basis vector per column.
template <class Field>
Matrix<Field> kernel(const Matrix<Field>& M) {
  const Field& F = M.field();
  Matrix<Field> R = M;
  const auto pivots = rref_inplace(R);
  std::vector<bool> is_pivot(M.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < M.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<Field> K(F, M.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const std::size_t fc = free_cols[t];
    K(fc, t) = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) K(pivots[i], t) = F.neg(R(i, fc));
  }
  return K;
}

template <class Field>
Matrix<Field> transpose(const Matrix<Field>& M) {
  Matrix<Field> T(M.field(), M.cols(), M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) T(j, i) = M(i, j);
  return T;
}

template <class Field>
Matrix<Field> multiply(const Matrix<Field>& A, const Matrix<Field>& B) {
  require(A.cols() == B.rows(), Errc::DimensionMismatch, "inner dimensions differ");
  const Field& F = A.field();
  Matrix<Field> C(F, A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t t = 0; t < A.cols(); ++t) {
      if (F.is_zero(A(i, t))) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) = F.add(C(i, j), F.mul(A(i, t), B(t, j)));
    }
  return C;
}

template <class Field>
bool is_zero_matrix(const Matrix<Field>& M) {
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!M.field().is_zero(M(i, j))) return false;
  return true;
}

template <class Field>
Matrix<Field> submatrix(const Matrix<Field>& M, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols) {
  for (auto r : rows) require(r < M.rows(), Errc::IndexOutOfBounds, "row index out of range");
  for (auto c : cols) require(c < M.cols(), Errc::IndexOutOfBounds, "column index out of range");
  Matrix<Field> S(M.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) S(i, j) = M(rows[i], cols[j]);
  return S;
}

template <class Field>
Matrix<Field> select_columns(const Matrix<Field>& M, std::span<const std::size_t> cols) {
  for (auto c : cols) require(c < M.cols(), Errc::IndexOutOfBounds, "column index out of range");
  Matrix<Field> S(M.field(), M.rows(), cols.size());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) S(i, j) = M(i, cols[j]);
  return S;
}

template <class Field>
Matrix<Field> hstack(const Matrix<Field>& A, const Matrix<Field>& B) {
  require(A.rows() == B.rows(), Errc::DimensionMismatch, "hstack needs equal row counts");
  Matrix<Field> C(A.field(), A.rows(), A.cols() + B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
    for (std::size_t j = 0; j < B.cols(); ++j) C(i, A.cols() + j) = B(i, j);
  }
  return C;
}

template <class Field>
Matrix<Field> vstack(const Matrix<Field>& A, const Matrix<Field>& B) {
  require(A.cols() == B.cols(), Errc::DimensionMismatch, "vstack needs equal column counts");
  Matrix<Field> C(A.field(), A.rows() + B.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) C(A.rows() + i, j) = B(i, j);
  return C;
}

template <class Field>
Matrix<Field> kron(const Matrix<Field>& A, const Matrix<Field>& B) {
  const Field& F = A.field();
  Matrix<Field> C(F, A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      for (std::size_t s = 0; s < B.rows(); ++s)
        for (std::size_t t = 0; t < B.cols(); ++t)
          C(i * B.rows() + s, j * B.cols() + t) = F.mul(A(i, j), B(s, t));
  return C;
}

template <class Field>
typename Field::value_type det(Matrix<Field> M) {
  require(M.rows() == M.cols(), Errc::NonSquare, "determinant of a non-square matrix");
  const Field& F = M.field();
  auto d = F.one();
  const std::size_t n = M.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && F.is_zero(M(piv, c))) ++piv;
    if (piv == n) return F.zero();
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(M(piv, j), M(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, M(c, c));
    const auto inv = F.inv(M(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (F.is_zero(M(i, c))) continue;
      const auto f = F.mul(M(i, c), inv);
      for (std::size_t j = c; j < n; ++j) M(i, j) = F.sub(M(i, j), F.mul(f, M(c, j)));
    }
  }
  return d;
}

template <class Field>
typename Field::value_type det(const Matrix<Field>& M, std::span<const std::size_t> rows,
                               std::span<const std::size_t> cols) {
  require(rows.size() == cols.size(), Errc::NonSquare, "determinant of a non-square selection");
  return det(submatrix(M, rows, cols));
}

// Column basis of the column span of M (the pivot columns of M).
template <class Field>
Matrix<Field> column_basis(const Matrix<Field>& M) {
  Matrix<Field> R = M;
  const auto pivots = rref_inplace(R);
  return select_columns(M, std::span<const std::size_t>(pivots));
}

// Column basis of span(A) ∩ span(B), with A and B given by spanning columns.
template <class Field>
Matrix<Field> intersect_spans(const Matrix<Field>& A, const Matrix<Field>& B) {
  const Field& F = A.field();
  Matrix<Field> Ab = column_basis(A), Bb = column_basis(B);
  if (Ab.cols() == 0 || Bb.cols() == 0) return Matrix<Field>(F, A.rows(), 0);
  // x in ker [Ab | -Bb] gives Ab x_A = Bb x_B in the intersection; Ab has
  // independent columns so the map x -> Ab x_A is injective on the kernel.
  Matrix<Field> negB = Bb;
  for (std::size_t i = 0; i < negB.rows(); ++i)
    for (std::size_t j = 0; j < negB.cols(); ++j) negB(i, j) = F.neg(negB(i, j));
  Matrix<Field> K = kernel(hstack(Ab, negB));
  Matrix<Field> out(F, A.rows(), K.cols());
  for (std::size_t t = 0; t < K.cols(); ++t)
    for (std::size_t i = 0; i < Ab.rows(); ++i) {
      auto acc = F.zero();
      for (std::size_t j = 0; j < Ab.cols(); ++j) acc = F.add(acc, F.mul(Ab(i, j), K(j, t)));
      out(i, t) = acc;
    }
  return out;
}

// dim(V_{A_1} ∩ ⋯ ∩ V_{A_ℓ}) by folding pairwise intersections left to right.
template <class Field>
std::size_t span_intersection_dim(const Matrix<Field>& V, const SetFamily& family) {
  require(family.n() == V.cols(), Errc::DimensionMismatch, "family ground set differs from column count");
  if (family.ell() == 0) return 0;
  auto cols = family.members(0);
  Matrix<Field> acc = select_columns(V, std::span<const std::size_t>(cols));
  for (std::size_t i = 1; i < family.ell(); ++i) {
    if (acc.cols() == 0) return 0;
    auto ci = family.members(i);
    acc = intersect_spans(acc, select_columns(V, std::span<const std::size_t>(ci)));
  }
  return rank(acc);
}

}  // namespace rmds
