// Copyright 2026 The sumrank Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense Gaussian elimination over any field exposing add/sub/mul/inv.
// One kernel for F_h (interpolation-free systems, designs, ranks) and for
// F_{q^m} (interpolation, Lagrange systems).

#ifndef SUMRANK_LINALG_HPP
#define SUMRANK_LINALG_HPP

#include <algorithm>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sumrank/gf.hpp"

namespace sumrank {

template <class F>
concept FieldOps = requires(const F& f, const typename F::value_type& a) {
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const T> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Reduced row echelon form in place; returns the pivot columns in order.
/// Only the first `limit_cols` columns are eligible as pivots (defaults to
/// all), which lets callers reduce an augmented matrix.
template <FieldOps F>
std::vector<std::size_t> row_reduce(const F& field, Matrix<typename F::value_type>& a,
                                    std::size_t limit_cols = static_cast<std::size_t>(-1)) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t pivot_cols = std::min(cols, limit_cols);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && field.is_zero(a(sel, c))) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(sel, j), a(r, j));
    const auto inv = field.inv(a(r, c));
    for (std::size_t j = c; j < cols; ++j) a(r, j) = field.mul(inv, a(r, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || field.is_zero(a(i, c))) continue;
      const auto factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        a(i, j) = field.sub(a(i, j), field.mul(factor, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <FieldOps F>
std::size_t rank(const F& field, Matrix<typename F::value_type> a) {
  return row_reduce(field, a).size();
}

/// Kernel basis of a; vector i has its i-th free variable set to one and
/// the other free variables zero (free variables in increasing order).
template <FieldOps F>
std::vector<std::vector<typename F::value_type>> kernel_basis(const F& field,
                                                              Matrix<typename F::value_type> a) {
  using T = typename F::value_type;
  const auto pivots = row_reduce(field, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(a.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.sub(field.zero(), a(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solution set of a x = b: an offset plus a kernel basis, or nullopt when
/// the system is inconsistent.  The offset has all free variables zero.
template <class T>
struct LinearSolution {
  std::vector<T> offset;
  std::vector<std::vector<T>> basis;
};

template <FieldOps F>
std::optional<LinearSolution<typename F::value_type>> solve(
    const F& field, const Matrix<typename F::value_type>& a,
    std::span<const typename F::value_type> b) {
  using T = typename F::value_type;
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  const std::size_t n = a.cols();
  Matrix<T> aug(a.rows(), n + 1, field.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = row_reduce(field, aug, n);
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (!field.is_zero(aug(i, n))) return std::nullopt;
  LinearSolution<T> sol;
  sol.offset.assign(n, field.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.offset[pivots[i]] = aug(i, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(n, field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.sub(field.zero(), aug(i, free));
    sol.basis.push_back(std::move(v));
  }
  return sol;
}

/// Inverse of a square matrix, or nullopt when singular.
template <FieldOps F>
std::optional<Matrix<typename F::value_type>> inverse(const F& field,
                                                       const Matrix<typename F::value_type>& a) {
  using T = typename F::value_type;
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  Matrix<T> aug(n, 2 * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = field.one();
  }
  if (row_reduce(field, aug, n).size() != n) return std::nullopt;
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

using DigitVec = std::vector<Digit>;
using DigitMatrix = Matrix<Digit>;

/// An affine subset of F_h^N: empty, or offset + span(basis) with the basis
/// linearly independent.
class AffineSet {
 public:
  static AffineSet empty(std::size_t ambient);
  static AffineSet whole(std::size_t ambient);
  static AffineSet point(DigitVec p);
  /// Takes ownership of an independent basis.
  AffineSet(DigitVec offset, std::vector<DigitVec> basis);
  /// Solution set of a x = b over F_h.
  static AffineSet from_system(const BaseField& field, const DigitMatrix& a, std::span<const Digit> b);

  bool is_empty() const { return empty_; }
  std::size_t ambient() const { return ambient_; }
  /// -1 for the empty set.
  long dim() const { return empty_ ? -1 : static_cast<long>(basis_.size()); }
  const DigitVec& offset() const { return offset_; }
  const std::vector<DigitVec>& basis() const { return basis_; }

  bool contains(const BaseField& field, std::span<const Digit> x) const;
  /// h^dim points in lexicographic order of their coordinates in the basis;
  /// throws std::length_error above `cap` points.
  std::vector<DigitVec> enumerate(const BaseField& field, std::size_t cap) const;
  std::size_t size_if_at_most(const BaseField& field, std::size_t cap) const;
  void for_each(const BaseField& field, const std::function<void(const DigitVec&)>& fn) const;

 private:
  AffineSet() = default;
  bool empty_ = false;
  std::size_t ambient_ = 0;
  DigitVec offset_;
  std::vector<DigitVec> basis_;
};

}  // namespace sumrank

#endif  // SUMRANK_LINALG_HPP
