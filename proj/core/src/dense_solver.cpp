// Copyright 2026 The quadmap Authors.
//
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

#include "quadmap/dense_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "quadmap/error.hpp"

namespace quadmap {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) {
      throw Error(ErrorKind::kInvalidArgument, "Matrix: ragged initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::norm_inf() const {
  double best = 0.0;
  for (int r = 0; r < rows_; ++r) {
    double sum = 0.0;
    for (int c = 0; c < cols_; ++c) sum += std::abs((*this)(r, c));
    best = std::max(best, sum);
  }
  return best;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::kInvalidArgument, "Matrix product: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

LuFactorization::LuFactorization(const Matrix& a) : lu_(a), perm_(a.rows()), norm_inf_(a.norm_inf()) {
  const int n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::kInvalidArgument, "LuFactorization: matrix is not square");
  std::iota(perm_.begin(), perm_.end(), 0);
  const double threshold = kPivotTolerance * norm_inf_;

  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int r = k + 1; r < n; ++r) {
      if (std::abs(lu_(r, k)) > std::abs(lu_(pivot, k))) pivot = r;
    }
    if (!(std::abs(lu_(pivot, k)) >= threshold) || lu_(pivot, k) == 0.0) {
      throw SingularSystemError(
          std::numeric_limits<double>::infinity(),
          "interpolation matrix is singular (pivot " + std::to_string(k + 1) + " of " +
              std::to_string(n) + " vanishes); the generalized parameters require a regular "
              "coefficient matrix with nonzero determinant");
    }
    if (pivot != k) {
      for (int c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(pivot, c));
      std::swap(perm_[k], perm_[pivot]);
    }
    const double inv = 1.0 / lu_(k, k);
    for (int r = k + 1; r < n; ++r) {
      const double factor = lu_(r, k) * inv;
      lu_(r, k) = factor;
      if (factor == 0.0) continue;
      for (int c = k + 1; c < n; ++c) lu_(r, c) -= factor * lu_(k, c);
    }
  }
}

Matrix LuFactorization::solve(const Matrix& rhs) const {
  const int n = size();
  if (rhs.rows() != n) throw Error(ErrorKind::kInvalidArgument, "LuFactorization::solve: shape mismatch");
  Matrix x(n, rhs.cols());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < rhs.cols(); ++c) x(r, c) = rhs(perm_[r], c);
  }
  for (int c = 0; c < x.cols(); ++c) {
    for (int r = 1; r < n; ++r) {
      double s = x(r, c);
      for (int k = 0; k < r; ++k) s -= lu_(r, k) * x(k, c);
      x(r, c) = s;
    }
    for (int r = n - 1; r >= 0; --r) {
      double s = x(r, c);
      for (int k = r + 1; k < n; ++k) s -= lu_(r, k) * x(k, c);
      x(r, c) = s / lu_(r, r);
    }
  }
  return x;
}

Matrix LuFactorization::inverse() const { return solve(Matrix::identity(size())); }

double LuFactorization::condition_inf() const { return norm_inf_ * inverse().norm_inf(); }

DenseSolution solve_dense(const Matrix& a, const Matrix& b) {
  if (a.rows() > kMaxDenseSize) {
    throw Error(ErrorKind::kInvalidArgument,
                "solve_dense: size " + std::to_string(a.rows()) + " exceeds " + std::to_string(kMaxDenseSize));
  }
  const LuFactorization lu(a);
  return {lu.solve(b), lu.condition_inf()};
}

}  // namespace quadmap
