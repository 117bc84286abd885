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

#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

namespace quadmap {

// Row-major dense matrix for the small systems of interpolation fitting.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<size_t>(r) * cols_ + c];
  }
  double operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  // Max absolute row sum.
  double norm_inf() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

// LU factorization with partial (row) pivoting: P A = L U, unit lower L.
class LuFactorization {
 public:
  // Throws SingularSystemError when a pivot falls below
  // kPivotTolerance * ||A||inf.
  explicit LuFactorization(const Matrix& a);

  int size() const { return lu_.rows(); }
  Matrix solve(const Matrix& rhs) const;
  Matrix inverse() const;
  // ||A||inf * ||A^-1||inf.
  double condition_inf() const;
  double norm_inf() const { return norm_inf_; }

  static constexpr double kPivotTolerance = 1e-12;

 private:
  Matrix lu_;
  std::vector<int> perm_;
  double norm_inf_;
};

struct DenseSolution {
  Matrix x;
  double cond_estimate;
};

inline constexpr int kMaxDenseSize = 16;
// Condition numbers above this are reported as warnings by the fitting layer.
inline constexpr double kConditionWarning = 1e12;

// Solves A X = B for square A (n <= kMaxDenseSize).
DenseSolution solve_dense(const Matrix& a, const Matrix& b);

}  // namespace quadmap
