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

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace quadmap {

// Point of the reference square [-1,1]^2 (or beyond it; maps extrapolate).
struct NaturalPoint {
  double t1 = 0.0;
  double t2 = 0.0;

  friend constexpr bool operator==(NaturalPoint, NaturalPoint) = default;
};

enum class Scheme { kLagrange4, kPascal6, kPascal10 };

std::string_view to_string(Scheme scheme);
std::optional<Scheme> scheme_from_string(std::string_view name);

// Monomial (t1)^i (t2)^j.
struct Monomial {
  int i = 0;
  int j = 0;

  friend constexpr bool operator==(Monomial, Monomial) = default;
};

// Monomial set of a scheme, in the fixed row order used for parameter
// matrices:
//   lagrange4  1, t1, t2, t1 t2
//   pascal6    1, t1, t2, t1^2, t1 t2, t2^2
//   pascal10   pascal6, t1^3, t1^2 t2, t1 t2^2, t2^3
class BasisSpec {
 public:
  explicit BasisSpec(Scheme scheme);

  Scheme scheme() const { return scheme_; }
  std::span<const Monomial> exponents() const { return exponents_; }
  int size() const { return static_cast<int>(exponents_.size()); }
  // Position of a monomial in exponents(), or -1.
  int index_of(Monomial m) const;

  friend bool operator==(const BasisSpec& a, const BasisSpec& b) { return a.scheme_ == b.scheme_; }

 private:
  Scheme scheme_;
  std::span<const Monomial> exponents_;
};

// d^(da + db) / d t1^da d t2^db of t1^i t2^j, evaluated at p.
double monomial_derivative(Monomial m, NaturalPoint p, int da, int db);

std::vector<double> basis_row(const BasisSpec& spec, NaturalPoint p);

// Row alpha (0 -> t1, 1 -> t2) holds the first partials of every monomial.
std::array<std::vector<double>, 2> basis_gradient(const BasisSpec& spec, NaturalPoint p);

// Rows ordered d11, d21, d12, d22; d21 and d12 are identical.
std::array<std::vector<double>, 4> basis_second_derivatives(const BasisSpec& spec, NaturalPoint p);

}  // namespace quadmap
