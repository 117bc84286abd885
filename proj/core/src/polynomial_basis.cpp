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

#include "quadmap/polynomial_basis.hpp"

namespace quadmap {

namespace {

constexpr std::array<Monomial, 4> kLagrange4 = {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
constexpr std::array<Monomial, 6> kPascal6 = {{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};
constexpr std::array<Monomial, 10> kPascal10 = {
    {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}}};

// k! / (k - d)! * x^(k - d), zero when d > k.
double power_derivative(double x, int k, int d) {
  if (d > k) return 0.0;
  double coeff = 1.0;
  for (int n = 0; n < d; ++n) coeff *= static_cast<double>(k - n);
  double value = 1.0;
  for (int n = 0; n < k - d; ++n) value *= x;
  return coeff * value;
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kLagrange4: return "lagrange4";
    case Scheme::kPascal6: return "pascal6";
    case Scheme::kPascal10: return "pascal10";
  }
  return "unknown";
}

std::optional<Scheme> scheme_from_string(std::string_view name) {
  if (name == "lagrange4") return Scheme::kLagrange4;
  if (name == "pascal6") return Scheme::kPascal6;
  if (name == "pascal10") return Scheme::kPascal10;
  return std::nullopt;
}

BasisSpec::BasisSpec(Scheme scheme) : scheme_(scheme) {
  switch (scheme) {
    case Scheme::kLagrange4: exponents_ = kLagrange4; break;
    case Scheme::kPascal6: exponents_ = kPascal6; break;
    case Scheme::kPascal10: exponents_ = kPascal10; break;
  }
}

int BasisSpec::index_of(Monomial m) const {
  for (int k = 0; k < size(); ++k) {
    if (exponents_[k] == m) return k;
  }
  return -1;
}

double monomial_derivative(Monomial m, NaturalPoint p, int da, int db) {
  return power_derivative(p.t1, m.i, da) * power_derivative(p.t2, m.j, db);
}

std::vector<double> basis_row(const BasisSpec& spec, NaturalPoint p) {
  std::vector<double> row;
  row.reserve(spec.size());
  for (const Monomial& m : spec.exponents()) row.push_back(monomial_derivative(m, p, 0, 0));
  return row;
}

std::array<std::vector<double>, 2> basis_gradient(const BasisSpec& spec, NaturalPoint p) {
  std::array<std::vector<double>, 2> rows;
  for (const Monomial& m : spec.exponents()) {
    rows[0].push_back(monomial_derivative(m, p, 1, 0));
    rows[1].push_back(monomial_derivative(m, p, 0, 1));
  }
  return rows;
}

std::array<std::vector<double>, 4> basis_second_derivatives(const BasisSpec& spec, NaturalPoint p) {
  std::array<std::vector<double>, 4> rows;
  for (const Monomial& m : spec.exponents()) {
    const double mixed = monomial_derivative(m, p, 1, 1);
    rows[0].push_back(monomial_derivative(m, p, 2, 0));
    rows[1].push_back(mixed);
    rows[2].push_back(mixed);
    rows[3].push_back(monomial_derivative(m, p, 0, 2));
  }
  return rows;
}

}  // namespace quadmap
