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

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace quadmap {

enum class ErrorKind {
  kDegenerateInput,
  kCoincidentLines,
  kDegenerateQuad,
  kMissingPole,
  kSingularSystem,
  kSingularJacobian,
  kNewtonDivergence,
  kInvalidArgument,
  kParseError,
};

std::string_view to_string(ErrorKind kind);

// Base of every domain failure raised by the library. `kind()` is stable and
// is what the CLI reports in its error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class DegeneracyReason {
  kCoincidentVertices,
  kCollinearTriple,
  kSelfIntersecting,
  kClockwise,
  kCoincidentEdgeLines,
  kZeroMidpointDistance,
};

std::string_view to_string(DegeneracyReason reason);

class DegenerateQuadError : public Error {
 public:
  DegenerateQuadError(DegeneracyReason reason, const std::string& message)
      : Error(ErrorKind::kDegenerateQuad, message), reason_(reason) {}

  DegeneracyReason reason() const noexcept { return reason_; }

 private:
  DegeneracyReason reason_;
};

// Raised when an interpolation system has no usable solution; the
// coefficient matrix must be regular for the generalized parameters to exist.
class SingularSystemError : public Error {
 public:
  SingularSystemError(double cond_estimate, const std::string& message)
      : Error(ErrorKind::kSingularSystem, message),
        cond_estimate_(cond_estimate) {}

  // +inf when factorization stopped at a vanishing pivot.
  double cond_estimate() const noexcept { return cond_estimate_; }

 private:
  double cond_estimate_;
};

class ParseError : public Error {
 public:
  ParseError(std::string field, int line, const std::string& message)
      : Error(ErrorKind::kParseError, message),
        field_(std::move(field)),
        line_(line) {}

  const std::string& field() const noexcept { return field_; }
  // 1-based; 0 when the failure is not tied to a source line.
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

}  // namespace quadmap
