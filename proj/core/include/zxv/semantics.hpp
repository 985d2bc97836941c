// Copyright 2026 The zxverify Authors
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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "zxv/dense_matrix.hpp"
#include "zxv/diagram.hpp"

namespace zxv {

enum class Backend { Exact, Float };

struct EvalOptions {
  Backend backend = Backend::Exact;
  /// When the exact backend cannot represent a phase, evaluate in floats instead of throwing.
  bool allow_fallback = false;
  /// Angle scale k of the functor [[.]]_k; 1 is the standard interpretation.
  std::int64_t scale = 1;
};

/// Interpretation result tagged with the backend that produced it.
class Matrix {
 public:
  Matrix() : value_(ExactMatrix()) {}
  Matrix(ExactMatrix m) : value_(std::move(m)) {}  // NOLINT(google-explicit-constructor)
  Matrix(FloatMatrix m, bool fell_back = false)  // NOLINT(google-explicit-constructor)
      : value_(std::move(m)), fell_back_(fell_back) {}

  Backend backend() const { return is_exact() ? Backend::Exact : Backend::Float; }
  bool is_exact() const { return std::holds_alternative<ExactMatrix>(value_); }
  /// True when exact evaluation was requested but floats were used.
  bool fell_back() const { return fell_back_; }
  const ExactMatrix& exact() const;
  FloatMatrix to_float() const;
  std::size_t rows() const;
  std::size_t cols() const;
  std::string to_string() const;

 private:
  std::variant<ExactMatrix, FloatMatrix> value_;
  bool fell_back_ = false;
};

/// Standard interpretation (or [[.]]_k when options.scale != 1). Requires a ground diagram.
Matrix interp(const Diagram& d, const EvalOptions& options = {});
/// [[d]]_k; k must be 1 mod 8.
Matrix interp_scaled(const Diagram& d, std::int64_t k, const EvalOptions& options = {});

ExactMatrix interp_exact(const Diagram& d);
FloatMatrix interp_float(const Diagram& d);

/// Applies [[d]] to the columns of m (rows must be 2^inputs(d)).
ExactMatrix apply_exact(const Diagram& d, const ExactMatrix& m);
FloatMatrix apply_float(const Diagram& d, const FloatMatrix& m);

/// Smallest cyclotomic order holding every phase of a ground diagram, if within the cap.
std::optional<int> exact_order(const Diagram& d);

struct EqMode {
  bool exact = true;
  double tol = 1e-9;

  static EqMode exact_mode() { return {true, 0.0}; }
  static EqMode tolerance(double eps) { return {false, eps}; }
};

/// Semantic equality of two ground diagrams of equal arity.
bool semantic_eq(const Diagram& a, const Diagram& b, EqMode mode = {});
/// Exact comparison when both are exact, otherwise max-abs within tol.
bool matrices_equal(const Matrix& a, const Matrix& b, double tol = 1e-9);
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace zxv
