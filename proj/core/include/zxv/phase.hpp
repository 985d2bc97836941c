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
#include <map>
#include <set>
#include <string>

#include "zxv/rational.hpp"

namespace zxv {

/// A concrete angle: a rational multiple of pi plus an optional float part
/// in radians. Exact arithmetic applies only when `radians` is zero.
struct Angle {
  Rational pi_multiple;
  double radians = 0.0;

  static Angle pi_times(Rational r) { return Angle{std::move(r), 0.0}; }
  static Angle from_radians(double r) { return Angle{Rational(0), r}; }

  bool exact() const { return radians == 0.0; }
  double value() const;
  std::string to_string() const;
};

/// Phase of a spider: sum_i n_i * v_i + c*pi + irr, with integer n_i.
///
/// Constants are kept as written (not reduced modulo 2pi), so that scaling
/// by k multiplies the literal angle exactly as the scaled functors require.
class PhaseExpr {
 public:
  PhaseExpr() = default;
  explicit PhaseExpr(Rational pi_multiple) : pi_(std::move(pi_multiple)) {}

  static PhaseExpr constant(Rational pi_multiple) { return PhaseExpr(std::move(pi_multiple)); }
  static PhaseExpr radians(double r);
  static PhaseExpr variable(const std::string& name, std::int64_t coeff = 1);
  static PhaseExpr from_angle(const Angle& a);

  const std::map<std::string, std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coefficient(const std::string& var) const;
  const Rational& pi_constant() const { return pi_; }
  std::int64_t const_num() const { return pi_.num(); }
  std::int64_t const_den() const { return pi_.den(); }
  double irrational() const { return irr_; }

  bool ground() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && pi_.is_zero() && irr_ == 0.0; }
  /// No variables, no float part, constant in (pi/4)Z.
  bool in_pi4_fragment() const;
  /// Constant part lies in (pi/4)Z and there is no float part (variables allowed).
  bool constants_in_pi4() const;
  /// Value in radians; requires ground().
  double value() const;
  std::set<std::string> variables() const;

  /// Multiplies everything (coefficients and constants) by k.
  PhaseExpr scaled(std::int64_t k) const;
  /// Multiplies only the constant part by k.
  PhaseExpr scaled_constants(std::int64_t k) const;
  PhaseExpr without_var(const std::string& var) const;
  PhaseExpr constant_part() const;

  /// Replaces bound variables; unbound ones stay symbolic unless `require_all`.
  PhaseExpr substitute(const std::map<std::string, Angle>& assignment,
                       bool require_all = true) const;
  /// Renames a variable (merging coefficients when the target already occurs).
  PhaseExpr renamed(const std::string& from, const std::string& to) const;

  /// Canonical DSL text, e.g. "2a - b + 1/4 pi + 0.3r".
  std::string to_string() const;

  PhaseExpr operator-() const;
  friend PhaseExpr operator+(const PhaseExpr& a, const PhaseExpr& b);
  friend PhaseExpr operator-(const PhaseExpr& a, const PhaseExpr& b) { return a + (-b); }
  friend bool operator==(const PhaseExpr& a, const PhaseExpr& b) {
    return a.coeffs_ == b.coeffs_ && a.pi_ == b.pi_ && a.irr_ == b.irr_;
  }
  friend bool operator!=(const PhaseExpr& a, const PhaseExpr& b) { return !(a == b); }

 private:
  std::map<std::string, std::int64_t> coeffs_;
  Rational pi_;
  double irr_ = 0.0;
};

/// Prints a rational multiple of pi the way the DSL reads it ("pi", "-1/2 pi").
std::string format_pi_multiple(const Rational& r);
/// Prints radians with 12 significant digits and an `r` suffix.
std::string format_radians(double r);

}  // namespace zxv
