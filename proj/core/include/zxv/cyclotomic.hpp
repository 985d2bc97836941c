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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "zxv/rational.hpp"

namespace zxv {

/// Largest cyclotomic order handled by the exact backend.
inline constexpr int kMaxCyclotomicOrder = 240;

/// Precomputed data for Q(zeta_N): the N-th cyclotomic polynomial and the
/// reduction of every power x^e (0 <= e < N) modulo it.
class CyclotomicField {
 public:
  /// Returns the shared context for order N. N must be a positive multiple
  /// of 8 and at most kMaxCyclotomicOrder; otherwise throws ExactUnavailable.
  static const CyclotomicField& get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  /// Coefficients of Phi_N, lowest degree first (monic, length degree+1).
  const std::vector<std::int64_t>& minimal_polynomial() const { return phi_; }
  /// x^e mod Phi_N, length degree().
  const std::vector<std::int64_t>& power(int e) const { return powers_[e]; }

 private:
  explicit CyclotomicField(int order);

  int order_;
  int degree_;
  std::vector<std::int64_t> phi_;
  std::vector<std::vector<std::int64_t>> powers_;
};

/// Integer coefficients of the n-th cyclotomic polynomial (any n >= 1).
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

/// Element of a cyclotomic field Q(zeta_N), N a multiple of 8.
///
/// Stored as a polynomial in zeta_N of degree < phi(N) reduced modulo Phi_N,
/// so equality of values is equality of coefficient vectors once both sides
/// share an order. Mixed-order operations lift both operands to the lcm.
class Cyclotomic {
 public:
  using Coeffs = boost::container::small_vector<Rational, 8>;

  /// Zero in Q(zeta_8).
  Cyclotomic() = default;
  Cyclotomic(Rational r);  // NOLINT(google-explicit-constructor)
  Cyclotomic(std::int64_t v) : Cyclotomic(Rational(v)) {}  // NOLINT

  /// Builds from explicit coefficients (length <= phi(order); shorter means
  /// trailing zeros). Coefficients at index >= phi(order) are reduced.
  static Cyclotomic from_coefficients(int order, const std::vector<Rational>& coeffs);

  /// e^{2 pi i p / q}; the result has order lcm(8, q).
  static Cyclotomic root_of_unity(std::int64_t p, std::int64_t q);
  /// e^{i pi * angle} for a rational multiple of pi.
  static Cyclotomic exp_i_pi(const Rational& angle);
  /// zeta_8 + zeta_8^{-1}.
  static Cyclotomic sqrt_two();
  /// 1 / sqrt(2).
  static Cyclotomic inv_sqrt_two();
  static Cyclotomic imag_unit();

  int order() const { return order_; }
  /// Full coefficient vector of length phi(order()).
  std::vector<Rational> coefficients() const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// True when the value is a rational number; returns it through `out`.
  bool as_rational(Rational* out = nullptr) const;

  Cyclotomic lifted(int order) const;
  std::complex<double> to_complex() const;
  Cyclotomic conj() const;
  Cyclotomic inverse() const;

  /// Returns k such that the value equals zeta_N^k, if it is an N-th root
  /// of unity for its own order N.
  std::optional<int> root_of_unity_exponent() const;

  /// Symbolic form, e.g. "1/2 + 1/2·ζ8".
  std::string to_string() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  Cyclotomic(int order, Coeffs c) : order_(order), coeffs_(std::move(c)) { trim(); }
  void trim();
  const Rational& coeff(int k) const;

  int order_ = 8;
  // Empty means zero; otherwise exactly phi(order_) entries.
  Coeffs coeffs_;
};

}  // namespace zxv
