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

// Fast exact arithmetic for the pi/4 fragment: elements of Z[zeta_8][1/2]
// stored as (c0 + c1 z + c2 z^2 + c3 z^3) / 2^e with z^4 = -1. Any int64
// overflow throws DyadicOverflow so callers can redo the work in the general
// cyclotomic field.

#include <cstdint>
#include <stdexcept>

#include "zxv/cyclotomic.hpp"

namespace zxv::detail {

struct DyadicOverflow : std::overflow_error {
  DyadicOverflow() : std::overflow_error("dyadic overflow") {}
};

class Dyadic8 {
 public:
  Dyadic8() = default;
  Dyadic8(std::int64_t v) : c_{v, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)

  static Dyadic8 zeta_power(int k) {
    k = ((k % 8) + 8) % 8;
    Dyadic8 d;
    d.c_[k % 4] = k < 4 ? 1 : -1;
    return d;
  }
  static Dyadic8 inv_sqrt2() {
    // (z - z^3) / 2
    Dyadic8 d;
    d.c_[1] = 1;
    d.c_[3] = -1;
    d.e_ = 1;
    return d;
  }
  static Dyadic8 half_power(int e) {
    Dyadic8 d(1);
    d.e_ = e;
    return d;
  }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  Cyclotomic to_cyclotomic() const {
    if (is_zero()) return Cyclotomic();
    const std::int64_t den = std::int64_t{1} << e_;
    return Cyclotomic::from_coefficients(
        8, {Rational(c_[0], den), Rational(c_[1], den), Rational(c_[2], den), Rational(c_[3], den)});
  }

  friend Dyadic8 operator+(const Dyadic8& a, const Dyadic8& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    Dyadic8 out;
    const int e = a.e_ > b.e_ ? a.e_ : b.e_;
    for (int k = 0; k < 4; ++k) out.c_[k] = add(shl(a.c_[k], e - a.e_), shl(b.c_[k], e - b.e_));
    out.e_ = e;
    out.normalize();
    return out;
  }
  friend Dyadic8 operator-(const Dyadic8& a, const Dyadic8& b) { return a + (-b); }
  Dyadic8 operator-() const {
    Dyadic8 out = *this;
    for (auto& v : out.c_) {
      if (v == INT64_MIN) throw DyadicOverflow();
      v = -v;
    }
    return out;
  }
  friend Dyadic8 operator*(const Dyadic8& a, const Dyadic8& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic8();
    __extension__ __int128 t[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        const __int128 p = static_cast<__int128>(a.c_[i]) * b.c_[j];
        if (i + j < 4)
          t[i + j] += p;
        else
          t[i + j - 4] -= p;
      }
    }
    Dyadic8 out;
    for (int k = 0; k < 4; ++k) {
      if (t[k] > INT64_MAX || t[k] < INT64_MIN) throw DyadicOverflow();
      out.c_[k] = static_cast<std::int64_t>(t[k]);
    }
    out.e_ = a.e_ + b.e_;
    out.normalize();
    if (out.e_ > 60) throw DyadicOverflow();
    return out;
  }
  Dyadic8& operator+=(const Dyadic8& b) { return *this = *this + b; }
  Dyadic8& operator-=(const Dyadic8& b) { return *this = *this - b; }
  friend bool operator==(const Dyadic8& a, const Dyadic8& b) {
    return a.e_ == b.e_ && a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] &&
           a.c_[3] == b.c_[3];
  }

 private:
  static std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw DyadicOverflow();
    return r;
  }
  static std::int64_t shl(std::int64_t x, int s) {
    if (s == 0 || x == 0) return x;
    if (s >= 62) throw DyadicOverflow();
    const std::int64_t lim = std::int64_t{1} << (62 - s);
    if (x >= lim || x <= -lim) throw DyadicOverflow();
    return x * (std::int64_t{1} << s);
  }
  void normalize() {
    if (is_zero()) {
      e_ = 0;
      return;
    }
    while (e_ > 0 && ((c_[0] | c_[1] | c_[2] | c_[3]) & 1) == 0) {
      for (auto& v : c_) v /= 2;
      --e_;
    }
  }

  std::int64_t c_[4] = {0, 0, 0, 0};
  int e_ = 0;
};

}  // namespace zxv::detail
