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

#include "zxv/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace zxv {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

BigInt to_big(i128 v) {
  bool neg = v < 0;
  u128 u = abs128(v);
  BigInt hi = static_cast<std::uint64_t>(u >> 64);
  BigInt r = (hi << 64) + static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const BigRational& v) { *this = normalize_big(v); }

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  Rational r;
  if (fits64(n) && fits64(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  r.num_ = 0;
  r.den_ = 1;
  r.big_ = std::make_shared<const BigRational>(to_big(n), to_big(d));
  return r;
}

Rational Rational::normalize_big(BigRational v) {
  const BigInt& n = boost::multiprecision::numerator(v);
  const BigInt& d = boost::multiprecision::denominator(v);
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  Rational r;
  if (n >= lo && n <= hi && d <= hi) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  r.big_ = std::make_shared<const BigRational>(std::move(v));
  return r;
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigRational(BigInt(s)));
  return Rational(BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1))));
}

bool Rational::is_integer() const {
  return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

BigInt Rational::numerator() const {
  return big_ ? boost::multiprecision::numerator(*big_) : BigInt(num_);
}

BigInt Rational::denominator() const {
  return big_ ? boost::multiprecision::denominator(*big_) : BigInt(den_);
}

BigRational Rational::big() const { return big_ ? *big_ : BigRational(num_, den_); }

double Rational::to_double() const {
  if (!big_) return static_cast<double>(num_) / static_cast<double>(den_);
  return big_->convert_to<double>();
}

std::string Rational::to_string() const {
  if (big_) return big_->str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return normalize_big(-*big_);
  return from_i128(-static_cast<i128>(num_), den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  if (big_) return normalize_big(1 / *big_);
  return from_i128(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
    }
    i128 n1 = static_cast<i128>(a.num_) * b.den_;
    i128 n2 = static_cast<i128>(b.num_) * a.den_;
    i128 n;
    if (!__builtin_add_overflow(n1, n2, &n)) {
      return Rational::from_i128(n, static_cast<i128>(a.den_) * b.den_);
    }
  }
  return Rational::normalize_big(a.big() + b.big());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rational(p);
    }
    u128 g1 = gcd128(abs128(a.num_), static_cast<u128>(b.den_));
    u128 g2 = gcd128(abs128(b.num_), static_cast<u128>(a.den_));
    i128 n = (static_cast<i128>(a.num_) / static_cast<i128>(g1)) *
             (static_cast<i128>(b.num_) / static_cast<i128>(g2));
    i128 d = (static_cast<i128>(a.den_) / static_cast<i128>(g2)) *
             (static_cast<i128>(b.den_) / static_cast<i128>(g1));
    Rational r;
    if (fits64(n) && fits64(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    return Rational::normalize_big(BigRational(to_big(n), to_big(d)));
  }
  return Rational::normalize_big(a.big() * b.big());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.big() < b.big();
}

BigInt Rational::floor() const {
  BigInt n = numerator();
  BigInt d = denominator();
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace zxv
