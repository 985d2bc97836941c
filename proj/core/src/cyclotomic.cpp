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

#include "zxv/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "zxv/errors.hpp"

namespace zxv {

namespace {

using IntPoly = std::vector<std::int64_t>;
using RatPoly = std::vector<Rational>;

// Exact division of integer polynomials; b is monic.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

void rat_trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Polynomial division over Q: a = q*b + r.
void rat_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  rat_trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Rational(0));
  const Rational lead_inv = b.back().inverse();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();  // leading term cancels exactly
    rat_trim(r);
  }
}

RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  rat_trim(out);
  return out;
}

RatPoly rat_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  rat_trim(out);
  return out;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

CyclotomicField::CyclotomicField(int order) : order_(order), degree_(euler_phi(order)) {
  phi_ = cyclotomic_polynomial(order);
  powers_.assign(order, IntPoly(degree_, 0));
  IntPoly cur(degree_, 0);
  cur[0] = 1;
  for (int e = 0; e < order; ++e) {
    powers_[e] = cur;
    // multiply by x and reduce using x^deg = -sum phi_j x^j
    const std::int64_t top = cur[degree_ - 1];
    for (int j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < degree_; ++j) cur[j] -= top * phi_[j];
  }
}

const CyclotomicField& CyclotomicField::get(int order) {
  if (order <= 0 || order % 8 != 0)
    throw ExactUnavailable("cyclotomic order " + std::to_string(order) + " is not a multiple of 8");
  if (order > kMaxCyclotomicOrder)
    throw ExactUnavailable("cyclotomic order " + std::to_string(order) + " exceeds cap " +
                           std::to_string(kMaxCyclotomicOrder));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) slot.reset(new CyclotomicField(order));
  return *slot;
}

Cyclotomic::Cyclotomic(Rational r) {
  if (r.is_zero()) return;
  const int deg = CyclotomicField::get(8).degree();
  coeffs_.assign(deg, Rational(0));
  coeffs_[0] = std::move(r);
}

void Cyclotomic::trim() {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return;
  coeffs_.clear();
}

const Rational& Cyclotomic::coeff(int k) const {
  static const Rational zero(0);
  return coeffs_.empty() ? zero : coeffs_[k];
}

Cyclotomic Cyclotomic::from_coefficients(int order, const std::vector<Rational>& coeffs) {
  const auto& f = CyclotomicField::get(order);
  Coeffs c(f.degree(), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    const auto& pw = f.power(static_cast<int>(k % order));
    for (int j = 0; j < f.degree(); ++j)
      if (pw[j] != 0) c[j] += coeffs[k] * Rational(pw[j]);
  }
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t p, std::int64_t q) {
  if (q < 1) throw Error("root_of_unity: q must be positive");
  const std::int64_t n = lcm64(8, q);
  if (n > kMaxCyclotomicOrder)
    throw ExactUnavailable("root of unity of order " + std::to_string(q) + " exceeds cap");
  const int order = static_cast<int>(n);
  std::int64_t e = (p % q) * (n / q);
  e %= n;
  if (e < 0) e += n;
  const auto& f = CyclotomicField::get(order);
  Coeffs c(f.degree(), Rational(0));
  const auto& pw = f.power(static_cast<int>(e));
  for (int j = 0; j < f.degree(); ++j) c[j] = Rational(pw[j]);
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::exp_i_pi(const Rational& angle) {
  // e^{i pi p/q} = e^{2 pi i p / (2q)}
  if (!angle.is_small()) throw ExactUnavailable("angle denominator too large");
  if (angle.den() > kMaxCyclotomicOrder)
    throw ExactUnavailable("angle denominator " + std::to_string(angle.den()) + " exceeds cap");
  const std::int64_t q = 2 * angle.den();
  return root_of_unity(angle.num() % q, q);
}

Cyclotomic Cyclotomic::sqrt_two() { return root_of_unity(1, 8) + root_of_unity(-1, 8); }

Cyclotomic Cyclotomic::inv_sqrt_two() { return sqrt_two() * Cyclotomic(Rational(1, 2)); }

Cyclotomic Cyclotomic::imag_unit() { return root_of_unity(1, 4); }

std::vector<Rational> Cyclotomic::coefficients() const {
  const int deg = CyclotomicField::get(order_).degree();
  if (coeffs_.empty()) return std::vector<Rational>(deg, Rational(0));
  return std::vector<Rational>(coeffs_.begin(), coeffs_.end());
}

bool Cyclotomic::is_one() const {
  Rational r;
  return as_rational(&r) && r.is_one();
}

bool Cyclotomic::as_rational(Rational* out) const {
  if (coeffs_.empty()) {
    if (out) *out = Rational(0);
    return true;
  }
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  if (out) *out = coeffs_[0];
  return true;
}

Cyclotomic Cyclotomic::lifted(int order) const {
  if (order == order_) return *this;
  if (order % order_ != 0)
    throw Error("cannot lift order " + std::to_string(order_) + " to " + std::to_string(order));
  const auto& f = CyclotomicField::get(order);
  Cyclotomic out;
  out.order_ = order;
  if (coeffs_.empty()) return out;
  const int step = order / order_;
  Coeffs c(f.degree(), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& pw = f.power(static_cast<int>(k) * step);
    for (int j = 0; j < f.degree(); ++j)
      if (pw[j] != 0) c[j] += coeffs_[k] * Rational(pw[j]);
  }
  out.coeffs_ = std::move(c);
  out.trim();
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  long double re = 0, im = 0;
  const long double two_pi = 6.283185307179586476925286766559L;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const long double c = coeffs_[k].to_double();
    const long double a = two_pi * static_cast<long double>(k) / order_;
    re += c * std::cos(a);
    im += c * std::sin(a);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

Cyclotomic Cyclotomic::conj() const {
  // zeta^k -> zeta^{-k} = zeta^{N-k}
  if (coeffs_.empty()) return *this;
  std::vector<Rational> c(order_, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    c[(order_ - static_cast<int>(k)) % order_] = coeffs_[k];
  return from_coefficients(order_, c);
}

Cyclotomic Cyclotomic::inverse() const {
  if (coeffs_.empty()) throw Error("division by zero in cyclotomic field");
  Rational r;
  if (as_rational(&r)) {
    Cyclotomic out(r.inverse());
    return out.lifted(order_);
  }
  const auto& f = CyclotomicField::get(order_);
  // Extended Euclid: find s with s*a = 1 mod Phi.
  RatPoly a(coeffs_.begin(), coeffs_.end());
  rat_trim(a);
  RatPoly m;
  for (auto v : f.minimal_polynomial()) m.emplace_back(v);
  RatPoly r0 = m, r1 = a, s0, s1{Rational(1)};
  while (!r1.empty()) {
    RatPoly q, rem;
    rat_divmod(r0, r1, q, rem);
    RatPoly s2 = rat_sub(s0, rat_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi is irreducible.
  const Rational scale = r0[0].inverse();
  std::vector<Rational> c(s0.begin(), s0.end());
  for (auto& v : c) v *= scale;
  Coeffs cc(f.degree(), Rational(0));
  for (std::size_t k = 0; k < c.size() && k < cc.size(); ++k) cc[k] = c[k];
  return Cyclotomic(order_, std::move(cc));
}

std::optional<int> Cyclotomic::root_of_unity_exponent() const {
  if (coeffs_.empty()) return std::nullopt;
  for (const auto& c : coeffs_)
    if (!c.is_integer()) return std::nullopt;
  const auto& f = CyclotomicField::get(order_);
  for (int e = 0; e < order_; ++e) {
    const auto& pw = f.power(e);
    bool match = true;
    for (int j = 0; j < f.degree() && match; ++j) match = coeffs_[j] == Rational(pw[j]);
    if (match) return e;
  }
  return std::nullopt;
}

std::string Cyclotomic::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const std::string zeta = "ζ" + std::to_string(order_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "·";
    os << zeta;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  if (b.coeffs_.empty()) return *this;
  if (coeffs_.empty()) return *this = b;
  if (order_ != b.order_) return *this = *this + b;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
  trim();
  return *this;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.coeffs_.empty()) return a;
  if (a.coeffs_.empty()) return b;
  if (a.order_ != b.order_) {
    const int n = static_cast<int>(lcm64(a.order_, b.order_));
    return a.lifted(n) + b.lifted(n);
  }
  Cyclotomic out = a;
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] += b.coeffs_[k];
  out.trim();
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Cyclotomic();
  Rational r;
  if (b.as_rational(&r)) {
    if (r.is_one()) return a;
    Cyclotomic out = a;
    for (auto& c : out.coeffs_) c *= r;
    return out;
  }
  if (a.as_rational(&r)) return b * a;
  if (a.order_ != b.order_) {
    const int n = static_cast<int>(lcm64(a.order_, b.order_));
    return a.lifted(n) * b.lifted(n);
  }
  const auto& f = CyclotomicField::get(a.order_);
  const int deg = f.degree();
  std::vector<Rational> t(2 * deg - 1, Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; j < deg; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      t[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  Cyclotomic::Coeffs c(t.begin(), t.begin() + deg);
  for (int e = deg; e < 2 * deg - 1; ++e) {
    if (t[e].is_zero()) continue;
    const auto& pw = f.power(e);
    for (int j = 0; j < deg; ++j)
      if (pw[j] != 0) c[j] += t[e] * Rational(pw[j]);
  }
  return Cyclotomic(a.order_, std::move(c));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return a.coeffs_.empty() && b.coeffs_.empty();
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const int n = static_cast<int>(lcm64(a.order_, b.order_));
  return a.lifted(n).coeffs_ == b.lifted(n).coeffs_;
}

}  // namespace zxv
