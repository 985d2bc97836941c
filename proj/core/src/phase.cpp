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

#include "zxv/phase.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "zxv/errors.hpp"

namespace zxv {

double Angle::value() const { return pi_multiple.to_double() * M_PI + radians; }

std::string Angle::to_string() const {
  if (radians == 0.0) return format_pi_multiple(pi_multiple);
  if (pi_multiple.is_zero()) return format_radians(radians);
  return format_pi_multiple(pi_multiple) + (radians < 0 ? " - " : " + ") +
         format_radians(std::abs(radians));
}

PhaseExpr PhaseExpr::radians(double r) {
  PhaseExpr p;
  p.irr_ = r;
  return p;
}

PhaseExpr PhaseExpr::variable(const std::string& name, std::int64_t coeff) {
  PhaseExpr p;
  if (coeff != 0) p.coeffs_[name] = coeff;
  return p;
}

PhaseExpr PhaseExpr::from_angle(const Angle& a) {
  PhaseExpr p(a.pi_multiple);
  p.irr_ = a.radians;
  return p;
}

std::int64_t PhaseExpr::coefficient(const std::string& var) const {
  auto it = coeffs_.find(var);
  return it == coeffs_.end() ? 0 : it->second;
}

bool PhaseExpr::constants_in_pi4() const {
  return irr_ == 0.0 && pi_.is_small() && (pi_.den() == 1 || pi_.den() == 2 || pi_.den() == 4);
}

bool PhaseExpr::in_pi4_fragment() const { return coeffs_.empty() && constants_in_pi4(); }

double PhaseExpr::value() const {
  if (!coeffs_.empty()) throw NonGroundDiagram("phase " + to_string() + " has variables");
  return pi_.to_double() * M_PI + irr_;
}

std::set<std::string> PhaseExpr::variables() const {
  std::set<std::string> out;
  for (const auto& [v, c] : coeffs_) out.insert(v);
  return out;
}

PhaseExpr PhaseExpr::scaled(std::int64_t k) const {
  PhaseExpr p;
  if (k == 0) return p;
  for (const auto& [v, c] : coeffs_) p.coeffs_[v] = c * k;
  p.pi_ = pi_ * Rational(k);
  p.irr_ = irr_ * static_cast<double>(k);
  return p;
}

PhaseExpr PhaseExpr::scaled_constants(std::int64_t k) const {
  PhaseExpr p = *this;
  p.pi_ = pi_ * Rational(k);
  p.irr_ = irr_ * static_cast<double>(k);
  return p;
}

PhaseExpr PhaseExpr::without_var(const std::string& var) const {
  PhaseExpr p = *this;
  p.coeffs_.erase(var);
  return p;
}

PhaseExpr PhaseExpr::constant_part() const {
  PhaseExpr p(pi_);
  p.irr_ = irr_;
  return p;
}

PhaseExpr PhaseExpr::substitute(const std::map<std::string, Angle>& assignment,
                                bool require_all) const {
  PhaseExpr p = constant_part();
  for (const auto& [v, c] : coeffs_) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      if (require_all) throw UnboundVariable(v);
      p.coeffs_[v] = c;
      continue;
    }
    p.pi_ += it->second.pi_multiple * Rational(c);
    p.irr_ += it->second.radians * static_cast<double>(c);
  }
  return p;
}

PhaseExpr PhaseExpr::renamed(const std::string& from, const std::string& to) const {
  auto it = coeffs_.find(from);
  if (it == coeffs_.end() || from == to) return *this;
  PhaseExpr p = without_var(from);
  return p + variable(to, it->second);
}

std::string format_pi_multiple(const Rational& r) {
  if (r.is_zero()) return "0";
  if (r == Rational(1)) return "pi";
  if (r == Rational(-1)) return "-pi";
  return r.to_string() + " pi";
}

std::string format_radians(double r) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", r);
  return std::string(buf) + "r";
}

std::string PhaseExpr::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](bool negative, const std::string& body) {
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    os << body;
    first = false;
  };
  for (const auto& [v, c] : coeffs_) {
    const std::int64_t mag = c < 0 ? -c : c;
    emit(c < 0, (mag == 1 ? "" : std::to_string(mag)) + v);
  }
  if (!pi_.is_zero()) emit(pi_.sign() < 0, format_pi_multiple(pi_.sign() < 0 ? -pi_ : pi_));
  if (irr_ != 0.0) emit(irr_ < 0, format_radians(std::abs(irr_)));
  if (first) return "0";
  return os.str();
}

PhaseExpr PhaseExpr::operator-() const { return scaled(-1); }

PhaseExpr operator+(const PhaseExpr& a, const PhaseExpr& b) {
  PhaseExpr p = a;
  for (const auto& [v, c] : b.coeffs_) {
    const std::int64_t s = p.coefficient(v) + c;
    if (s == 0)
      p.coeffs_.erase(v);
    else
      p.coeffs_[v] = s;
  }
  p.pi_ += b.pi_;
  p.irr_ += b.irr_;
  return p;
}

}  // namespace zxv
