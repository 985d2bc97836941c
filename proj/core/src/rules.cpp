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

#include "zxv/rules.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "zxv/dsl.hpp"
#include "zxv/errors.hpp"
#include "zxv/semantics.hpp"

namespace zxv {

namespace {

constexpr double kTwoPi = 6.283185307179586;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Pending {
  Rule rule;
  bool have_lhs = false, have_rhs = false;
};

void finish(std::optional<Pending>& p, std::vector<Rule>& out) {
  if (!p) return;
  const Rule& r = p->rule;
  if (!p->have_lhs || !p->have_rhs)
    throw ParseError("rule '" + r.name + "' needs both lhs: and rhs:", r.line, 1);
  if (r.lhs.inputs() != r.rhs.inputs() || r.lhs.outputs() != r.rhs.outputs())
    throw ArityMismatch("rule '" + r.name + "' (line " + std::to_string(r.line) + "): lhs is " +
                        std::to_string(r.lhs.inputs()) + "->" + std::to_string(r.lhs.outputs()) +
                        " but rhs is " + std::to_string(r.rhs.inputs()) + "->" +
                        std::to_string(r.rhs.outputs()));
  const std::set<std::string> declared(r.vars.begin(), r.vars.end());
  for (const Diagram* side : {&r.lhs, &r.rhs})
    for (const auto& v : variables(*side))
      if (!declared.count(v))
        throw ParseError("rule '" + r.name + "' uses undeclared variable '" + v + "'", r.line, 1);
  if (r.constraint == Constraint::A)
    for (const char* v : kConstraintAVars)
      if (!declared.count(v))
        throw ParseError("constraint A needs variable '" + std::string(v) + "'", r.line, 1);
  out.push_back(r);
  p.reset();
}

std::map<std::string, Angle> tuple_assignment(const ATuple& t) {
  std::map<std::string, Angle> a;
  for (std::size_t i = 0; i < t.size(); ++i) a[kConstraintAVars[i]] = Angle::from_radians(t[i]);
  return a;
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

}  // namespace

std::vector<Rule> load_rules(const std::string& source) {
  std::vector<Rule> out;
  std::optional<Pending> cur;
  std::set<std::string> names;
  std::istringstream in(source);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string text = hash == std::string::npos ? raw : raw.substr(0, hash);
    const std::string line = trim(text);
    if (line.empty()) {
      finish(cur, out);
      continue;
    }
    const std::size_t col = text.find_first_not_of(" \t\r") + 1;
    std::istringstream words(line);
    std::string key;
    words >> key;
    if (key == "rule") {
      finish(cur, out);
      std::string name, extra;
      if (!(words >> name)) throw ParseError("rule needs a name", lineno, col);
      if (words >> extra) throw ParseError("unexpected text after rule name", lineno, col);
      if (!names.insert(name).second)
        throw ParseError("duplicate rule name '" + name + "'", lineno, col);
      cur = Pending{};
      cur->rule.name = name;
      cur->rule.line = lineno;
      continue;
    }
    if (!cur) throw ParseError("expected 'rule <name>'", lineno, col);
    if (key == "vars") {
      std::string v;
      while (words >> v) {
        if (!std::isalpha(static_cast<unsigned char>(v[0])) || v == "pi")
          throw ParseError("bad variable name '" + v + "'", lineno, col);
        cur->rule.vars.push_back(v);
      }
    } else if (key == "constraint") {
      std::string tag;
      if (!(words >> tag) || tag != "A")
        throw ParseError("unknown constraint (only 'A' is built in)", lineno, col);
      cur->rule.constraint = Constraint::A;
    } else if (key.rfind("lhs:", 0) == 0 || key.rfind("rhs:", 0) == 0) {
      const bool lhs = key[0] == 'l';
      const std::size_t at = text.find(':') + 1;
      Diagram d = parse_zx(text.substr(at), {lineno, at + 1});
      if (lhs) {
        if (cur->have_lhs) throw ParseError("duplicate lhs:", lineno, col);
        cur->rule.lhs = d;
        cur->have_lhs = true;
      } else {
        if (cur->have_rhs) throw ParseError("duplicate rhs:", lineno, col);
        cur->rule.rhs = d;
        cur->have_rhs = true;
      }
    } else {
      throw ParseError("unknown directive '" + key + "'", lineno, col);
    }
  }
  finish(cur, out);
  return out;
}

std::vector<Rule> load_rules_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open rule file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load_rules(ss.str());
}

Rule flipped(const Rule& r) {
  Rule out = r;
  out.name = r.name + "^flip";
  out.lhs = flip(r.lhs);
  out.rhs = flip(r.rhs);
  return out;
}

Rule color_swapped(const Rule& r) {
  Rule out = r;
  out.name = r.name + "^color";
  out.lhs = color_swap(r.lhs);
  out.rhs = color_swap(r.rhs);
  return out;
}

std::vector<Rule> with_closures(const std::vector<Rule>& rules) {
  std::vector<Rule> out;
  for (const auto& r : rules) {
    out.push_back(r);
    out.push_back(flipped(r));
    out.push_back(color_swapped(r));
    Rule both = color_swapped(flipped(r));
    both.name = r.name + "^flip^color";
    out.push_back(both);
  }
  return out;
}

double constraint_A_residual(const ATuple& t) {
  using C = std::complex<double>;
  const C lhs = 2.0 * std::polar(1.0, t[5]) * std::cos(t[2]);
  const C rhs = std::polar(1.0, t[3]) * std::cos(t[0]) + std::polar(1.0, t[4]) * std::cos(t[1]);
  return std::abs(lhs - rhs);
}

ATuple solve_constraint_A(double alpha, double beta, double theta1, double theta2) {
  const std::complex<double> w =
      (std::polar(1.0, theta1) * std::cos(alpha) + std::polar(1.0, theta2) * std::cos(beta)) / 2.0;
  const double mag = std::min(1.0, std::abs(w));
  // arg is meaningless near w = 0 (cos(pi/2) is only ~6e-17 in floats); normalise to 0.
  // The residual stays below 4e-13 there.
  const double theta3 = mag < 1e-13 ? 0.0 : wrap_angle(std::arg(w));
  return {alpha, beta, std::acos(mag), theta1, theta2, theta3};
}

std::vector<ATuple> sample_constraint_A(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::vector<ATuple> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double a = u(rng), b = u(rng), t1 = u(rng), t2 = u(rng);
    out.push_back(solve_constraint_A(a, b, t1, t2));
  }
  return out;
}

std::vector<ATuple> sample_violating_A(std::size_t count, std::uint64_t seed,
                                       double min_residual) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::vector<ATuple> out;
  out.reserve(count);
  while (out.size() < count) {
    ATuple t;
    for (auto& x : t) x = u(rng);
    if (constraint_A_residual(t) >= min_residual) out.push_back(t);
  }
  return out;
}

std::string Functor::name() const { return k == 1 ? "std" : "scaled:" + std::to_string(k); }

bool SoundnessReport::all_sound() const {
  return std::all_of(results.begin(), results.end(), [](const RuleResult& r) { return r.sound; });
}

double rule_discrepancy(const Rule& r, const std::map<std::string, Angle>& at, Functor functor) {
  EvalOptions opts;
  opts.backend = Backend::Float;
  const Matrix a = interp_scaled(substitute(r.lhs, at), functor.k, opts);
  const Matrix b = interp_scaled(substitute(r.rhs, at), functor.k, opts);
  return max_abs_diff(a, b);
}

SoundnessReport check_soundness(const std::vector<Rule>& rules, Functor functor,
                                const SoundnessOptions& options) {
  if ((functor.k % 8 + 8) % 8 != 1) throw UnsupportedScale(functor.k);
  SoundnessReport report;
  report.functor = functor;
  for (std::size_t idx = 0; idx < rules.size(); ++idx) {
    const Rule& r = rules[idx];
    RuleResult res;
    res.rule = r.name;
    if (r.constraint == Constraint::None) {
      DecideOptions d;
      d.method = Method::Grid;
      d.scale = functor.k;
      const Verdict v = decide_forall(r.lhs, r.rhs, d);
      res.method = v.float_fallback ? "exact-grid(float)" : "exact";
      res.sound = v.holds;
      res.counterexample = v.witness;
      res.discrepancy = v.discrepancy;
    } else {
      res.method = "sampled";
      res.sound = true;
      // per-rule stream so that reports do not depend on rule order
      for (const ATuple& t : sample_constraint_A(options.budget, options.seed + idx)) {
        ++res.samples;
        const auto at = tuple_assignment(t);
        const double diff = rule_discrepancy(r, at, functor);
        if (diff > options.tol) {
          res.sound = false;
          res.counterexample = at;
          res.discrepancy = diff;
          break;
        }
      }
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

FalsifyReport falsify_constraint_A(const Rule& r, std::size_t count, std::uint64_t seed) {
  if (r.constraint != Constraint::A)
    throw Error("rule '" + r.name + "' has no constraint A tag");
  FalsifyReport rep;
  rep.rule = r.name;
  rep.min_discrepancy = INFINITY;
  for (const ATuple& t : sample_violating_A(count, seed)) {
    ++rep.samples;
    const auto at = tuple_assignment(t);
    const double diff = rule_discrepancy(r, at, Functor::standard());
    rep.min_discrepancy = std::min(rep.min_discrepancy, diff);
    if (diff <= 1e-6) {
      if (!rep.first_false_sound) rep.first_false_sound = at;
      ++rep.false_sound;
    }
  }
  return rep;
}

IncompletenessReport incompleteness_witness() {
  IncompletenessReport rep;
  rep.lhs = tensor(Diagram::z(0, 0, PhaseExpr(Rational(2, 3))),
                   Diagram::z(0, 0, PhaseExpr(Rational(4, 3))));
  // value 2 times value 1/2, all phases multiples of pi/4
  rep.rhs = tensor_all({Diagram::z(0, 0), inv_sqrt2_scalar(), inv_sqrt2_scalar()});
  auto scalar = [](const Diagram& d, std::int64_t k) { return interp_scaled(d, k).exact()(0, 0); };
  rep.std_lhs = scalar(rep.lhs, 1);
  rep.std_rhs = scalar(rep.rhs, 1);
  rep.scaled_lhs = scalar(rep.lhs, rep.k);
  rep.scaled_rhs = scalar(rep.rhs, rep.k);
  return rep;
}

}  // namespace zxv
