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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "generators.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "zxv/errors.hpp"
#include "zxv/rules.hpp"

namespace zxv {
namespace {

using testing::pi;
constexpr double kPi = std::numbers::pi;

std::string rules_path(const char* file) { return std::string(ZXV_RULES_DIR) + "/" + file; }

std::map<std::string, Angle> tuple_assignment(const ATuple& t) {
  std::map<std::string, Angle> at;
  for (std::size_t i = 0; i < t.size(); ++i) at[kConstraintAVars[i]] = Angle::from_radians(t[i]);
  return at;
}

// independent re-evaluation through the Eigen oracle
double oracle_gap(const Rule& r, const std::map<std::string, Angle>& at, std::int64_t k) {
  return testing::max_abs(testing::oracle(substitute(r.lhs, at), static_cast<double>(k)),
                          testing::oracle(substitute(r.rhs, at), static_cast<double>(k)));
}

const Rule& find(const std::vector<Rule>& rules, const std::string& name) {
  for (const auto& r : rules)
    if (r.name == name) return r;
  throw std::runtime_error("no rule " + name);
}

TEST(LoadRules, SpiderFusion) {
  const auto rules = load_rules(
      "# fusion\n"
      "rule S1\n"
      "vars a b\n"
      "lhs: Z[2,1](a) ; Z[1,2](b)\n"
      "rhs: Z[2,2](a + b)\n");
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0].name, "S1");
  EXPECT_EQ(rules[0].vars, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(rules[0].constraint, Constraint::None);
  EXPECT_EQ(rules[0].line, 2u);
  EXPECT_EQ(rules[0].lhs.inputs(), 2u);
}

TEST(LoadRules, ConstraintTag) {
  const auto rules = load_rules(
      "rule A\n"
      "vars alpha beta gamma theta1 theta2 theta3\n"
      "constraint A\n"
      "lhs: Z[0,1](alpha + beta + theta1 + theta2)\n"
      "rhs: Z[0,1](gamma + theta3)\n"
      "\n"
      "rule B\n"
      "lhs: H ; H\n"
      "rhs: id\n");
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[0].constraint, Constraint::A);
  EXPECT_TRUE(rules[1].vars.empty());
}

TEST(LoadRules, Errors) {
  EXPECT_THROW(load_rules("rule X\nvars a\nlhs: Z[1,1](2.5a)\nrhs: id\n"), ParseError);
  EXPECT_THROW(load_rules("rule X\nvars a\nlhs: Z[1,1](2.5a)\nrhs: id\n"), NonLinearPhase);
  EXPECT_THROW(load_rules("rule X\nlhs: Z[1,2]\nrhs: id\n"), ArityMismatch);
  EXPECT_THROW(load_rules("rule X\nvars a\nlhs: Z[1,1](b)\nrhs: id\n"), ParseError);
  EXPECT_THROW(load_rules("rule X\nvars a\nconstraint A\nlhs: id\nrhs: id\n"), ParseError);
  EXPECT_THROW(load_rules("rule X\nlhs: id\n"), ParseError);
  EXPECT_THROW(load_rules("rule X\nlhs: id\nrhs: id\n\nrule X\nlhs: id\nrhs: id\n"), ParseError);
  EXPECT_THROW(load_rules("frobnicate\n"), ParseError);
  try {
    load_rules("rule X\nvars a\n\nlhs: Z[1,1](2.5a)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);  // rule X closes without an lhs
  }
}

TEST(LoadRules, ShippedFiles) {
  const auto ct = load_rules_file(rules_path("clifford_t.rules"));
  const auto zxc = load_rules_file(rules_path("zxc.rules"));
  EXPECT_GE(ct.size(), 11u);
  EXPECT_EQ(zxc.size(), ct.size() + 1);
  EXPECT_EQ(find(zxc, "A").constraint, Constraint::A);
  EXPECT_THROW(load_rules_file(rules_path("missing.rules")), Error);
}

TEST(Closures, FlipIsTransposeAndColourIsHConjugation) {
  const auto rules = load_rules_file(rules_path("clifford_t.rules"));
  const Rule& s1 = find(rules, "S1");
  const Rule f = flipped(s1), c = color_swapped(s1);
  EXPECT_EQ(f.name, "S1^flip");
  EXPECT_EQ(c.name, "S1^color");
  EXPECT_EQ(f.lhs.inputs(), s1.lhs.outputs());
  EXPECT_EQ(with_closures(rules).size(), 4 * rules.size());
}

TEST(Closures, SoundUnderStandard) {
  const auto rules = with_closures(load_rules_file(rules_path("clifford_t.rules")));
  const auto report = check_soundness(rules, Functor::standard());
  for (const auto& r : report.results) EXPECT_TRUE(r.sound) << r.rule;
}

TEST(ConstraintA, Examples) {
  const ATuple t0 = solve_constraint_A(0, 0, 0, 0);
  EXPECT_NEAR(t0[2], 0, 1e-12);  // gamma
  EXPECT_NEAR(t0[5], 0, 1e-12);  // theta3
  const ATuple t1 = solve_constraint_A(kPi / 2, kPi / 2, 0.3, 1.9);
  EXPECT_NEAR(t1[2], kPi / 2, 1e-12);
  EXPECT_EQ(t1[5], 0.0);
  EXPECT_LE(constraint_A_residual(t1), 1e-12);
}

TEST(ConstraintA, SamplesSatisfyTheCondition) {
  const auto samples = sample_constraint_A(2000, 7);
  ASSERT_EQ(samples.size(), 2000u);
  for (const auto& t : samples) {
    // recomputed here rather than through constraint_A_residual
    const std::complex<double> lhs = 2.0 * std::polar(1.0, t[5]) * std::cos(t[2]);
    const std::complex<double> rhs = std::polar(1.0, t[3]) * std::cos(t[0]) + std::polar(1.0, t[4]) * std::cos(t[1]);
    ASSERT_LE(std::abs(lhs - rhs), 1e-12);
  }
  EXPECT_EQ(sample_constraint_A(5, 11), sample_constraint_A(5, 11));
}

TEST(ConstraintA, ViolatingSamples) {
  for (const auto& t : sample_violating_A(500, 3)) EXPECT_GE(constraint_A_residual(t), 0.1);
}

TEST(Soundness, CliffordTUnderBothFunctors) {
  const auto rules = load_rules_file(rules_path("clifford_t.rules"));
  for (const Functor f : {Functor::standard(), Functor::scaled(9)}) {
    const auto report = check_soundness(rules, f);
    EXPECT_TRUE(report.all_sound()) << f.name();
    for (const auto& r : report.results) {
      EXPECT_TRUE(r.sound) << r.rule << " " << f.name();
      EXPECT_EQ(r.method.rfind("exact", 0), 0u);
    }
  }
}

TEST(Soundness, ARuleSoundUnderStandardOnly) {
  const auto rules = load_rules_file(rules_path("zxc.rules"));
  const std::vector<Rule> a{find(rules, "A")};
  SoundnessOptions o;
  o.budget = 300;
  const auto std_report = check_soundness(a, Functor::standard(), o);
  ASSERT_EQ(std_report.results.size(), 1u);
  EXPECT_TRUE(std_report.results[0].sound);
  EXPECT_EQ(std_report.results[0].method, "sampled");
  EXPECT_EQ(std_report.results[0].samples, 300u);

  const auto scaled = check_soundness(a, Functor::scaled(9), o);
  const RuleResult& res = scaled.results[0];
  EXPECT_FALSE(res.sound);
  ASSERT_TRUE(res.counterexample);
  EXPECT_GT(res.discrepancy, 1e-9);
  EXPECT_GT(oracle_gap(a[0], *res.counterexample, 9), 1e-9);
  EXPECT_NEAR(rule_discrepancy(a[0], *res.counterexample, Functor::scaled(9)), res.discrepancy, 1e-9);
}

TEST(Soundness, FailingInstancesReverify) {
  // deliberately wrong rules; every counterexample must show a real discrepancy
  const auto rules = load_rules(
      "rule bad1\nvars a\nlhs: Z[1,1](a)\nrhs: Z[1,1](-a)\n\n"
      "rule bad2\nlhs: H\nrhs: id\n\n"
      "rule bad3\nvars a b\nlhs: Z[1,1](a) ; X[1,1](b)\nrhs: X[1,1](b) ; Z[1,1](a)\n");
  const auto report = check_soundness(rules, Functor::standard());
  ASSERT_EQ(report.results.size(), 3u);
  for (const auto& r : report.results) {
    EXPECT_FALSE(r.sound) << r.rule;
    ASSERT_TRUE(r.counterexample) << r.rule;
    EXPECT_GT(oracle_gap(find(rules, r.rule), *r.counterexample, 1), 1e-9) << r.rule;
  }
}

TEST(Soundness, RejectsUnsupportedScale) {
  EXPECT_THROW(check_soundness({}, Functor::scaled(2)), UnsupportedScale);
  EXPECT_THROW(check_soundness({}, Functor::scaled(5)), UnsupportedScale);
  EXPECT_EQ(Functor::scaled(9).name(), "scaled:9");
  EXPECT_EQ(Functor::standard().name(), "std");
}

TEST(Soundness, ScaledFunctorFixesPi4Instances) {
  const auto rules = load_rules_file(rules_path("clifford_t.rules"));
  testing::Rng rng(17);
  for (const auto& r : rules) {
    for (int it = 0; it < 5; ++it) {
      std::map<std::string, Angle> at;
      for (const auto& v : r.vars) at[v] = testing::pi_angle(testing::uniform_int(rng, 0, 7), 4);
      for (const Diagram* side : {&r.lhs, &r.rhs}) {
        const Diagram g = substitute(*side, at);
        EXPECT_EQ(interp_scaled(g, 9).exact(), interp_exact(g)) << r.name;
      }
    }
  }
}

TEST(Falsify, ARuleContentIsTheSideCondition) {
  const auto rules = load_rules_file(rules_path("zxc.rules"));
  const Rule& a = find(rules, "A");
  const auto report = falsify_constraint_A(a, 1000);
  EXPECT_EQ(report.samples, 1000u);
  EXPECT_TRUE(report.ok()) << report.false_sound;
  EXPECT_GT(report.min_discrepancy, 1e-6);

  // gamma perturbed by 0.5 from a satisfying tuple
  ATuple t = solve_constraint_A(0.4, 1.1, 2.0, -0.7);
  EXPECT_LT(rule_discrepancy(a, tuple_assignment(t), Functor::standard()), 1e-9);
  t[2] += 0.5;
  EXPECT_GT(rule_discrepancy(a, tuple_assignment(t), Functor::standard()), 1e-6);
  EXPECT_GT(oracle_gap(a, tuple_assignment(t), 1), 1e-6);
  EXPECT_THROW(falsify_constraint_A(find(rules, "S1"), 10), Error);
}

TEST(Incompleteness, Witness) {
  const auto w = incompleteness_witness();
  EXPECT_EQ(w.k, 9);
  EXPECT_EQ(w.std_lhs, Cyclotomic(1));
  EXPECT_EQ(w.std_rhs, Cyclotomic(1));
  EXPECT_EQ(w.scaled_lhs, Cyclotomic(4));
  EXPECT_EQ(w.scaled_rhs, Cyclotomic(1));
  // independent recomputation
  EXPECT_NEAR(std::abs(testing::oracle(w.lhs)(0, 0) - 1.0), 0, 1e-12);
  EXPECT_NEAR(std::abs(testing::oracle(w.lhs, 9)(0, 0) - 4.0), 0, 1e-12);
  EXPECT_NEAR(std::abs(testing::oracle(w.rhs, 9)(0, 0) - 1.0), 0, 1e-12);
  EXPECT_EQ(interp_exact(w.lhs)(0, 0), (1 + testing::e_i_pi(2, 3)) * (1 + testing::e_i_pi(4, 3)));
}

}  // namespace
}  // namespace zxv
