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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zxv/diagram.hpp"
#include "zxv/projector.hpp"

namespace zxv {

enum class Constraint { None, A };

struct Rule {
  std::string name;
  std::vector<std::string> vars;
  Diagram lhs;
  Diagram rhs;
  Constraint constraint = Constraint::None;
  /// Line of the `rule` header in the source file (0 for generated rules).
  std::size_t line = 0;
};

/// Parses a rule file. Throws ParseError (with position) or ArityMismatch.
std::vector<Rule> load_rules(const std::string& source);
std::vector<Rule> load_rules_file(const std::string& path);

Rule flipped(const Rule& r);
Rule color_swapped(const Rule& r);
/// Each rule followed by its flip, colour-swap and flip+colour-swap variants.
std::vector<Rule> with_closures(const std::vector<Rule>& rules);

/// Angles (alpha, beta, gamma, theta1, theta2, theta3) in radians.
using ATuple = std::array<double, 6>;
inline constexpr std::array<const char*, 6> kConstraintAVars = {"alpha",  "beta",   "gamma",
                                                                "theta1", "theta2", "theta3"};

/// |2 e^{i theta3} cos gamma - e^{i theta1} cos alpha - e^{i theta2} cos beta|
double constraint_A_residual(const ATuple& t);
/// Completes (alpha, beta, theta1, theta2) to a tuple satisfying the side condition.
ATuple solve_constraint_A(double alpha, double beta, double theta1, double theta2);
std::vector<ATuple> sample_constraint_A(std::size_t count, std::uint64_t seed);
/// Tuples whose residual is at least min_residual.
std::vector<ATuple> sample_violating_A(std::size_t count, std::uint64_t seed,
                                       double min_residual = 0.1);

struct Functor {
  std::int64_t k = 1;  // 1 is the standard interpretation
  static Functor standard() { return {}; }
  static Functor scaled(std::int64_t k) { return {k}; }
  std::string name() const;
};

struct RuleResult {
  std::string rule;
  bool sound = false;
  /// "exact" for decide_forall, "sampled" for constrained rules.
  std::string method;
  std::size_t samples = 0;
  std::optional<std::map<std::string, Angle>> counterexample;
  double discrepancy = 0.0;
};

struct SoundnessReport {
  Functor functor;
  std::vector<RuleResult> results;
  bool all_sound() const;
};

struct SoundnessOptions {
  std::size_t budget = 1000;
  std::uint64_t seed = 20260101;
  double tol = 1e-9;
};

SoundnessReport check_soundness(const std::vector<Rule>& rules, Functor functor,
                                const SoundnessOptions& options = {});

/// Max-abs difference of the two sides at an assignment under the functor.
double rule_discrepancy(const Rule& r, const std::map<std::string, Angle>& at, Functor functor);

struct FalsifyReport {
  std::string rule;
  std::size_t samples = 0;
  /// Violating tuples at which the two sides still agree (modeling errors).
  std::size_t false_sound = 0;
  std::optional<std::map<std::string, Angle>> first_false_sound;
  double min_discrepancy = 0.0;
  bool ok() const { return false_sound == 0; }
};

/// Every tuple violating the side condition by at least 0.1 must make the sides differ
/// by more than 1e-6 under the standard interpretation.
FalsifyReport falsify_constraint_A(const Rule& r, std::size_t count,
                                   std::uint64_t seed = 20260101);

struct IncompletenessReport {
  Diagram lhs;
  Diagram rhs;
  Cyclotomic std_lhs, std_rhs;
  Cyclotomic scaled_lhs, scaled_rhs;
  std::int64_t k = 9;
};

IncompletenessReport incompleteness_witness();

}  // namespace zxv
