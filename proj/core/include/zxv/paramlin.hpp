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
#include <string>
#include <vector>

#include "zxv/diagram.hpp"

namespace zxv {

/// Sum of positive coefficients of `var` over all spiders.
std::int64_t mu_plus(const Diagram& d, const std::string& var);
/// Sum of |negative coefficients| of `var` over all spiders.
std::int64_t mu_minus(const Diagram& d, const std::string& var);

struct MultiplicityReport {
  std::string var;
  std::int64_t mu_plus[2] = {0, 0};
  std::int64_t mu_minus[2] = {0, 0};
  /// max(mu_plus) + max(mu_minus)
  std::int64_t mu = 0;
};

MultiplicityReport multiplicity(const Diagram& d1, const Diagram& d2, const std::string& var);

/// r copies of the state Z[0,1](angle); entry e^{i|y|angle} at index y.
Diagram theta(std::size_t r, const PhaseExpr& angle);

/// Turns every input into an output placed to the left of the existing
/// outputs, in the same order: [[bend(d)]][x * 2^m + y] = [[d]][y][x].
Diagram bend_inputs(const Diagram& d);

/// Per-variable block of the extracted equation.
struct VarBlock {
  std::string var;
  std::size_t r = 0;
  std::int64_t mu_plus[2] = {0, 0};
  std::int64_t mu_minus[2] = {0, 0};
  /// Exponent of the e^{i c var} factor absorbed on each side.
  std::int64_t c[2] = {0, 0};
};

/// Variable-free equation r -> n+m equivalent to d1 = d2.
///
/// For both sides, [[prime[i] ; theta states]] = e^{i sum_v c_v[i] v} [[bend(d_i)]]
/// where the theta inputs are grouped by variable in block order.
struct ExtractionResult {
  Diagram prime[2];
  /// Same maps before bending: r + n -> m (theta wires first).
  Diagram open[2];
  std::vector<VarBlock> blocks;
  std::size_t inputs = 0;
  std::size_t outputs = 0;

  std::size_t r() const;
  std::vector<std::size_t> rs() const;
  /// Total exponent for side i when there is a single block.
  std::int64_t c(int side) const;
};

/// Single-variable extraction; any other variable present raises NonGroundDiagram.
ExtractionResult extract(const Diagram& d1, const Diagram& d2, const std::string& var);
/// Extraction for every listed variable (all variables of both sides when empty).
/// Variables with zero multiplicity are dropped.
ExtractionResult extract_multi(const Diagram& d1, const Diagram& d2,
                               std::vector<std::string> vars = {});

/// The theta tensor theta_{r_1}(v_1) ⊗ ... matching the block order of `res`.
Diagram theta_for(const ExtractionResult& res);

}  // namespace zxv
