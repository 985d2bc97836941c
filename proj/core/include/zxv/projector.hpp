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
#include <optional>
#include <string>
#include <vector>

#include "zxv/paramlin.hpp"
#include "zxv/semantics.hpp"

namespace zxv {

/// The 4x4 projector onto span{theta_2(a)}.
ExactMatrix r_matrix();
/// Closed form of the projector P_r: M[y][x] = 1 iff x = 1^{|y|} 0^{r-|y|}. Requires r >= 2.
ExactMatrix p_matrix(std::size_t r);
/// Same closed form for any r >= 0 (r = 0 is [1], r = 1 the identity).
ExactMatrix p_matrix_any(std::size_t r);
/// P_{r_1} ⊗ ... ⊗ P_{r_k}.
ExactMatrix p_matrix_multi(const std::vector<std::size_t>& rs);

/// Exact column vector of theta_r at a rational multiple of pi.
ExactMatrix theta_vector(std::size_t r, const Rational& pi_multiple);
/// theta_r(j pi / r) for j = 0..r.
std::vector<ExactMatrix> vandermonde_basis(std::size_t r);

enum class Method { Grid, Projector, Both };
const char* method_name(Method m);

struct DecideOptions {
  Method method = Method::Both;
  /// Angle scale of the interpretation functor (1 = standard).
  std::int64_t scale = 1;
  /// Tolerance used only when the grid had to fall back to floats.
  double float_tol = 1e-9;
};

struct Verdict {
  bool holds = false;
  Method method = Method::Both;
  std::optional<std::map<std::string, Angle>> witness;
  /// Max-abs discrepancy at the witness.
  double discrepancy = 0.0;
  std::map<std::string, std::int64_t> mu;
  /// The grid was evaluated in floats because the exact order cap was exceeded.
  bool float_fallback = false;
  std::optional<bool> grid_holds;
  std::optional<bool> projector_holds;
  bool methods_agree() const {
    return !grid_holds || !projector_holds || *grid_holds == *projector_holds;
  }
};

/// Decides whether d1(a) = d2(a) for all real values of the variables, for
/// equations linear in the variables with constants in (pi/4)Z.
Verdict decide_forall(const Diagram& d1, const Diagram& d2, const DecideOptions& options = {});

struct Port {
  enum class Side { Input, Output };
  Side side;
  std::size_t index;
};

/// Plugs sqrt(2)|j> into an input, or the effect sqrt(2)<j| onto an output, via an X spider.
Diagram plug_basis(const Diagram& d, Port port, int j);

/// Q_tau: output row y takes row x with y_i = x_{tau(i)}.
ExactMatrix permute_qubits(const ExactMatrix& m, const std::vector<std::size_t>& tau);
FloatMatrix permute_qubits(const FloatMatrix& m, const std::vector<std::size_t>& tau);
Matrix permute_qubits(const Matrix& m, const std::vector<std::size_t>& tau);

/// True iff the state 0 -> r is invariant under every wire permutation.
bool is_symmetric(const Diagram& d, double tol = 1e-9);

struct SymmetricCheck {
  /// d1 ; theta_r(a) = d2 ; theta_r(a) for all a.
  Verdict premise;
  /// [[d ; d1]] = [[d ; d2]].
  bool conclusion = false;
  double conclusion_discrepancy = 0.0;
  bool consistent() const { return !premise.holds || conclusion; }
};

/// Checks the instance "theta-test passes => composing with the symmetric state d agrees".
SymmetricCheck check_symmetric_substitution(const Diagram& d1, const Diagram& d2,
                                            const Diagram& d, double tol = 1e-9);

}  // namespace zxv
