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

#include <ostream>
#include <string>
#include <vector>

#include "zxv/cyclotomic.hpp"
#include "zxv/dense_matrix.hpp"
#include "zxv/phase.hpp"

namespace zxv::testing {

inline PhaseExpr pi(std::int64_t p, std::int64_t q = 1) { return PhaseExpr(Rational(p, q)); }
inline PhaseExpr var(const std::string& v, std::int64_t c = 1) { return PhaseExpr::variable(v, c); }
inline Angle pi_angle(std::int64_t p, std::int64_t q = 1) { return Angle::pi_times(Rational(p, q)); }

inline ExactMatrix exact(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries) {
  return ExactMatrix(rows, cols, std::move(entries));
}

inline Cyclotomic e_i_pi(std::int64_t p, std::int64_t q) { return Cyclotomic::exp_i_pi(Rational(p, q)); }

}  // namespace zxv::testing

namespace zxv {
// readable gtest failure messages
inline void PrintTo(const ExactMatrix& m, std::ostream* os) { *os << "\n" << to_string(m); }
inline void PrintTo(const Cyclotomic& c, std::ostream* os) { *os << c.to_string(); }
}  // namespace zxv
