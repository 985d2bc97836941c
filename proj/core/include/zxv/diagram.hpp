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

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "zxv/phase.hpp"

namespace zxv {

enum class Kind { Z, X, H, Id, Swap, Cup, Cap, Empty, Triangle, Seq, Tensor };

const char* kind_name(Kind k);

/// Immutable ZX term. Copies share structure.
///
/// Seq(a, b) feeds the outputs of a into the inputs of b. Tensor(a, b) places
/// a to the left of b; a's wires are the more significant bits.
class Diagram {
 public:
  Diagram();  // Empty

  static Diagram z(std::size_t n, std::size_t m, PhaseExpr phase = {});
  static Diagram x(std::size_t n, std::size_t m, PhaseExpr phase = {});
  static Diagram spider(Kind kind, std::size_t n, std::size_t m, PhaseExpr phase = {});
  static Diagram h();
  static Diagram id();
  static Diagram swap();
  /// 2 -> 0 effect (1,0,0,1).
  static Diagram cup();
  /// 0 -> 2 state (1,0,0,1).
  static Diagram cap();
  static Diagram empty();
  /// 1 -> 1 sugar with interpretation [[1,1],[0,1]].
  static Diagram triangle();

  Kind kind() const;
  std::size_t inputs() const;
  std::size_t outputs() const;
  bool is_spider() const { return kind() == Kind::Z || kind() == Kind::X; }
  bool is_generator() const { return kind() != Kind::Seq && kind() != Kind::Tensor; }
  /// Phase of a spider (zero for other nodes).
  const PhaseExpr& phase() const;
  /// Children of Seq (first, second) or Tensor (left, right).
  const Diagram& first() const;
  const Diagram& second() const;

  /// Number of nodes in the term tree.
  std::size_t size() const;
  /// Built only from id, swap, empty and compositions: a pure wire permutation.
  bool is_wiring() const;

  friend bool operator==(const Diagram& a, const Diagram& b);
  friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }

 /// Opaque term node (defined in the implementation).
  struct Node;

 private:
  explicit Diagram(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend Diagram seq(const Diagram& a, const Diagram& b);
  friend Diagram tensor(const Diagram& a, const Diagram& b);

  std::shared_ptr<const Node> node_;
};

/// Sequential composition; throws ArityMismatch when outputs(a) != inputs(b).
Diagram seq(const Diagram& a, const Diagram& b);
Diagram tensor(const Diagram& a, const Diagram& b);
Diagram seq_all(const std::vector<Diagram>& parts);
Diagram tensor_all(const std::vector<Diagram>& parts);
Diagram tensor_power(const Diagram& d, std::size_t r);
Diagram id_n(std::size_t n);

/// Wire permutation n -> n sending input i to output perm[i], built from swaps.
Diagram permutation(const std::vector<std::size_t>& perm);
/// For a wiring diagram, the output position of every input wire.
std::vector<std::size_t> wiring_permutation(const Diagram& d);

std::set<std::string> variables(const Diagram& d);
bool is_ground(const Diagram& d);
/// Every phase lies in the pi/4 fragment and the term is ground.
bool in_pi4_fragment(const Diagram& d);

/// Rebuilds d with every spider phase passed through f.
template <typename F>
Diagram map_phases(const Diagram& d, F f);

Diagram substitute(const Diagram& d, const std::map<std::string, Angle>& assignment,
                   bool require_all = true);
/// Multiplies every phase (variables and constants) by k.
Diagram scale_phases(const Diagram& d, std::int64_t k);
/// Multiplies only the constant parts of phases by k.
Diagram scale_constants(const Diagram& d, std::int64_t k);
Diagram rename_variable(const Diagram& d, const std::string& from, const std::string& to);

/// Upside-down reflection: the interpretation is transposed.
Diagram flip(const Diagram& d);
/// Exchanges Z and X spiders; the interpretation is conjugated by H on every wire.
Diagram color_swap(const Diagram& d);

/// The triangle written in core generators with pi/4 phases.
Diagram triangle_expansion();
/// Replaces every triangle node by triangle_expansion().
Diagram expand_triangles(const Diagram& d);

/// Scalar gadgets in the pi/4 fragment.
Diagram sqrt2_scalar();      // value sqrt(2)
Diagram inv_sqrt2_scalar();  // value 1/sqrt(2)
/// X[1,0](pi) after Z[0,1](phase): value sqrt(2) e^{i phase}.
Diagram sqrt2_phase_scalar(const PhaseExpr& phase);

// ---------------------------------------------------------------------------

template <typename F>
Diagram map_phases(const Diagram& d, F f) {
  switch (d.kind()) {
    case Kind::Z:
    case Kind::X:
      return Diagram::spider(d.kind(), d.inputs(), d.outputs(), f(d.phase()));
    case Kind::Seq:
      return seq(map_phases(d.first(), f), map_phases(d.second(), f));
    case Kind::Tensor:
      return tensor(map_phases(d.first(), f), map_phases(d.second(), f));
    default:
      return d;
  }
}

}  // namespace zxv
