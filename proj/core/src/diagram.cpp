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

#include "zxv/diagram.hpp"

#include <algorithm>
#include <optional>

#include "zxv/errors.hpp"

namespace zxv {

struct Diagram::Node {
  Kind kind;
  std::size_t n = 0, m = 0;
  PhaseExpr phase;
  std::optional<Diagram> a, b;
  std::size_t size = 1;
  bool wiring = false;
};

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Z: return "Z";
    case Kind::X: return "X";
    case Kind::H: return "H";
    case Kind::Id: return "id";
    case Kind::Swap: return "swap";
    case Kind::Cup: return "cup";
    case Kind::Cap: return "cap";
    case Kind::Empty: return "empty";
    case Kind::Triangle: return "T";
    case Kind::Seq: return "seq";
    case Kind::Tensor: return "tensor";
  }
  return "?";
}

namespace {

std::shared_ptr<const Diagram::Node> leaf(Kind k, std::size_t n, std::size_t m) {
  auto node = std::make_shared<Diagram::Node>();
  node->kind = k;
  node->n = n;
  node->m = m;
  node->wiring = k == Kind::Id || k == Kind::Swap || k == Kind::Empty;
  return node;
}

}  // namespace

Diagram::Diagram() {
  static const auto empty_node = leaf(Kind::Empty, 0, 0);
  node_ = empty_node;
}

Diagram Diagram::spider(Kind kind, std::size_t n, std::size_t m, PhaseExpr phase) {
  if (kind != Kind::Z && kind != Kind::X) throw Error("spider kind must be Z or X");
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->n = n;
  node->m = m;
  node->phase = std::move(phase);
  return Diagram(std::move(node));
}

Diagram Diagram::z(std::size_t n, std::size_t m, PhaseExpr phase) {
  return spider(Kind::Z, n, m, std::move(phase));
}
Diagram Diagram::x(std::size_t n, std::size_t m, PhaseExpr phase) {
  return spider(Kind::X, n, m, std::move(phase));
}

#define ZXV_LEAF(fn, K, N, M)                    \
  Diagram Diagram::fn() {                        \
    static const auto node = leaf(Kind::K, N, M); \
    return Diagram(node);                        \
  }
ZXV_LEAF(h, H, 1, 1)
ZXV_LEAF(id, Id, 1, 1)
ZXV_LEAF(swap, Swap, 2, 2)
ZXV_LEAF(cup, Cup, 2, 0)
ZXV_LEAF(cap, Cap, 0, 2)
ZXV_LEAF(empty, Empty, 0, 0)
ZXV_LEAF(triangle, Triangle, 1, 1)
#undef ZXV_LEAF

Kind Diagram::kind() const { return node_->kind; }
std::size_t Diagram::inputs() const { return node_->n; }
std::size_t Diagram::outputs() const { return node_->m; }
const PhaseExpr& Diagram::phase() const { return node_->phase; }
std::size_t Diagram::size() const { return node_->size; }
bool Diagram::is_wiring() const { return node_->wiring; }

const Diagram& Diagram::first() const {
  if (!node_->a) throw Error(std::string("node '") + kind_name(kind()) + "' has no children");
  return *node_->a;
}

const Diagram& Diagram::second() const {
  if (!node_->b) throw Error(std::string("node '") + kind_name(kind()) + "' has no children");
  return *node_->b;
}

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.inputs() != b.inputs() || a.outputs() != b.outputs() ||
      a.size() != b.size())
    return false;
  switch (a.kind()) {
    case Kind::Z:
    case Kind::X:
      return a.phase() == b.phase();
    case Kind::Seq:
    case Kind::Tensor:
      return a.first() == b.first() && a.second() == b.second();
    default:
      return true;
  }
}

Diagram seq(const Diagram& a, const Diagram& b) {
  if (a.outputs() != b.inputs()) throw ArityMismatch(a.outputs(), b.inputs(), "seq");
  auto node = std::make_shared<Diagram::Node>();
  node->kind = Kind::Seq;
  node->n = a.inputs();
  node->m = b.outputs();
  node->a = a;
  node->b = b;
  node->size = 1 + a.size() + b.size();
  node->wiring = a.is_wiring() && b.is_wiring();
  return Diagram(std::move(node));
}

Diagram tensor(const Diagram& a, const Diagram& b) {
  auto node = std::make_shared<Diagram::Node>();
  node->kind = Kind::Tensor;
  node->n = a.inputs() + b.inputs();
  node->m = a.outputs() + b.outputs();
  node->a = a;
  node->b = b;
  node->size = 1 + a.size() + b.size();
  node->wiring = a.is_wiring() && b.is_wiring();
  return Diagram(std::move(node));
}

Diagram seq_all(const std::vector<Diagram>& parts) {
  if (parts.empty()) throw Error("seq_all needs at least one diagram");
  Diagram d = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) d = seq(d, parts[i]);
  return d;
}

Diagram tensor_all(const std::vector<Diagram>& parts) {
  if (parts.empty()) return Diagram::empty();
  Diagram d = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) d = tensor(d, parts[i]);
  return d;
}

Diagram tensor_power(const Diagram& d, std::size_t r) {
  return tensor_all(std::vector<Diagram>(r, d));
}

Diagram id_n(std::size_t n) { return tensor_power(Diagram::id(), n); }

Diagram permutation(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw Error("permutation: not a bijection");
    seen[p] = true;
  }
  // Bubble sort the wires by target position, one adjacent swap per layer.
  std::vector<std::size_t> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = i;
  std::vector<Diagram> layers;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (perm[cur[j]] > perm[cur[j + 1]]) {
        std::swap(cur[j], cur[j + 1]);
        layers.push_back(tensor_all({id_n(j), Diagram::swap(), id_n(n - j - 2)}));
        changed = true;
      }
    }
  }
  if (layers.empty()) return id_n(n);
  return seq_all(layers);
}

std::vector<std::size_t> wiring_permutation(const Diagram& d) {
  switch (d.kind()) {
    case Kind::Id:
      return {0};
    case Kind::Swap:
      return {1, 0};
    case Kind::Empty:
      return {};
    case Kind::Tensor: {
      auto p = wiring_permutation(d.first());
      const std::size_t shift = d.first().outputs();
      for (auto q : wiring_permutation(d.second())) p.push_back(q + shift);
      return p;
    }
    case Kind::Seq: {
      auto pa = wiring_permutation(d.first());
      const auto pb = wiring_permutation(d.second());
      for (auto& q : pa) q = pb[q];
      return pa;
    }
    default:
      throw Error("wiring_permutation: diagram is not a wire permutation");
  }
}

namespace {

void collect_vars(const Diagram& d, std::set<std::string>& out) {
  switch (d.kind()) {
    case Kind::Z:
    case Kind::X:
      for (const auto& [v, c] : d.phase().coeffs()) out.insert(v);
      break;
    case Kind::Seq:
    case Kind::Tensor:
      collect_vars(d.first(), out);
      collect_vars(d.second(), out);
      break;
    default:
      break;
  }
}

template <typename Pred>
bool all_phases(const Diagram& d, Pred p) {
  switch (d.kind()) {
    case Kind::Z:
    case Kind::X:
      return p(d.phase());
    case Kind::Seq:
    case Kind::Tensor:
      return all_phases(d.first(), p) && all_phases(d.second(), p);
    default:
      return true;
  }
}

}  // namespace

std::set<std::string> variables(const Diagram& d) {
  std::set<std::string> out;
  collect_vars(d, out);
  return out;
}

bool is_ground(const Diagram& d) {
  return all_phases(d, [](const PhaseExpr& p) { return p.ground(); });
}

bool in_pi4_fragment(const Diagram& d) {
  return all_phases(d, [](const PhaseExpr& p) { return p.in_pi4_fragment(); });
}

Diagram substitute(const Diagram& d, const std::map<std::string, Angle>& assignment,
                   bool require_all) {
  return map_phases(d, [&](const PhaseExpr& p) { return p.substitute(assignment, require_all); });
}

Diagram scale_phases(const Diagram& d, std::int64_t k) {
  return map_phases(d, [k](const PhaseExpr& p) { return p.scaled(k); });
}

Diagram scale_constants(const Diagram& d, std::int64_t k) {
  return map_phases(d, [k](const PhaseExpr& p) { return p.scaled_constants(k); });
}

Diagram rename_variable(const Diagram& d, const std::string& from, const std::string& to) {
  return map_phases(d, [&](const PhaseExpr& p) { return p.renamed(from, to); });
}

Diagram flip(const Diagram& d) {
  switch (d.kind()) {
    case Kind::Z:
    case Kind::X:
      return Diagram::spider(d.kind(), d.outputs(), d.inputs(), d.phase());
    case Kind::Cup:
      return Diagram::cap();
    case Kind::Cap:
      return Diagram::cup();
    case Kind::Triangle:
      // transpose via a snake: (id ⊗ cap) ; (id ⊗ T ⊗ id) ; (cup ⊗ id)
      return seq_all({tensor(Diagram::id(), Diagram::cap()),
                      tensor_all({Diagram::id(), Diagram::triangle(), Diagram::id()}),
                      tensor(Diagram::cup(), Diagram::id())});
    case Kind::Seq:
      return seq(flip(d.second()), flip(d.first()));
    case Kind::Tensor:
      return tensor(flip(d.first()), flip(d.second()));
    default:
      return d;
  }
}

Diagram color_swap(const Diagram& d) {
  switch (d.kind()) {
    case Kind::Z:
      return Diagram::x(d.inputs(), d.outputs(), d.phase());
    case Kind::X:
      return Diagram::z(d.inputs(), d.outputs(), d.phase());
    case Kind::Triangle:
      return seq_all({Diagram::h(), Diagram::triangle(), Diagram::h()});
    case Kind::Seq:
      return seq(color_swap(d.first()), color_swap(d.second()));
    case Kind::Tensor:
      return tensor(color_swap(d.first()), color_swap(d.second()));
    default:
      return d;
  }
}

Diagram sqrt2_scalar() { return seq(Diagram::z(0, 1), Diagram::x(1, 0)); }

namespace {

// (1 - e^{i beta}) / sqrt(2)
Diagram one_minus_phase(const Rational& beta) {
  return seq_all({Diagram::z(0, 2), tensor(Diagram::h(), Diagram::id()),
                  Diagram::z(2, 0, PhaseExpr(beta))});
}

}  // namespace

Diagram inv_sqrt2_scalar() {
  // Magnitudes multiply to 1/sqrt(2) and the arguments -3pi/8, -pi/8, pi/4, pi/4 cancel.
  return tensor_all({one_minus_phase(Rational(1, 4)), one_minus_phase(Rational(3, 4)),
                     one_minus_phase(Rational(-1, 2)), one_minus_phase(Rational(-1, 2))});
}

Diagram sqrt2_phase_scalar(const PhaseExpr& phase) {
  return seq(Diagram::z(0, 1, phase), Diagram::x(1, 0, PhaseExpr(Rational(1))));
}

Diagram triangle_expansion() {
  // T[y][x] = 1/2 sum_k (-1)^{k y (1-x)}. The cubic sign is the phase
  // polynomial e^{i pi/4 (k + y + z - (k^y) - (k^z) - (y^z) + (k^y^z))} with
  // z = NOT x, realized by spider copies of k, y, z and parity gadgets.
  const PhaseExpr q(Rational(1, 4));
  const PhaseExpr mq(Rational(-1, 4));
  const Diagram xbar = seq(Diagram::x(1, 1, PhaseExpr(Rational(1))), Diagram::z(1, 3, q));
  const Diagram y = Diagram::z(0, 4, q);
  const Diagram k = Diagram::z(0, 3, q);
  // wires: [z1 z2 z3 | y_out y1 y2 y3 | k1 k2 k3]
  const Diagram copies = tensor_all({xbar, y, k});
  const Diagram arrange = permutation({4, 6, 9, 0, 2, 5, 8, 1, 3, 7});
  // now: [y_out, k1 y1, k2 z1, y2 z2, k3 y3 z3]
  const Diagram pair = seq(Diagram::x(2, 1), Diagram::z(1, 0, mq));
  const Diagram triple = seq(Diagram::x(3, 1), Diagram::z(1, 0, q));
  const Diagram gadgets = tensor_all({Diagram::id(), pair, pair, pair, triple});
  // gadget normalizations give 2^{-5/2}; multiply by 2 sqrt(2) to reach 1/2
  const Diagram scalar = tensor(Diagram::z(0, 0), sqrt2_scalar());
  return tensor(seq_all({copies, arrange, gadgets}), scalar);
}

Diagram expand_triangles(const Diagram& d) {
  switch (d.kind()) {
    case Kind::Triangle:
      return triangle_expansion();
    case Kind::Seq:
      return seq(expand_triangles(d.first()), expand_triangles(d.second()));
    case Kind::Tensor:
      return tensor(expand_triangles(d.first()), expand_triangles(d.second()));
    default:
      return d;
  }
}

}  // namespace zxv
