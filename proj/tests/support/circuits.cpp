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

#include "circuits.hpp"

#include <vector>

namespace zxv::testing {

namespace {

Diagram t_gate(int sign) { return Diagram::z(1, 1, PhaseExpr(Rational(sign, 4))); }

}  // namespace

Diagram on_wires(const Diagram& g, std::size_t n, std::size_t i, std::size_t j) {
  // move i to 0 and j to 1, keep the rest in order
  std::vector<std::size_t> perm(n);
  std::size_t next = 2;
  for (std::size_t w = 0; w < n; ++w) perm[w] = w == i ? 0 : w == j ? 1 : next++;
  std::vector<std::size_t> inv(n);
  for (std::size_t w = 0; w < n; ++w) inv[perm[w]] = w;
  return seq_all({permutation(perm), tensor(g, id_n(n - 2)), permutation(inv)});
}

Diagram on_wire(const Diagram& g, std::size_t n, std::size_t i) {
  return tensor_all({id_n(i), g, id_n(n - i - 1)});
}

Diagram cnot(std::size_t n, std::size_t c, std::size_t t) {
  const Diagram g = seq(tensor(Diagram::z(1, 2), Diagram::id()),
                        tensor(Diagram::id(), Diagram::x(2, 1)));
  return on_wires(g, n, c, t);
}

Diagram toffoli(std::size_t n, std::size_t a, std::size_t b, std::size_t t) {
  const Diagram h = Diagram::h();
  return seq_all({on_wire(h, n, t),          cnot(n, b, t),           on_wire(t_gate(-1), n, t),
                  cnot(n, a, t),             on_wire(t_gate(1), n, t), cnot(n, b, t),
                  on_wire(t_gate(-1), n, t), cnot(n, a, t),           on_wire(t_gate(1), n, b),
                  on_wire(t_gate(1), n, t),  on_wire(h, n, t),         cnot(n, a, b),
                  on_wire(t_gate(1), n, a),  on_wire(t_gate(-1), n, b), cnot(n, a, b)});
}

Diagram fredkin(std::size_t n, std::size_t c, std::size_t x, std::size_t y) {
  return seq_all({cnot(n, y, x), toffoli(n, c, x, y), cnot(n, y, x)});
}

Diagram r_diagram() {
  // control in (|0> + |1>), controlled swap, control effect (1, 1):  I + SWAP
  const Diagram body = seq_all({tensor(Diagram::z(0, 1), id_n(2)), fredkin(3, 0, 1, 2),
                                tensor(Diagram::z(1, 0), id_n(2))});
  // fredkin carries 2^-4 (eight CNOTs), and R = (I + SWAP) / 2: scale by 2^3
  std::vector<Diagram> parts{body};
  for (int i = 0; i < 6; ++i) parts.push_back(sqrt2_scalar());
  return tensor_all(parts);
}

}  // namespace zxv::testing
