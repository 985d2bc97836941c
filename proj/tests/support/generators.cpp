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

#include "generators.hpp"

#include <cmath>

#include "zxv/dsl.hpp"

namespace zxv::testing {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

bool coin(Rng& rng, double p) { return uniform(rng, 0, 1) < p; }

PhaseExpr random_constant(Rng& rng, Angles a) {
  switch (a) {
    case Angles::Pi4:
      return PhaseExpr(Rational(uniform_int(rng, -4, 7), 4));
    case Angles::RationalPi: {
      static const int dens[] = {1, 2, 3, 4, 6, 8, 12};
      const int q = dens[uniform_int(rng, 0, 6)];
      return PhaseExpr(Rational(uniform_int(rng, -q, 2 * q - 1), q));
    }
    case Angles::Float:
      return PhaseExpr::radians(uniform(rng, -3.2, 3.2));
  }
  return PhaseExpr();
}

Diagram spider(Rng& rng, bool z, std::size_t n, std::size_t m, const GenOptions& o) {
  PhaseExpr p = coin(rng, 0.2) ? PhaseExpr() : random_phase(rng, o);
  return z ? Diagram::z(n, m, p) : Diagram::x(n, m, p);
}

// One layer consuming `width` wires.
Diagram random_layer(Rng& rng, std::size_t width, const GenOptions& o) {
  std::vector<Diagram> parts;
  std::size_t remaining = width, produced = 0;
  while (remaining > 0) {
    const std::size_t n = remaining >= 2 && coin(rng, 0.35) ? 2 : 1;
    const std::size_t room = o.max_width - produced - (remaining - n);
    const int pick = uniform_int(rng, 0, 9);
    Diagram g;
    if (n == 1 && pick <= 1) {
      g = Diagram::h();
    } else if (n == 1 && pick == 2) {
      g = o.triangles && coin(rng, 0.5) ? Diagram::triangle() : Diagram::id();
    } else if (n == 2 && pick == 2) {
      g = Diagram::swap();
    } else {
      const std::size_t m = std::min<std::size_t>(room, uniform_int(rng, 0, 2));
      g = spider(rng, coin(rng, 0.5), n, m, o);
    }
    produced += g.outputs();
    remaining -= n;
    parts.push_back(g);
  }
  // occasionally add a fresh state if there is room
  if (produced < o.max_width && coin(rng, 0.25)) {
    parts.push_back(spider(rng, coin(rng, 0.5), 0, 1, o));
    ++produced;
  }
  return tensor_all(parts);
}

Diagram split_spider(Rng& rng, const Diagram& d, const GenOptions& o) {
  PhaseExpr part;
  if (!d.phase().coeffs().empty() && coin(rng, 0.6)) {
    const auto& [v, c] = *d.phase().coeffs().begin();
    part = PhaseExpr::variable(v, c + uniform_int(rng, -1, 1));
  } else {
    part = random_constant(rng, o.angles == Angles::Float ? Angles::Pi4 : o.angles);
  }
  const Diagram a = Diagram::spider(d.kind(), d.inputs(), 1, part);
  const Diagram b = Diagram::spider(d.kind(), 1, d.outputs(), d.phase() - part);
  return seq(a, b);
}

Diagram rewrite_leaf(Rng& rng, const Diagram& d, const GenOptions& o) {
  switch (d.kind()) {
    case Kind::Z:
    case Kind::X: {
      const int pick = uniform_int(rng, 0, 3);
      if (pick == 0) return split_spider(rng, d, o);
      if (pick == 1) {
        // colour change through Hadamard boundaries
        const Kind other = d.kind() == Kind::Z ? Kind::X : Kind::Z;
        return seq_all({tensor_power(Diagram::h(), d.inputs()),
                        Diagram::spider(other, d.inputs(), d.outputs(), d.phase()),
                        tensor_power(Diagram::h(), d.outputs())});
      }
      if (pick == 2)
        return Diagram::spider(d.kind(), d.inputs(), d.outputs(), d.phase() + PhaseExpr(Rational(2)));
      return d;
    }
    case Kind::H:
      return coin(rng, 0.5) ? seq_all({Diagram::h(), Diagram::h(), Diagram::h()}) : d;
    case Kind::Id:
      return coin(rng, 0.5) ? seq(Diagram::h(), Diagram::h()) : Diagram::z(1, 1);
    default:
      return d;
  }
}

}  // namespace

PhaseExpr random_phase(Rng& rng, const GenOptions& o) {
  PhaseExpr p = random_constant(rng, o.angles);
  for (const auto& v : o.vars) {
    if (!coin(rng, 0.45)) continue;
    int c = 0;
    while (c == 0) c = uniform_int(rng, -o.max_coeff, o.max_coeff);
    p = p + PhaseExpr::variable(v, c);
  }
  return p;
}

Diagram random_diagram(Rng& rng, const GenOptions& o) {
  Diagram d = id_n(o.inputs);
  std::size_t width = o.inputs;
  for (std::size_t l = 0; l < o.layers; ++l) {
    if (width == 0) {
      const Diagram s = spider(rng, coin(rng, 0.5), 0, 1 + (o.max_width > 1 && coin(rng, 0.5)), o);
      d = tensor(d, s);
      width = d.outputs();
      continue;
    }
    const Diagram layer = random_layer(rng, width, o);
    d = seq(d, layer);
    width = layer.outputs();
  }
  return d;
}

Diagram equivalent_variant(Rng& rng, const Diagram& d, const GenOptions& o) {
  switch (d.kind()) {
    case Kind::Seq:
      return seq(equivalent_variant(rng, d.first(), o), equivalent_variant(rng, d.second(), o));
    case Kind::Tensor:
      return tensor(equivalent_variant(rng, d.first(), o), equivalent_variant(rng, d.second(), o));
    default:
      return coin(rng, 0.4) ? rewrite_leaf(rng, d, o) : d;
  }
}

namespace {

std::size_t count_spiders(const Diagram& d) {
  if (d.kind() == Kind::Seq || d.kind() == Kind::Tensor)
    return count_spiders(d.first()) + count_spiders(d.second());
  return d.is_spider() ? 1 : 0;
}

Diagram mutate_at(Rng& rng, const Diagram& d, std::size_t& k, const GenOptions& o) {
  if (d.kind() == Kind::Seq || d.kind() == Kind::Tensor) {
    Diagram a = mutate_at(rng, d.first(), k, o);
    Diagram b = mutate_at(rng, d.second(), k, o);
    return d.kind() == Kind::Seq ? seq(a, b) : tensor(a, b);
  }
  if (!d.is_spider()) return d;
  if (k-- != 0) return d;
  PhaseExpr delta;
  if (!o.vars.empty() && coin(rng, 0.6)) {
    const auto& v = o.vars[uniform_int(rng, 0, static_cast<int>(o.vars.size()) - 1)];
    delta = PhaseExpr::variable(v, coin(rng, 0.5) ? 1 : -1);
  } else {
    delta = PhaseExpr(Rational(uniform_int(rng, 1, 7), 4));
  }
  return Diagram::spider(d.kind(), d.inputs(), d.outputs(), d.phase() + delta);
}

}  // namespace

Diagram mutate(Rng& rng, const Diagram& d, const GenOptions& o) {
  const std::size_t n = count_spiders(d);
  if (n == 0) return tensor(d, Diagram::z(0, 0, PhaseExpr(Rational(1, 2))));
  std::size_t k = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
  return mutate_at(rng, d, k, o);
}

Diagram random_state(Rng& rng, const GenOptions& o) { return spider(rng, coin(rng, 0.5), 0, 1, o); }

ZwDiagram random_zw(Rng& rng, std::size_t inputs, std::size_t max_width, std::size_t layers) {
  auto param = [&]() {
    const int pick = uniform_int(rng, 0, 3);
    if (pick == 0) return ZwParam::one();
    if (pick == 1) return ZwParam::from_exact(Cyclotomic::root_of_unity(uniform_int(rng, 0, 7), 8));
    return ZwParam::from_complex(std::polar(uniform(rng, 0.0, 3.0), uniform(rng, -3.2, 3.2)));
  };
  ZwDiagram d = ZwDiagram::empty();
  for (std::size_t i = 0; i < inputs; ++i) d = zw_tensor(d, ZwDiagram::id());
  std::size_t width = inputs;
  for (std::size_t l = 0; l < layers; ++l) {
    std::vector<ZwDiagram> parts;
    std::size_t remaining = width, produced = 0;
    while (remaining > 0) {
      const std::size_t n = remaining >= 2 && uniform_int(rng, 0, 2) == 0 ? 2 : 1;
      const std::size_t room = max_width - produced - (remaining - n);
      ZwDiagram g;
      const int pick = uniform_int(rng, 0, 6);
      if (n == 1 && pick == 0) g = ZwDiagram::w11();
      else if (n == 1 && pick == 1 && room >= 2) g = ZwDiagram::w12();
      else if (n == 2 && pick <= 1) g = pick == 0 ? ZwDiagram::fcross() : ZwDiagram::swap();
      else if (n == 2 && pick == 2) g = ZwDiagram::cup();
      else g = ZwDiagram::zspider(n, std::min<std::size_t>(room, uniform_int(rng, 0, 2)), param());
      produced += g.outputs();
      remaining -= n;
      parts.push_back(g);
    }
    if (produced + 2 <= max_width && uniform_int(rng, 0, 4) == 0) {
      parts.push_back(ZwDiagram::cap());
      produced += 2;
    }
    if (uniform_int(rng, 0, 5) == 0) parts.push_back(ZwDiagram::wdot(param()));
    const ZwDiagram layer = zw_tensor_all(parts);
    d = zw_seq(d, layer);
    width = layer.outputs();
    if (width == 0) break;
  }
  return d;
}

std::string random_document(Rng& rng, std::size_t lines) {
  std::string doc = "version 1\n";
  GenOptions o;
  o.triangles = true;
  for (std::size_t i = 0; i < lines; ++i) {
    o.inputs = static_cast<std::size_t>(uniform_int(rng, 0, 3));
    o.layers = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    o.angles = static_cast<Angles>(uniform_int(rng, 0, 2));
    o.vars = uniform_int(rng, 0, 1) ? std::vector<std::string>{"a", "b2", "theta"} : std::vector<std::string>{};
    doc += print_zx(random_diagram(rng, o));
    if (uniform_int(rng, 0, 4) == 0) doc += "   # note";
    doc += "\n";
    if (uniform_int(rng, 0, 6) == 0) doc += "\n# comment line\n";
  }
  return doc;
}

}  // namespace zxv::testing
