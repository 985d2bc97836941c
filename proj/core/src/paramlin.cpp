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

#include "zxv/paramlin.hpp"

#include <algorithm>
#include <numeric>

#include "zxv/errors.hpp"

namespace zxv {

namespace {

template <typename F>
void for_each_spider(const Diagram& d, F&& f) {
  switch (d.kind()) {
    case Kind::Z:
    case Kind::X:
      f(d);
      break;
    case Kind::Seq:
    case Kind::Tensor:
      for_each_spider(d.first(), f);
      for_each_spider(d.second(), f);
      break;
    default:
      break;
  }
}

// 0 -> 2n state sum_x |x>|x>, copies on the left, feeds on the right.
Diagram paired_caps(std::size_t n) {
  std::vector<std::size_t> perm(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[2 * i] = i;
    perm[2 * i + 1] = n + i;
  }
  Diagram caps = tensor_power(Diagram::cap(), n);
  if (n <= 1) return caps;
  return seq(caps, permutation(perm));
}

struct Opened {
  Diagram d;
  std::vector<std::size_t> labels;  // variable index per extra input
};

class Opener {
 public:
  explicit Opener(const std::vector<std::string>& vars) : vars_(vars) {}

  Opened open(const Diagram& d) const {
    switch (d.kind()) {
      case Kind::Z:
      case Kind::X:
        return open_spider(d);
      case Kind::Seq:
        return open_seq(open(d.first()), open(d.second()));
      case Kind::Tensor:
        return open_tensor(d, open(d.first()), open(d.second()));
      default:
        return {d, {}};
    }
  }

 private:
  Opened open_spider(const Diagram& d) const {
    const PhaseExpr& p = d.phase();
    for (const auto& [v, c] : p.coeffs())
      if (std::find(vars_.begin(), vars_.end(), v) == vars_.end())
        throw NonGroundDiagram("variable '" + v + "' is not being extracted");
    const PhaseExpr rest = p.constant_part();
    if (!rest.constants_in_pi4()) throw ConstantsOutsidePi4(rest.to_string());
    if (p.ground()) return {d, {}};

    const std::size_t n = d.inputs(), m = d.outputs();
    std::vector<std::size_t> labels;
    std::vector<Diagram> gates;
    for (std::size_t vi = 0; vi < vars_.size(); ++vi) {
      const std::int64_t c = p.coefficient(vars_[vi]);
      const std::size_t count = static_cast<std::size_t>(c < 0 ? -c : c);
      for (std::size_t j = 0; j < count; ++j) {
        labels.push_back(vi);
        // a NOT turns (1, e^{ia}) into e^{ia} (1, e^{-ia})
        gates.push_back(c < 0 ? Diagram::x(1, 1, PhaseExpr(Rational(1))) : Diagram::id());
      }
    }
    gates.push_back(id_n(n));
    Diagram core = seq(tensor_all(gates), Diagram::z(labels.size() + n, m, rest));
    if (d.kind() == Kind::X) {
      core = seq_all({tensor(id_n(labels.size()), tensor_power(Diagram::h(), n)), core,
                      tensor_power(Diagram::h(), m)});
    }
    return {core, labels};
  }

  static Opened open_seq(Opened a, Opened b) {
    const std::size_t la = a.labels.size(), lb = b.labels.size();
    const std::size_t n = a.d.inputs() - la;
    Diagram front = a.d;
    if (lb > 0) {
      front = tensor(id_n(lb), a.d);
      if (la > 0) {
        // [La | Lb | n] -> [Lb | La | n]
        std::vector<std::size_t> perm(la + lb + n);
        for (std::size_t i = 0; i < perm.size(); ++i)
          perm[i] = i < la ? lb + i : (i < la + lb ? i - la : i);
        front = seq(permutation(perm), front);
      }
    }
    Opened out{seq(front, b.d), a.labels};
    out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
    return out;
  }

  static Opened open_tensor(const Diagram& orig, Opened a, Opened b) {
    const std::size_t la = a.labels.size(), lb = b.labels.size();
    const std::size_t na = orig.first().inputs(), nb = orig.second().inputs();
    Diagram body = tensor(a.d, b.d);
    if (lb > 0 && na > 0) {
      // [La | Lb | na | nb] -> [La | na | Lb | nb]
      std::vector<std::size_t> perm(la + lb + na + nb);
      for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i < la)
          perm[i] = i;
        else if (i < la + lb)
          perm[i] = la + na + (i - la);
        else if (i < la + lb + na)
          perm[i] = la + (i - la - lb);
        else
          perm[i] = i;
      }
      body = seq(permutation(perm), body);
    }
    Opened out{body, a.labels};
    out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
    return out;
  }

  const std::vector<std::string>& vars_;
};

Diagram scalar_power(const Diagram& s, std::size_t k) { return tensor_power(s, k); }

}  // namespace

std::int64_t mu_plus(const Diagram& d, const std::string& var) {
  std::int64_t total = 0;
  for_each_spider(d, [&](const Diagram& s) {
    const auto c = s.phase().coefficient(var);
    if (c > 0) total += c;
  });
  return total;
}

std::int64_t mu_minus(const Diagram& d, const std::string& var) {
  std::int64_t total = 0;
  for_each_spider(d, [&](const Diagram& s) {
    const auto c = s.phase().coefficient(var);
    if (c < 0) total -= c;
  });
  return total;
}

MultiplicityReport multiplicity(const Diagram& d1, const Diagram& d2, const std::string& var) {
  MultiplicityReport rep;
  rep.var = var;
  rep.mu_plus[0] = mu_plus(d1, var);
  rep.mu_plus[1] = mu_plus(d2, var);
  rep.mu_minus[0] = mu_minus(d1, var);
  rep.mu_minus[1] = mu_minus(d2, var);
  rep.mu = std::max(rep.mu_plus[0], rep.mu_plus[1]) + std::max(rep.mu_minus[0], rep.mu_minus[1]);
  return rep;
}

Diagram theta(std::size_t r, const PhaseExpr& angle) {
  return tensor_power(Diagram::z(0, 1, angle), r);
}

Diagram bend_inputs(const Diagram& d) {
  const std::size_t n = d.inputs();
  if (n == 0) return d;
  if (d.kind() == Kind::Id) return Diagram::cap();
  return seq(paired_caps(n), tensor(id_n(n), d));
}

std::size_t ExtractionResult::r() const {
  std::size_t t = 0;
  for (const auto& b : blocks) t += b.r;
  return t;
}

std::vector<std::size_t> ExtractionResult::rs() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) out.push_back(b.r);
  return out;
}

std::int64_t ExtractionResult::c(int side) const {
  std::int64_t t = 0;
  for (const auto& b : blocks) t += b.c[side];
  return t;
}

ExtractionResult extract(const Diagram& d1, const Diagram& d2, const std::string& var) {
  return extract_multi(d1, d2, {var});
}

ExtractionResult extract_multi(const Diagram& d1, const Diagram& d2,
                               std::vector<std::string> vars) {
  if (d1.inputs() != d2.inputs() || d1.outputs() != d2.outputs())
    throw ArityMismatch("equation sides have different arities");
  if (vars.empty()) {
    auto all = variables(d1);
    auto v2 = variables(d2);
    all.insert(v2.begin(), v2.end());
    vars.assign(all.begin(), all.end());
  }
  ExtractionResult res;
  std::vector<std::string> used;
  for (const auto& v : vars) {
    auto rep = multiplicity(d1, d2, v);
    if (rep.mu == 0) continue;
    VarBlock b;
    b.var = v;
    b.r = static_cast<std::size_t>(rep.mu);
    for (int i = 0; i < 2; ++i) {
      b.mu_plus[i] = rep.mu_plus[i];
      b.mu_minus[i] = rep.mu_minus[i];
      // balancing wires only add factors of 1, sign-flip gadgets bring every
      // side up to the largest negative count
      b.c[i] = std::max(rep.mu_minus[0], rep.mu_minus[1]);
    }
    res.blocks.push_back(b);
    used.push_back(v);
  }
  // Variables listed but absent are fine; variables present but unlisted are not.
  for (const Diagram* d : {&d1, &d2})
    for (const auto& v : variables(*d))
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        throw NonGroundDiagram("variable '" + v + "' is not being extracted");

  const std::size_t n = d1.inputs(), m = d1.outputs();
  res.inputs = res.r();
  res.outputs = n + m;
  Opener opener(used);
  const Diagram sign_gadget = Diagram::x(1, 0, PhaseExpr(Rational(1)));  // (0, sqrt 2)
  const Diagram balance_gadget = Diagram::x(1, 0);                      // (sqrt 2, 0)

  for (int side = 0; side < 2; ++side) {
    const Opened op = opener.open(side == 0 ? d1 : d2);
    const std::size_t L = op.labels.size();
    // internal slot order: [L labelled wires | per block: sign gadgets, balance gadgets]
    std::vector<Diagram> gadgets;
    std::vector<std::size_t> slot_block(L);
    for (std::size_t i = 0; i < L; ++i) slot_block[i] = op.labels[i];
    for (std::size_t bi = 0; bi < res.blocks.size(); ++bi) {
      const VarBlock& b = res.blocks[bi];
      const std::int64_t Q = std::max(b.mu_minus[0], b.mu_minus[1]);
      const std::int64_t P = std::max(b.mu_plus[0], b.mu_plus[1]);
      for (std::int64_t j = 0; j < Q - b.mu_minus[side]; ++j) {
        gadgets.push_back(sign_gadget);
        slot_block.push_back(bi);
      }
      for (std::int64_t j = 0; j < P - b.mu_plus[side]; ++j) {
        gadgets.push_back(balance_gadget);
        slot_block.push_back(bi);
      }
    }
    const std::size_t G = gadgets.size();
    const Diagram scalar = scalar_power(inv_sqrt2_scalar(), G);

    // grouped input index for every internal slot (stable within a block)
    std::vector<std::size_t> offset(res.blocks.size(), 0);
    for (std::size_t bi = 1; bi < res.blocks.size(); ++bi)
      offset[bi] = offset[bi - 1] + res.blocks[bi - 1].r;
    std::vector<std::size_t> grouped_of_slot(L + G);
    for (std::size_t s = 0; s < L + G; ++s) grouped_of_slot[s] = offset[slot_block[s]]++;

    // bent form: inputs grouped -> slots [L | G]
    std::vector<std::size_t> to_slots(L + G);
    for (std::size_t s = 0; s < L + G; ++s) to_slots[grouped_of_slot[s]] = s;
    Diagram bent = op.d;
    if (n > 0) {
      // [L | fresh | feed] -> [fresh | L | feed] -> [fresh | m]
      std::vector<std::size_t> perm(L + 2 * n);
      for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = i < L ? n + i : (i < L + n ? i - L : i);
      bent = seq_all({tensor(id_n(L), paired_caps(n)), permutation(perm), tensor(id_n(n), op.d)});
    }
    res.prime[side] =
        seq(permutation(to_slots), tensor_all({bent, tensor_all(gadgets), scalar}));

    // open form: [grouped | n] -> [G | L | n]
    std::vector<std::size_t> to_open(L + G + n);
    for (std::size_t s = 0; s < L + G; ++s) {
      const std::size_t target = s < L ? G + s : s - L;
      to_open[grouped_of_slot[s]] = target;
    }
    for (std::size_t i = 0; i < n; ++i) to_open[L + G + i] = L + G + i;
    res.open[side] = seq(permutation(to_open), tensor_all({tensor_all(gadgets), op.d, scalar}));
  }
  return res;
}

Diagram theta_for(const ExtractionResult& res) {
  std::vector<Diagram> parts;
  for (const auto& b : res.blocks) parts.push_back(theta(b.r, PhaseExpr::variable(b.var)));
  return tensor_all(parts);
}

}  // namespace zxv
