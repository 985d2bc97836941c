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

#include "zxv/projector.hpp"

#include <algorithm>
#include <bit>

#include "zxv/errors.hpp"

namespace zxv {

namespace {

std::size_t popcount(std::size_t v) { return static_cast<std::size_t>(std::popcount(v)); }

void check_constants(const Diagram& d) {
  switch (d.kind()) {
    case Kind::Z:
    case Kind::X: {
      const PhaseExpr c = d.phase().constant_part();
      if (!c.constants_in_pi4()) throw ConstantsOutsidePi4(c.to_string());
      return;
    }
    case Kind::Seq:
    case Kind::Tensor:
      check_constants(d.first());
      check_constants(d.second());
      return;
    default:
      return;
  }
}

void check_scale(std::int64_t k) {
  if (((k % 8) + 8) % 8 != 1) throw UnsupportedScale(k);
}

struct GridOutcome {
  bool holds = true;
  bool float_fallback = false;
  std::map<std::string, Angle> witness;  // in the reparametrized angles
  double discrepancy = 0.0;
};

// Evaluates both sides on the product grid {2 pi j / (mu + 1)}.
GridOutcome grid_search(const Diagram& e1, const Diagram& e2,
                        const std::vector<std::string>& vars,
                        const std::vector<std::int64_t>& mus, double tol) {
  GridOutcome out;
  std::vector<std::int64_t> idx(vars.size(), 0);
  while (true) {
    std::map<std::string, Angle> asg;
    for (std::size_t i = 0; i < vars.size(); ++i)
      asg[vars[i]] = Angle::pi_times(Rational(2 * idx[i], mus[i] + 1));
    const Diagram g1 = substitute(e1, asg), g2 = substitute(e2, asg);
    EvalOptions o;
    o.allow_fallback = true;
    const Matrix m1 = interp(g1, o), m2 = interp(g2, o);
    bool equal;
    if (m1.is_exact() && m2.is_exact()) {
      equal = m1.exact() == m2.exact();
    } else {
      out.float_fallback = true;
      equal = max_abs_diff(m1, m2) <= tol;
    }
    if (!equal) {
      out.holds = false;
      out.witness = asg;
      out.discrepancy = max_abs_diff(m1, m2);
      return out;
    }
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++idx[i] <= mus[i]) break;
      idx[i] = 0;
    }
    if (i == vars.size()) break;
  }
  return out;
}

// Nonzero columns of P_{r_1} ⊗ ... ⊗ P_{r_k}: products of the sums over weight-p states.
ExactMatrix projector_columns(const std::vector<std::size_t>& rs) {
  ExactMatrix acc(1, 1);
  acc(0, 0) = Cyclotomic(1);
  for (std::size_t r : rs) {
    ExactMatrix cols(std::size_t{1} << r, r + 1);
    for (std::size_t y = 0; y < cols.rows(); ++y) cols(y, popcount(y)) = Cyclotomic(1);
    acc = kron(acc, cols);
  }
  return acc;
}

bool projector_compare(const Diagram& e1, const Diagram& e2) {
  const ExtractionResult res = extract_multi(e1, e2);
  if (res.blocks.empty()) return interp_exact(e1) == interp_exact(e2);
  const ExactMatrix cols = kron(projector_columns(res.rs()), ExactMatrix::identity(std::size_t{1}
                                                                                  << e1.inputs()));
  return apply_exact(res.open[0], cols) == apply_exact(res.open[1], cols);
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::Grid: return "grid";
    case Method::Projector: return "projector";
    case Method::Both: return "both";
  }
  return "?";
}

ExactMatrix r_matrix() {
  const Rational h(1, 2);
  return rational_matrix(4, 4, {1, 0, 0, 0, 0, h, h, 0, 0, h, h, 0, 0, 0, 0, 1});
}

ExactMatrix p_matrix_any(std::size_t r) {
  const std::size_t dim = std::size_t{1} << r;
  ExactMatrix m(dim, dim);
  for (std::size_t y = 0; y < dim; ++y) {
    const std::size_t p = popcount(y);
    const std::size_t x = ((std::size_t{1} << p) - 1) << (r - p);
    m(y, x) = Cyclotomic(1);
  }
  return m;
}

ExactMatrix p_matrix(std::size_t r) {
  if (r < 2) throw Error("p_matrix requires r >= 2");
  return p_matrix_any(r);
}

ExactMatrix p_matrix_multi(const std::vector<std::size_t>& rs) {
  ExactMatrix acc = ExactMatrix::identity(1);
  for (auto r : rs) acc = kron(acc, p_matrix_any(r));
  return acc;
}

ExactMatrix theta_vector(std::size_t r, const Rational& pi_multiple) {
  ExactMatrix v(std::size_t{1} << r, 1);
  std::vector<Cyclotomic> powers(r + 1);
  const Cyclotomic z = Cyclotomic::exp_i_pi(pi_multiple);
  powers[0] = Cyclotomic(1);
  for (std::size_t k = 1; k <= r; ++k) powers[k] = powers[k - 1] * z;
  for (std::size_t y = 0; y < v.rows(); ++y) v(y, 0) = powers[popcount(y)];
  return v;
}

std::vector<ExactMatrix> vandermonde_basis(std::size_t r) {
  if (r < 1) throw Error("vandermonde_basis requires r >= 1");
  std::vector<ExactMatrix> out;
  for (std::size_t j = 0; j <= r; ++j)
    out.push_back(theta_vector(r, Rational(static_cast<std::int64_t>(j),
                                           static_cast<std::int64_t>(r))));
  return out;
}

Verdict decide_forall(const Diagram& d1, const Diagram& d2, const DecideOptions& options) {
  if (d1.inputs() != d2.inputs() || d1.outputs() != d2.outputs())
    throw ArityMismatch("equation sides have different arities");
  check_scale(options.scale);
  check_constants(d1);
  check_constants(d2);

  Verdict v;
  v.method = options.method;
  std::set<std::string> all = variables(d1);
  for (const auto& x : variables(d2)) all.insert(x);
  std::vector<std::string> vars;
  std::vector<std::int64_t> mus;
  for (const auto& x : all) {
    const auto rep = multiplicity(d1, d2, x);
    v.mu[x] = rep.mu;
    vars.push_back(x);
    mus.push_back(rep.mu);
  }

  // [[d(a)]]_k = [[d'(k a)]] where d' has constants scaled by k; quantifying
  // over k a is the same as quantifying over a.
  const Diagram e1 = options.scale == 1 ? d1 : scale_constants(d1, options.scale);
  const Diagram e2 = options.scale == 1 ? d2 : scale_constants(d2, options.scale);

  std::optional<GridOutcome> grid;
  auto run_grid = [&] {
    if (!grid) grid = grid_search(e1, e2, vars, mus, options.float_tol);
    return *grid;
  };

  if (options.method != Method::Projector) v.grid_holds = run_grid().holds;
  if (options.method != Method::Grid) v.projector_holds = projector_compare(e1, e2);
  v.holds = v.grid_holds.value_or(true) && v.projector_holds.value_or(true);
  if (!v.holds) {
    const GridOutcome g = run_grid();
    if (!g.holds) {
      std::map<std::string, Angle> w;
      for (const auto& [name, u] : g.witness) {
        Angle a = u;
        a.pi_multiple /= Rational(options.scale);
        a.radians /= static_cast<double>(options.scale);
        w[name] = a;
      }
      v.witness = w;
      v.discrepancy = g.discrepancy;
    }
  }
  if (grid) v.float_fallback = grid->float_fallback;
  return v;
}

Diagram plug_basis(const Diagram& d, Port port, int j) {
  if (j != 0 && j != 1) throw Error("plug_basis: basis value must be 0 or 1");
  const PhaseExpr ph{Rational(j)};
  if (port.side == Port::Side::Input) {
    if (port.index >= d.inputs()) throw NoSuchPort("input " + std::to_string(port.index));
    const Diagram st = tensor_all(
        {id_n(port.index), Diagram::x(0, 1, ph), id_n(d.inputs() - port.index - 1)});
    return seq(st, d);
  }
  if (port.index >= d.outputs()) throw NoSuchPort("output " + std::to_string(port.index));
  const Diagram ef =
      tensor_all({id_n(port.index), Diagram::x(1, 0, ph), id_n(d.outputs() - port.index - 1)});
  return seq(d, ef);
}

namespace {

template <typename Mat>
Mat permute_rows(const Mat& m, const std::vector<std::size_t>& tau) {
  const std::size_t r = tau.size();
  if ((std::size_t{1} << r) != m.rows()) throw ArityMismatch("permutation size vs matrix rows");
  Mat out(m.rows(), m.cols());
  for (std::size_t x = 0; x < m.rows(); ++x) {
    std::size_t y = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t bit = (x >> (r - 1 - tau[i])) & 1;
      y |= bit << (r - 1 - i);
    }
    for (std::size_t c = 0; c < m.cols(); ++c) out(y, c) = m(x, c);
  }
  return out;
}

}  // namespace

ExactMatrix permute_qubits(const ExactMatrix& m, const std::vector<std::size_t>& tau) {
  return permute_rows(m, tau);
}

FloatMatrix permute_qubits(const FloatMatrix& m, const std::vector<std::size_t>& tau) {
  return permute_rows(m, tau);
}

Matrix permute_qubits(const Matrix& m, const std::vector<std::size_t>& tau) {
  if (m.is_exact()) return Matrix(permute_rows(m.exact(), tau));
  return Matrix(permute_rows(m.to_float(), tau));
}

bool is_symmetric(const Diagram& d, double tol) {
  if (d.inputs() != 0) throw ArityMismatch(d.inputs(), 0, "symmetric state must have no inputs");
  const std::size_t r = d.outputs();
  EvalOptions o;
  o.allow_fallback = true;
  const Matrix v = interp(d, o);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    std::vector<std::size_t> tau(r);
    for (std::size_t k = 0; k < r; ++k) tau[k] = k;
    std::swap(tau[i], tau[i + 1]);
    if (!matrices_equal(permute_qubits(v, tau), v, tol)) return false;
  }
  return true;
}

SymmetricCheck check_symmetric_substitution(const Diagram& d1, const Diagram& d2,
                                            const Diagram& d, double tol) {
  if (d.inputs() != 0 || d.outputs() != d1.inputs())
    throw ArityMismatch(d.outputs(), d1.inputs(), "symmetric state");
  if (!is_symmetric(d, tol)) throw NotSymmetric();
  std::set<std::string> taken = variables(d1);
  for (const auto& v : variables(d2)) taken.insert(v);
  std::string fresh = "alpha";
  for (int i = 0; taken.count(fresh); ++i) fresh = "alpha" + std::to_string(i);

  SymmetricCheck out;
  const Diagram th = theta(d.outputs(), PhaseExpr::variable(fresh));
  out.premise = decide_forall(seq(th, d1), seq(th, d2));
  const Diagram c1 = seq(d, d1), c2 = seq(d, d2);
  if (is_ground(c1) && is_ground(c2)) {
    EvalOptions o;
    o.allow_fallback = true;
    const Matrix m1 = interp(c1, o), m2 = interp(c2, o);
    out.conclusion = matrices_equal(m1, m2, tol);
    out.conclusion_discrepancy = max_abs_diff(m1, m2);
  } else {
    out.conclusion = decide_forall(c1, c2).holds;
  }
  return out;
}

}  // namespace zxv
