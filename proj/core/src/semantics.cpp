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

#include "zxv/semantics.hpp"

#include <cmath>
#include <numeric>

#include "dyadic8.hpp"

namespace zxv {

const ExactMatrix& Matrix::exact() const {
  if (!is_exact()) throw Error("matrix was evaluated with the float backend");
  return std::get<ExactMatrix>(value_);
}

FloatMatrix Matrix::to_float() const {
  if (is_exact()) return zxv::to_float(std::get<ExactMatrix>(value_));
  return std::get<FloatMatrix>(value_);
}

std::size_t Matrix::rows() const {
  return std::visit([](const auto& m) { return m.rows(); }, value_);
}

std::size_t Matrix::cols() const {
  return std::visit([](const auto& m) { return m.cols(); }, value_);
}

std::string Matrix::to_string() const {
  return std::visit([](const auto& m) { return zxv::to_string(m); }, value_);
}

namespace {

bool is_identity_like(const Diagram& d) {
  switch (d.kind()) {
    case Kind::Id:
    case Kind::Empty:
      return true;
    case Kind::Tensor:
      return is_identity_like(d.first()) && is_identity_like(d.second());
    default:
      return false;
  }
}

struct ExactOps {
  using S = Cyclotomic;
  int order;
  std::int64_t scale;
  S inv_sqrt2;

  S phase(const PhaseExpr& p) const {
    const Rational r = p.pi_constant() * Rational(scale);
    // e^{i pi r} with r = a/b lives in order 2b, which divides `order`
    return Cyclotomic::exp_i_pi(r).lifted(order);
  }
  // (1/sqrt 2)^e
  S inv_sqrt2_pow(std::size_t e) const {
    S out(Rational(1, std::int64_t{1} << (e / 2)));
    if (e % 2) out = out * inv_sqrt2;
    return out;
  }
};

struct DyadicOps {
  using S = detail::Dyadic8;
  std::int64_t scale;

  S phase(const PhaseExpr& p) const {
    const Rational r = p.pi_constant() * Rational(scale) * Rational(4);
    if (!r.is_integer() || !r.is_small()) throw Error("phase outside the pi/4 fragment");
    return S::zeta_power(static_cast<int>(r.num() % 8));
  }
  S inv_sqrt2_pow(std::size_t e) const {
    S out = S::half_power(static_cast<int>(e / 2));
    if (e % 2) out = out * S::inv_sqrt2();
    return out;
  }
};

struct FloatOps {
  using S = std::complex<double>;
  std::int64_t scale;

  S phase(const PhaseExpr& p) const {
    const double a = (p.pi_constant() * Rational(scale)).to_double() * M_PI +
                     p.irrational() * static_cast<double>(scale);
    return std::polar(1.0, a);
  }
  S inv_sqrt2_pow(std::size_t e) const { return S(std::pow(M_SQRT1_2, static_cast<double>(e)), 0); }
};

template <typename Ops>
class Evaluator {
 public:
  using S = typename Ops::S;
  using M = DenseMatrix<S>;

  explicit Evaluator(Ops ops) : ops_(std::move(ops)) {}

  M apply(const Diagram& d, M m) const {
    if (m.rows() != (std::size_t{1} << d.inputs()))
      throw ArityMismatch(m.rows(), std::size_t{1} << d.inputs(), "apply");
    const std::size_t k = m.cols();
    if (d.is_wiring() && !d.is_generator()) return apply_wiring(d, std::move(m));
    switch (d.kind()) {
      case Kind::Id:
      case Kind::Empty:
        return m;
      case Kind::Seq:
        return apply(d.second(), apply(d.first(), std::move(m)));
      case Kind::Tensor:
        return apply_tensor(d, std::move(m));
      case Kind::Z:
        return apply_z(d.inputs(), d.outputs(), ops_.phase(d.phase()), m);
      case Kind::X: {
        fwht(m);
        M out = apply_z(d.inputs(), d.outputs(), ops_.phase(d.phase()), m);
        fwht(out);
        const S f = ops_.inv_sqrt2_pow(d.inputs() + d.outputs());
        for (auto& v : out.data()) v = v * f;
        return out;
      }
      case Kind::H: {
        fwht(m);
        const S f = ops_.inv_sqrt2_pow(1);
        for (auto& v : m.data()) v = v * f;
        return m;
      }
      case Kind::Swap: {
        for (std::size_t j = 0; j < k; ++j) std::swap(m(1, j), m(2, j));
        return m;
      }
      case Kind::Cup: {
        M out(1, k);
        for (std::size_t j = 0; j < k; ++j) out(0, j) = m(0, j) + m(3, j);
        return out;
      }
      case Kind::Cap: {
        M out(4, k);
        for (std::size_t j = 0; j < k; ++j) out(0, j) = out(3, j) = m(0, j);
        return out;
      }
      case Kind::Triangle: {
        for (std::size_t j = 0; j < k; ++j) m(0, j) += m(1, j);
        return m;
      }
    }
    throw Error("unknown diagram node");
  }

 private:
  static M apply_wiring(const Diagram& d, M m) {
    const std::vector<std::size_t> p = wiring_permutation(d);
    const std::size_t n = p.size(), k = m.cols();
    M out(m.rows(), k);
    for (std::size_t x = 0; x < m.rows(); ++x) {
      std::size_t y = 0;
      for (std::size_t i = 0; i < n; ++i)
        if ((x >> (n - 1 - i)) & 1) y |= std::size_t{1} << (n - 1 - p[i]);
      for (std::size_t j = 0; j < k; ++j) out(y, j) = std::move(m(x, j));
    }
    return out;
  }

  // Unnormalized Walsh-Hadamard transform along the row index.
  static void fwht(M& m) {
    const std::size_t rows = m.rows(), k = m.cols();
    for (std::size_t h = 1; h < rows; h <<= 1)
      for (std::size_t i = 0; i < rows; i += 2 * h)
        for (std::size_t r = i; r < i + h; ++r)
          for (std::size_t j = 0; j < k; ++j) {
            S a = m(r, j);
            S b = m(r + h, j);
            m(r, j) = a + b;
            m(r + h, j) = a - b;
          }
  }

  static M apply_z(std::size_t n, std::size_t mo, const S& phase, const M& in) {
    const std::size_t k = in.cols();
    const std::size_t last_in = (std::size_t{1} << n) - 1;
    const std::size_t last_out = (std::size_t{1} << mo) - 1;
    M out(last_out + 1, k);
    for (std::size_t j = 0; j < k; ++j) {
      out(0, j) += in(0, j);
      out(last_out, j) += phase * in(last_in, j);
    }
    return out;
  }

  M apply_tensor(const Diagram& d, M m) const {
    const Diagram& a = d.first();
    const Diagram& b = d.second();
    const std::size_t k = m.cols();
    const std::size_t na = std::size_t{1} << a.inputs();
    const std::size_t nb = std::size_t{1} << b.inputs();
    const std::size_t mb = std::size_t{1} << b.outputs();
    M mid;
    if (is_identity_like(b)) {
      mid = M(na, nb * k, std::move(m.data()));
    } else {
      std::vector<S> buf;
      buf.reserve(na * mb * k);
      for (std::size_t i = 0; i < na; ++i) {
        std::vector<S> slice(std::make_move_iterator(m.data().begin() + i * nb * k),
                             std::make_move_iterator(m.data().begin() + (i + 1) * nb * k));
        M sub = apply(b, M(nb, k, std::move(slice)));
        for (auto& v : sub.data()) buf.push_back(std::move(v));
      }
      mid = M(na, mb * k, std::move(buf));
    }
    M res = is_identity_like(a) ? std::move(mid) : apply(a, std::move(mid));
    const std::size_t rows = res.rows() * mb;
    return M(rows, k, std::move(res.data()));
  }

  Ops ops_;
};

void check_scale(std::int64_t k) {
  if (((k % 8) + 8) % 8 != 1) throw UnsupportedScale(k);
}

void order_of(const Diagram& d, std::int64_t& order, bool& ok) {
  if (!ok) return;
  switch (d.kind()) {
    case Kind::Z:
    case Kind::X: {
      const PhaseExpr& p = d.phase();
      if (p.irrational() != 0.0 || !p.pi_constant().is_small()) {
        ok = false;
        return;
      }
      const std::int64_t q = 2 * p.pi_constant().den();
      order = order / std::gcd(order, q) * q;
      if (order > kMaxCyclotomicOrder) ok = false;
      return;
    }
    case Kind::Seq:
    case Kind::Tensor:
      order_of(d.first(), order, ok);
      order_of(d.second(), order, ok);
      return;
    default:
      return;
  }
}

}  // namespace

std::optional<int> exact_order(const Diagram& d) {
  std::int64_t order = 8;
  bool ok = true;
  order_of(d, order, ok);
  if (!ok) return std::nullopt;
  return static_cast<int>(order);
}

namespace {

bool to_dyadic(const Cyclotomic& c, detail::Dyadic8& out) {
  if (c.is_zero()) {
    out = detail::Dyadic8();
    return true;
  }
  Cyclotomic v = c;
  if (v.order() != 8) {
    // accept only values that already live in Q(zeta_8)
    Rational r;
    if (!v.as_rational(&r)) return false;
    v = Cyclotomic(r);
  }
  const auto coeffs = v.coefficients();
  detail::Dyadic8 acc;
  for (int k = 0; k < 4; ++k) {
    const Rational& q = coeffs[k];
    if (q.is_zero()) continue;
    if (!q.is_small()) return false;
    const std::int64_t den = q.den();
    if ((den & (den - 1)) != 0 || den > (std::int64_t{1} << 40)) return false;
    int e = 0;
    while ((std::int64_t{1} << e) < den) ++e;
    acc += detail::Dyadic8(q.num()) * detail::Dyadic8::zeta_power(k) *
           detail::Dyadic8::half_power(e);
  }
  out = acc;
  return true;
}

// Runs the pi/4-fragment evaluation in the dyadic ring when possible.
std::optional<ExactMatrix> try_dyadic(const Diagram& d, const ExactMatrix& m, std::int64_t scale) {
  using D = detail::Dyadic8;
  try {
    DenseMatrix<D> in(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.data().size(); ++i)
      if (!to_dyadic(m.data()[i], in.data()[i])) return std::nullopt;
    Evaluator<DyadicOps> ev(DyadicOps{scale});
    const DenseMatrix<D> out = ev.apply(d, std::move(in));
    std::vector<Cyclotomic> data;
    data.reserve(out.data().size());
    for (const auto& v : out.data()) data.push_back(v.to_cyclotomic());
    return ExactMatrix(out.rows(), out.cols(), std::move(data));
  } catch (const detail::DyadicOverflow&) {
    return std::nullopt;
  }
}

ExactMatrix apply_exact_scaled(const Diagram& d, const ExactMatrix& m, int order,
                               std::int64_t scale) {
  if (order == 8)
    if (auto r = try_dyadic(d, m, scale)) return *r;
  Evaluator<ExactOps> ev(ExactOps{order, scale, Cyclotomic::inv_sqrt_two().lifted(order)});
  return ev.apply(d, m);
}

}  // namespace

ExactMatrix apply_exact(const Diagram& d, const ExactMatrix& m) {
  if (!is_ground(d)) throw NonGroundDiagram();
  auto order = exact_order(d);
  if (!order) throw ExactUnavailable("phases are not rational multiples of pi within the order cap");
  return apply_exact_scaled(d, m, *order, 1);
}

FloatMatrix apply_float(const Diagram& d, const FloatMatrix& m) {
  if (!is_ground(d)) throw NonGroundDiagram();
  Evaluator<FloatOps> ev(FloatOps{1});
  return ev.apply(d, m);
}

Matrix interp(const Diagram& d, const EvalOptions& options) {
  check_scale(options.scale);
  if (!is_ground(d)) throw NonGroundDiagram();
  const std::size_t dim = std::size_t{1} << d.inputs();
  if (options.backend == Backend::Exact) {
    auto order = exact_order(d);
    if (order)
      return Matrix(apply_exact_scaled(d, ExactMatrix::identity(dim), *order, options.scale));
    if (!options.allow_fallback)
      throw ExactUnavailable("phases are not rational multiples of pi within the order cap");
  }
  Evaluator<FloatOps> ev(FloatOps{options.scale});
  return Matrix(ev.apply(d, FloatMatrix::identity(dim)), options.backend == Backend::Exact);
}

Matrix interp_scaled(const Diagram& d, std::int64_t k, const EvalOptions& options) {
  EvalOptions o = options;
  o.scale = k;
  return interp(d, o);
}

ExactMatrix interp_exact(const Diagram& d) { return interp(d).exact(); }

FloatMatrix interp_float(const Diagram& d) {
  EvalOptions o;
  o.backend = Backend::Float;
  return interp(d, o).to_float();
}

bool matrices_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return max_abs_diff(a, b) <= tol;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return zxv::max_abs_diff(a.to_float(), b.to_float());
}

bool semantic_eq(const Diagram& a, const Diagram& b, EqMode mode) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs())
    throw ArityMismatch("diagrams " + std::to_string(a.inputs()) + "->" +
                        std::to_string(a.outputs()) + " and " + std::to_string(b.inputs()) +
                        "->" + std::to_string(b.outputs()) + " differ");
  EvalOptions o;
  o.backend = mode.exact ? Backend::Exact : Backend::Float;
  const Matrix ma = interp(a, o), mb = interp(b, o);
  if (mode.exact) return ma.exact() == mb.exact();
  return max_abs_diff(ma, mb) <= mode.tol;
}

}  // namespace zxv
