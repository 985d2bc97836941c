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

#include "zxv/zw.hpp"

#include <cmath>

#include "zxv/errors.hpp"

namespace zxv {

struct ZwDiagram::Node {
  ZwKind kind;
  std::size_t n = 0, m = 0;
  ZwParam param = ZwParam::one();
  std::optional<ZwDiagram> a, b;
};

const char* zw_kind_name(ZwKind k) {
  switch (k) {
    case ZwKind::ZSpider: return "Zw";
    case ZwKind::W11: return "W11";
    case ZwKind::W12: return "W12";
    case ZwKind::Swap: return "swap";
    case ZwKind::FCross: return "fcross";
    case ZwKind::Cup: return "cup";
    case ZwKind::Cap: return "cap";
    case ZwKind::Id: return "id";
    case ZwKind::Empty: return "empty";
    case ZwKind::WDot: return "wdot";
    case ZwKind::Seq: return "seq";
    case ZwKind::Tensor: return "tensor";
  }
  return "?";
}

ZwDiagram ZwDiagram::leaf(ZwKind k, std::size_t n, std::size_t m, ZwParam p) {
  auto node = std::make_shared<Node>();
  node->kind = k;
  node->n = n;
  node->m = m;
  node->param = std::move(p);
  return ZwDiagram(std::move(node));
}

ZwDiagram::ZwDiagram() {
  static const ZwDiagram e = leaf(ZwKind::Empty, 0, 0, ZwParam::one());
  node_ = e.node_;
}

ZwDiagram ZwDiagram::zspider(std::size_t n, std::size_t m, ZwParam r) {
  return leaf(ZwKind::ZSpider, n, m, std::move(r));
}
ZwDiagram ZwDiagram::w11() { return leaf(ZwKind::W11, 1, 1, ZwParam::one()); }
ZwDiagram ZwDiagram::w12() { return leaf(ZwKind::W12, 1, 2, ZwParam::one()); }
ZwDiagram ZwDiagram::swap() { return leaf(ZwKind::Swap, 2, 2, ZwParam::one()); }
ZwDiagram ZwDiagram::fcross() { return leaf(ZwKind::FCross, 2, 2, ZwParam::one()); }
ZwDiagram ZwDiagram::cup() { return leaf(ZwKind::Cup, 2, 0, ZwParam::one()); }
ZwDiagram ZwDiagram::cap() { return leaf(ZwKind::Cap, 0, 2, ZwParam::one()); }
ZwDiagram ZwDiagram::id() { return leaf(ZwKind::Id, 1, 1, ZwParam::one()); }
ZwDiagram ZwDiagram::empty() { return ZwDiagram(); }
ZwDiagram ZwDiagram::wdot(ZwParam r) { return leaf(ZwKind::WDot, 0, 0, std::move(r)); }

ZwKind ZwDiagram::kind() const { return node_->kind; }
std::size_t ZwDiagram::inputs() const { return node_->n; }
std::size_t ZwDiagram::outputs() const { return node_->m; }
const ZwParam& ZwDiagram::param() const { return node_->param; }

const ZwDiagram& ZwDiagram::first() const {
  if (!node_->a) throw Error("ZW node has no children");
  return *node_->a;
}
const ZwDiagram& ZwDiagram::second() const {
  if (!node_->b) throw Error("ZW node has no children");
  return *node_->b;
}

ZwDiagram zw_seq(const ZwDiagram& a, const ZwDiagram& b) {
  if (a.outputs() != b.inputs()) throw ArityMismatch(a.outputs(), b.inputs(), "ZW seq");
  auto node = std::make_shared<ZwDiagram::Node>();
  node->kind = ZwKind::Seq;
  node->n = a.inputs();
  node->m = b.outputs();
  node->a = a;
  node->b = b;
  return ZwDiagram(std::move(node));
}

ZwDiagram zw_tensor(const ZwDiagram& a, const ZwDiagram& b) {
  auto node = std::make_shared<ZwDiagram::Node>();
  node->kind = ZwKind::Tensor;
  node->n = a.inputs() + b.inputs();
  node->m = a.outputs() + b.outputs();
  node->a = a;
  node->b = b;
  return ZwDiagram(std::move(node));
}

ZwDiagram zw_seq_all(const std::vector<ZwDiagram>& parts) {
  if (parts.empty()) throw Error("zw_seq_all needs at least one diagram");
  ZwDiagram d = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) d = zw_seq(d, parts[i]);
  return d;
}

ZwDiagram zw_tensor_all(const std::vector<ZwDiagram>& parts) {
  if (parts.empty()) return ZwDiagram::empty();
  ZwDiagram d = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) d = zw_tensor(d, parts[i]);
  return d;
}

namespace {

bool all_exact(const ZwDiagram& d) {
  switch (d.kind()) {
    case ZwKind::ZSpider:
    case ZwKind::WDot:
      return d.param().exact.has_value();
    case ZwKind::Seq:
    case ZwKind::Tensor:
      return all_exact(d.first()) && all_exact(d.second());
    default:
      return true;
  }
}

template <typename S>
S param_value(const ZwParam& p) {
  if constexpr (std::is_same_v<S, Cyclotomic>)
    return *p.exact;
  else
    return p.value;
}

template <typename S>
DenseMatrix<S> fixed(std::size_t rows, std::size_t cols, std::initializer_list<int> v) {
  std::vector<S> data;
  for (int x : v) data.push_back(S(x));
  return DenseMatrix<S>(rows, cols, std::move(data));
}

template <typename S>
DenseMatrix<S> eval_zw(const ZwDiagram& d) {
  using M = DenseMatrix<S>;
  switch (d.kind()) {
    case ZwKind::ZSpider:
    case ZwKind::WDot: {
      const std::size_t rows = std::size_t{1} << d.outputs(), cols = std::size_t{1} << d.inputs();
      M m(rows, cols);
      m(0, 0) += S(1);
      m(rows - 1, cols - 1) += param_value<S>(d.param());
      return m;
    }
    case ZwKind::W11:
      return fixed<S>(2, 2, {0, 1, 1, 0});
    case ZwKind::W12:
      return fixed<S>(4, 2, {0, 1, 1, 0, 1, 0, 0, 0});
    case ZwKind::Swap:
      return fixed<S>(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    case ZwKind::FCross:
      return fixed<S>(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1});
    case ZwKind::Cup:
      return fixed<S>(1, 4, {1, 0, 0, 1});
    case ZwKind::Cap:
      return fixed<S>(4, 1, {1, 0, 0, 1});
    case ZwKind::Id:
      return M::identity(2);
    case ZwKind::Empty:
      return M::identity(1);
    case ZwKind::Seq:
      return eval_zw<S>(d.second()) * eval_zw<S>(d.first());
    case ZwKind::Tensor:
      return kron(eval_zw<S>(d.first()), eval_zw<S>(d.second()));
  }
  throw Error("unknown ZW node");
}

// Exact e^{i phase} when the phase is a rational multiple of pi within the cap.
std::optional<Cyclotomic> exact_phase(const PhaseExpr& p) {
  if (p.irrational() != 0.0 || !p.pi_constant().is_small()) return std::nullopt;
  try {
    return Cyclotomic::exp_i_pi(p.pi_constant());
  } catch (const ExactUnavailable&) {
    return std::nullopt;
  }
}

ZwParam phase_param(const PhaseExpr& p) {
  if (auto c = exact_phase(p)) return ZwParam::from_exact(*c);
  return ZwParam::from_complex(std::polar(1.0, p.value()));
}

ZwDiagram zw_h() {
  // x -> |0> + (-1)^x |1>, scaled by 1/sqrt 2
  const ZwParam one = ZwParam::one();
  const ZwDiagram cz = zw_seq(ZwDiagram::swap(), ZwDiagram::fcross());
  const ZwDiagram body =
      zw_seq_all({zw_tensor(ZwDiagram::id(), ZwDiagram::zspider(0, 1, one)), cz,
                  zw_tensor(ZwDiagram::zspider(1, 0, one), ZwDiagram::id())});
  const Cyclotomic s = Cyclotomic::inv_sqrt_two() - Cyclotomic(1);
  return zw_tensor(body, ZwDiagram::wdot(ZwParam::from_exact(s)));
}

ZwDiagram zw_tensor_power(const ZwDiagram& d, std::size_t k) {
  return zw_tensor_all(std::vector<ZwDiagram>(k, d));
}

Diagram tensor_pow(const Diagram& d, std::size_t k) { return tensor_power(d, k); }

// sqrt(2)^k as a pi/4-fragment scalar, k may be negative.
Diagram sqrt2_power(int k) {
  return k >= 0 ? tensor_pow(sqrt2_scalar(), static_cast<std::size_t>(k))
                : tensor_pow(inv_sqrt2_scalar(), static_cast<std::size_t>(-k));
}

// Phase e^{i phi} as a scalar diagram.
Diagram phase_scalar(const PhaseExpr& phi) {
  if (phi.is_zero()) return Diagram::empty();
  return tensor(sqrt2_phase_scalar(phi), inv_sqrt2_scalar());
}

// Exact unit-modulus parameter -> its angle as a rational multiple of pi.
std::optional<PhaseExpr> exact_angle(const Cyclotomic& c) {
  if (auto e = c.root_of_unity_exponent()) return PhaseExpr(Rational(2 * *e, c.order()));
  return std::nullopt;
}

// 1 -> 1 map diag(1, v) where the effect (1, v) is given.
Diagram diag_from_effect(const Diagram& effect) {
  return seq(Diagram::z(1, 2), tensor(Diagram::id(), effect));
}

// Effect (1, 2 cos(g) e^{i g}).
Diagram two_cos_effect(const PhaseExpr& twice_g) {
  return seq(Diagram::triangle(), Diagram::z(1, 0, twice_g));
}

// Scalar 1 + r with an exact decomposition sqrt(2)^k e^{i phi}, if one exists.
std::optional<Diagram> exact_one_plus(const Cyclotomic& r) {
  const Cyclotomic z = r + Cyclotomic(1);
  if (z.is_zero()) return Diagram::z(0, 0, PhaseExpr(Rational(1)));
  const Cyclotomic s = Cyclotomic::sqrt_two(), si = Cyclotomic::inv_sqrt_two();
  Cyclotomic up = z, down = z;
  for (int k = 0; k <= 16; ++k) {
    // z = sqrt2^k * up_unit or sqrt2^{-k} * down_unit
    if (auto a = exact_angle(up)) return tensor(sqrt2_power(k), phase_scalar(*a));
    if (auto a = exact_angle(down)) return tensor(sqrt2_power(-k), phase_scalar(*a));
    up = up * si;
    down = down * s;
  }
  return std::nullopt;
}

}  // namespace

Matrix interp_zw(const ZwDiagram& d) {
  if (all_exact(d)) return Matrix(eval_zw<Cyclotomic>(d));
  return Matrix(eval_zw<std::complex<double>>(d));
}

std::complex<double> Decomposition::reconstruct() const {
  return std::ldexp(1.0, static_cast<int>(n)) * std::cos(beta) * std::polar(1.0, theta);
}

Decomposition decompose(std::complex<double> z) {
  Decomposition d;
  const double rho = std::abs(z);
  if (rho == 0.0) {
    d.beta = M_PI / 2;
    return d;
  }
  int n = rho <= 1.0 ? 0 : static_cast<int>(std::ceil(std::log2(rho)));
  if (n < 0) n = 0;
  while (std::ldexp(1.0, n) < rho) ++n;
  d.n = static_cast<unsigned>(n);
  d.beta = std::acos(std::min(1.0, rho / std::ldexp(1.0, n)));
  double th = std::arg(z);
  if (th < 0) th += 2 * M_PI;
  if (th >= 2 * M_PI) th = 0.0;
  d.theta = th;
  return d;
}

Diagram corner_effect(std::complex<double> r) { return corner_effect(ZwParam::from_complex(r)); }

Diagram corner_effect(const ZwParam& r) {
  if (r.exact) {
    if (r.exact->is_zero()) return tensor(Diagram::x(1, 0), inv_sqrt2_scalar());
    if (auto a = exact_angle(*r.exact)) return Diagram::z(1, 0, *a);
  }
  const std::complex<double> z = r.value;
  if (std::abs(z) == 0.0) return tensor(Diagram::x(1, 0), inv_sqrt2_scalar());
  if (std::abs(std::abs(z) - 1.0) < 1e-12) return Diagram::z(1, 0, PhaseExpr::radians(std::arg(z)));

  const Decomposition dec = decompose(z);
  const PhaseExpr two_beta = PhaseExpr::radians(2 * dec.beta);
  // (1, e^{2ib}) T = (1, 2 cos(b) e^{ib}); the remaining magnitude 2^{n-1}
  // comes from diag(1, 2) factors and the phase is fixed by a leading Z.
  std::vector<Diagram> chain;
  double lead = dec.theta - dec.beta;
  if (dec.n == 0) {
    // one factor 1/2 e^{i g} with 2 cos(g) = 1/2
    const double g = std::acos(0.25);
    chain.push_back(diag_from_effect(two_cos_effect(PhaseExpr::radians(2 * g))));
    lead -= g;
  } else {
    const Diagram two = diag_from_effect(seq(Diagram::triangle(), Diagram::z(1, 0)));
    for (unsigned i = 1; i < dec.n; ++i) chain.push_back(two);
  }
  std::vector<Diagram> parts{Diagram::z(1, 1, PhaseExpr::radians(lead))};
  parts.insert(parts.end(), chain.begin(), chain.end());
  parts.push_back(two_cos_effect(two_beta));
  return seq_all(parts);
}

ZwDiagram to_zw(const Diagram& d) {
  switch (d.kind()) {
    case Kind::Z: {
      if (!d.phase().ground()) throw NonGroundDiagram();
      const ZwParam p = phase_param(d.phase());
      if (d.inputs() == 0 && d.outputs() == 0) return ZwDiagram::wdot(p);
      return ZwDiagram::zspider(d.inputs(), d.outputs(), p);
    }
    case Kind::X: {
      if (!d.phase().ground()) throw NonGroundDiagram();
      const ZwDiagram h = zw_h();
      const ZwDiagram core = d.inputs() == 0 && d.outputs() == 0
                                 ? ZwDiagram::wdot(phase_param(d.phase()))
                                 : ZwDiagram::zspider(d.inputs(), d.outputs(),
                                                      phase_param(d.phase()));
      return zw_seq_all({zw_tensor_power(h, d.inputs()), core, zw_tensor_power(h, d.outputs())});
    }
    case Kind::H: return zw_h();
    case Kind::Id: return ZwDiagram::id();
    case Kind::Swap: return ZwDiagram::swap();
    case Kind::Cup: return ZwDiagram::cup();
    case Kind::Cap: return ZwDiagram::cap();
    case Kind::Empty: return ZwDiagram::empty();
    case Kind::Triangle:
      // |0> -> |0>, |1> -> |0> + |1>; the pi/4 expansion is far larger
      return zw_seq_all({ZwDiagram::w11(), ZwDiagram::w12(),
                         zw_tensor(ZwDiagram::id(), ZwDiagram::zspider(1, 0, ZwParam::one()))});
    case Kind::Seq: return zw_seq(to_zw(d.first()), to_zw(d.second()));
    case Kind::Tensor: return zw_tensor(to_zw(d.first()), to_zw(d.second()));
  }
  throw Error("unknown diagram node");
}

namespace {

Diagram zx_cz() {
  // (a, b) -> (a, a, b) -> (a, H a, b) -> (a, b) (-1)^{ab} / sqrt 2
  return tensor(seq_all({tensor(Diagram::z(1, 2), Diagram::id()),
                         tensor_all({Diagram::id(), Diagram::h(), Diagram::id()}),
                         tensor(Diagram::id(), Diagram::z(2, 1))}),
                sqrt2_scalar());
}

Diagram zx_w12() {
  const PhaseExpr pi{Rational(1)};
  // effect e(a, b) = 0 only for a = b = 1
  const Diagram e = seq(tensor(Diagram::id(), seq(Diagram::x(1, 1, pi), Diagram::triangle())),
                        Diagram::cup());
  const Diagram proj = seq(tensor(Diagram::z(1, 2), Diagram::z(1, 2)),
                           tensor_all({Diagram::id(), e, Diagram::id()}));
  return tensor(seq_all({Diagram::x(1, 1, pi), Diagram::x(1, 2), proj}), sqrt2_scalar());
}

Diagram zx_spider(const ZwDiagram& d) {
  const ZwParam& r = d.param();
  if (r.exact) {
    if (auto a = exact_angle(*r.exact)) return Diagram::z(d.inputs(), d.outputs(), *a);
    if (d.inputs() == 0 && d.outputs() == 0)
      if (auto s = exact_one_plus(*r.exact)) return *s;
  } else if (std::abs(std::abs(r.value) - 1.0) < 1e-12) {
    return Diagram::z(d.inputs(), d.outputs(), PhaseExpr::radians(std::arg(r.value)));
  }
  const std::size_t n = d.inputs(), m = d.outputs();
  return seq(Diagram::z(n, m + 1), tensor(id_n(m), corner_effect(r)));
}

}  // namespace

Diagram to_zx(const ZwDiagram& d) {
  switch (d.kind()) {
    case ZwKind::ZSpider:
    case ZwKind::WDot:
      return zx_spider(d);
    case ZwKind::W11: return Diagram::x(1, 1, PhaseExpr(Rational(1)));
    case ZwKind::W12: return zx_w12();
    case ZwKind::Swap: return Diagram::swap();
    case ZwKind::FCross: return seq(Diagram::swap(), zx_cz());
    case ZwKind::Cup: return Diagram::cup();
    case ZwKind::Cap: return Diagram::cap();
    case ZwKind::Id: return Diagram::id();
    case ZwKind::Empty: return Diagram::empty();
    case ZwKind::Seq: return seq(to_zx(d.first()), to_zx(d.second()));
    case ZwKind::Tensor: return tensor(to_zx(d.first()), to_zx(d.second()));
  }
  throw Error("unknown ZW node");
}

namespace {

TranslationCheck compare(const Matrix& a, const Matrix& b, double tol) {
  TranslationCheck c;
  c.exact = a.is_exact() && b.is_exact();
  if (c.exact) {
    // subtract before rounding so equal matrices report exactly 0
    c.holds = a.exact() == b.exact();
    if (!c.holds) {
      const FloatMatrix d = to_float(a.exact() - b.exact());
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) c.max_abs = std::max(c.max_abs, std::abs(d(i, j)));
    }
    return c;
  }
  c.max_abs = max_abs_diff(a, b);
  c.holds = c.max_abs <= tol;
  return c;
}

Matrix interp_any(const Diagram& d) {
  EvalOptions o;
  o.allow_fallback = true;
  return interp(d, o);
}

}  // namespace

TranslationCheck roundtrip_check(const Diagram& d, double tol) {
  return compare(interp_any(to_zx(to_zw(d))), interp_any(d), tol);
}

TranslationCheck check_to_zw(const Diagram& d, double tol) {
  return compare(interp_zw(to_zw(d)), interp_any(d), tol);
}

TranslationCheck check_to_zx(const ZwDiagram& d, double tol) {
  return compare(interp_any(to_zx(d)), interp_zw(d), tol);
}

}  // namespace zxv
