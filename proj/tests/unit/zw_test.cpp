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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "zxv/zw.hpp"

namespace zxv {
namespace {

using testing::CMat;
using testing::pi;
using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

CMat mat(Eigen::Index rows, Eigen::Index cols, std::initializer_list<C> entries) {
  CMat m(rows, cols);
  auto it = entries.begin();
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

double gap(const ZwDiagram& d, const CMat& expected) {
  return testing::max_abs(testing::to_eigen(interp_zw(d)), expected);
}

TEST(InterpZw, Generators) {
  const C r(0.3, -1.2);
  EXPECT_EQ(gap(ZwDiagram::w11(), mat(2, 2, {0, 1, 1, 0})), 0.0);
  EXPECT_EQ(gap(ZwDiagram::w12(), mat(4, 2, {0, 1, 1, 0, 1, 0, 0, 0})), 0.0);
  EXPECT_EQ(gap(ZwDiagram::fcross(), mat(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1})), 0.0);
  EXPECT_EQ(gap(ZwDiagram::swap(), mat(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1})), 0.0);
  EXPECT_EQ(gap(ZwDiagram::cup(), mat(1, 4, {1, 0, 0, 1})), 0.0);
  EXPECT_EQ(gap(ZwDiagram::cap(), mat(4, 1, {1, 0, 0, 1})), 0.0);
  EXPECT_EQ(gap(ZwDiagram::id(), mat(2, 2, {1, 0, 0, 1})), 0.0);
  EXPECT_EQ(gap(ZwDiagram::empty(), mat(1, 1, {1})), 0.0);
  EXPECT_EQ(gap(ZwDiagram::zspider(1, 1, ZwParam::from_complex(r)), mat(2, 2, {1, 0, 0, r})), 0.0);
  CMat z21 = CMat::Zero(2, 4);
  z21(0, 0) = 1;
  z21(1, 3) = r;
  EXPECT_EQ(gap(ZwDiagram::zspider(2, 1, ZwParam::from_complex(r)), z21), 0.0);
  EXPECT_EQ(gap(ZwDiagram::wdot(ZwParam::from_complex(r)), mat(1, 1, {C(1) + r})), 0.0);
  EXPECT_EQ(gap(ZwDiagram::wdot(ZwParam::from_exact(Cyclotomic(-1))), mat(1, 1, {0})), 0.0);
}

TEST(InterpZw, FermionicCrossSquaresToIdentity) {
  const ZwDiagram f2 = zw_seq(ZwDiagram::fcross(), ZwDiagram::fcross());
  EXPECT_EQ(gap(f2, CMat::Identity(4, 4)), 0.0);
}

TEST(InterpZw, AgreesWithOracleOnComposites) {
  testing::Rng rng(31);
  for (int it = 0; it < 100; ++it) {
    const ZwDiagram d = testing::random_zw(rng, it % 4, 4, 3);
    EXPECT_LT(gap(d, testing::oracle_zw(d)), 1e-12);
  }
}

TEST(ToZw, Generators) {
  const Diagram gens[] = {Diagram::z(1, 1, pi(1, 3)), Diagram::h(), Diagram::x(2, 1, pi(3, 4)),
                          Diagram::cup(), Diagram::cap(), Diagram::swap(), Diagram::id(),
                          Diagram::empty(), Diagram::z(0, 0, pi(1, 2)), Diagram::triangle()};
  for (const auto& g : gens) {
    const auto c = check_to_zw(g);
    EXPECT_TRUE(c.holds) << c.max_abs;
    EXPECT_TRUE(c.exact);
    EXPECT_LT(testing::max_abs(testing::oracle_zw(to_zw(g)), testing::oracle(g)), 1e-12);
  }
  EXPECT_EQ(to_zw(Diagram::z(1, 1, pi(1, 3))).kind(), ZwKind::ZSpider);
  EXPECT_EQ(to_zw(Diagram::cup()).kind(), ZwKind::Cup);
  EXPECT_EQ(to_zw(Diagram::swap()).kind(), ZwKind::Swap);
}

TEST(ToZw, RandomComposites) {
  testing::Rng rng(41);
  testing::GenOptions o;
  o.max_width = 6;
  o.layers = 8;
  o.triangles = true;
  for (int it = 0; it < 200; ++it) {
    o.inputs = it % 4;
    o.angles = it % 2 ? testing::Angles::Float : testing::Angles::RationalPi;
    const Diagram d = testing::random_diagram(rng, o);
    const ZwDiagram w = to_zw(d);
    ASSERT_LT(testing::max_abs(testing::oracle_zw(w), testing::oracle(d)), 1e-9);
    ASSERT_TRUE(check_to_zw(d).holds);
  }
}

TEST(ToZx, Examples) {
  const ZwParam unit = ZwParam::from_exact(Cyclotomic::exp_i_pi(Rational(1, 5)));
  const Diagram z = to_zx(ZwDiagram::zspider(1, 1, unit));
  EXPECT_EQ(z.kind(), Kind::Z);
  EXPECT_EQ(interp_exact(z), interp_exact(Diagram::z(1, 1, pi(1, 5))));
  EXPECT_EQ(interp_exact(to_zx(ZwDiagram::wdot(ZwParam::one()))), rational_matrix(1, 1, {2}));
  const C r = std::polar(3.0, kPi / 5);
  const Diagram state = to_zx(ZwDiagram::zspider(0, 1, ZwParam::from_complex(r)));
  EXPECT_LT(testing::max_abs(testing::oracle(state), mat(2, 1, {1, r})), 1e-9);
  EXPECT_LT(testing::max_abs(testing::oracle(to_zx(ZwDiagram::w11())), mat(2, 2, {0, 1, 1, 0})), 1e-12);
}

TEST(ToZx, GeneratorsAndComposites) {
  const ZwDiagram gens[] = {ZwDiagram::w11(), ZwDiagram::w12(), ZwDiagram::fcross(), ZwDiagram::swap(),
                            ZwDiagram::cup(), ZwDiagram::cap(), ZwDiagram::id(), ZwDiagram::empty(),
                            ZwDiagram::zspider(2, 2, ZwParam::from_complex({-0.4, 2.5})),
                            ZwDiagram::zspider(0, 0, ZwParam::from_complex({0, 0})),
                            ZwDiagram::wdot(ZwParam::from_complex({7, -3}))};
  for (const auto& g : gens) {
    EXPECT_TRUE(check_to_zx(g).holds);
    EXPECT_LT(testing::max_abs(testing::oracle(to_zx(g)), testing::oracle_zw(g)), 1e-9);
  }
  testing::Rng rng(43);
  for (int it = 0; it < 200; ++it) {
    const ZwDiagram d = testing::random_zw(rng, it % 4, 5, 4);
    ASSERT_LT(testing::max_abs(testing::oracle(to_zx(d)), testing::oracle_zw(d)), 1e-9);
  }
}

TEST(Decompose, Examples) {
  const auto a = decompose(1 / std::sqrt(2.0));
  EXPECT_EQ(a.n, 0u);
  EXPECT_NEAR(a.theta, 0, 1e-15);
  EXPECT_NEAR(a.beta, kPi / 4, 1e-12);
  const auto one = decompose(1.0);
  EXPECT_EQ(one.n, 0u);
  EXPECT_NEAR(one.beta, 0, 1e-12);
  const C z = std::polar(3.0, kPi / 5);
  const auto b = decompose(z);
  EXPECT_EQ(b.n, 2u);
  EXPECT_NEAR(b.theta, kPi / 5, 1e-12);
  EXPECT_NEAR(b.beta, std::acos(0.75), 1e-12);
  EXPECT_LE(std::abs(b.reconstruct() - z), 1e-12);
  const auto zero = decompose(0.0);
  EXPECT_EQ(zero.n, 0u);
  EXPECT_EQ(zero.theta, 0.0);
  EXPECT_NEAR(zero.beta, kPi / 2, 1e-15);
  const auto neg = decompose(-1.0);
  EXPECT_NEAR(neg.theta, kPi, 1e-15);
  EXPECT_NEAR(neg.beta, 0, 1e-12);
}

TEST(Decompose, Totality) {
  testing::Rng rng(47);
  for (int it = 0; it < 100000; ++it) {
    // log-uniform radius so small moduli get exercised as well
    const double rho = std::exp(testing::uniform(rng, std::log(1e-9), std::log(1e6)));
    const C z = std::polar(rho, testing::uniform(rng, -kPi, kPi));
    const auto d = decompose(z);
    ASSERT_EQ(d.n, rho <= 1 ? 0u : static_cast<unsigned>(std::ceil(std::log2(rho))));
    ASSERT_GE(d.theta, 0.0);
    ASSERT_LT(d.theta, 2 * kPi);
    ASSERT_GE(d.beta, 0.0);
    ASSERT_LE(d.beta, kPi / 2);
    ASSERT_LE(std::abs(d.reconstruct() - z), 1e-12 * std::max(1.0, rho)) << z;
  }
}

TEST(CornerEffect, Examples) {
  EXPECT_EQ(interp_exact(corner_effect(ZwParam::one())), interp_exact(Diagram::z(1, 0)));
  const ZwParam unit = ZwParam::from_exact(Cyclotomic::exp_i_pi(Rational(3, 4)));
  EXPECT_EQ(interp_exact(corner_effect(unit)), interp_exact(Diagram::z(1, 0, pi(3, 4))));
  for (const C r : {std::polar(0.35, 1.1), C(0), C(-2.5, 0), C(1e-7, 0), C(0, 900)}) {
    const Diagram e = corner_effect(r);
    EXPECT_EQ(e.inputs(), 1u);
    EXPECT_EQ(e.outputs(), 0u);
    EXPECT_LT(testing::max_abs(testing::oracle(e), mat(1, 2, {1, r})), 1e-9 * std::max(1.0, std::abs(r))) << r;
  }
}

TEST(ZwIdentities, SpiderParametersMultiply) {
  testing::Rng rng(53);
  for (int it = 0; it < 50; ++it) {
    const C r1(testing::uniform(rng, -3, 3), testing::uniform(rng, -3, 3));
    const C r2(testing::uniform(rng, -3, 3), testing::uniform(rng, -3, 3));
    const ZwDiagram lhs = zw_seq(ZwDiagram::zspider(1, 1, ZwParam::from_complex(r1)),
                                 ZwDiagram::zspider(1, 1, ZwParam::from_complex(r2)));
    const ZwDiagram rhs = ZwDiagram::zspider(1, 1, ZwParam::from_complex(r1 * r2));
    EXPECT_LT(testing::max_abs(testing::oracle(to_zx(lhs)), testing::oracle(to_zx(rhs))), 1e-9);
  }
}

TEST(ZwIdentities, SpiderParametersAdd) {
  // W12 transposed via caps and cups merges two corners: W11 ; W21 ; (r1 * r2) = (1, r1 + r2)
  const ZwDiagram id = ZwDiagram::id();
  const ZwDiagram w21 = zw_seq_all({zw_tensor_all({id, id, ZwDiagram::cap()}),
                                    zw_tensor_all({id, id, ZwDiagram::w12(), id}),
                                    zw_tensor_all({id, ZwDiagram::swap(), id, id}),
                                    zw_tensor_all({ZwDiagram::cup(), ZwDiagram::cup(), id})});
  EXPECT_LT(testing::max_abs(testing::oracle_zw(w21), testing::oracle_zw(ZwDiagram::w12()).transpose()), 1e-15);
  testing::Rng rng(59);
  for (int it = 0; it < 30; ++it) {
    const C r1(testing::uniform(rng, -2, 2), testing::uniform(rng, -2, 2));
    const C r2(testing::uniform(rng, -2, 2), testing::uniform(rng, -2, 2));
    const ZwDiagram sum = zw_seq_all({zw_tensor(ZwDiagram::zspider(0, 1, ZwParam::from_complex(r1)),
                                                ZwDiagram::zspider(0, 1, ZwParam::from_complex(r2))),
                                      w21, ZwDiagram::w11()});
    const ZwDiagram direct = ZwDiagram::zspider(0, 1, ZwParam::from_complex(r1 + r2));
    EXPECT_LT(testing::max_abs(testing::oracle(to_zx(sum)), mat(2, 1, {1, r1 + r2})), 1e-9);
    EXPECT_LT(testing::max_abs(testing::oracle(to_zx(sum)), testing::oracle(to_zx(direct))), 1e-9);
  }
}

TEST(Roundtrip, Examples) {
  for (const Diagram& d : {Diagram::h(), Diagram::z(2, 1, pi(1, 4))}) {
    const auto c = roundtrip_check(d);
    EXPECT_TRUE(c.holds);
    EXPECT_TRUE(c.exact);
    EXPECT_EQ(c.max_abs, 0.0);
  }
  testing::Rng rng(61);
  testing::GenOptions o;
  o.angles = testing::Angles::Float;
  o.max_width = 3;
  for (int it = 0; it < 30; ++it) {
    o.inputs = it % 3;
    EXPECT_TRUE(roundtrip_check(testing::random_diagram(rng, o)).holds);
  }
}

TEST(Roundtrip, AllGenerators) {
  const Diagram gens[] = {Diagram::z(0, 3, pi(7, 4)), Diagram::x(1, 2, pi(1, 2)), Diagram::h(),
                          Diagram::cup(), Diagram::cap(), Diagram::swap(), Diagram::id(),
                          Diagram::empty(), Diagram::triangle()};
  for (const auto& g : gens) EXPECT_TRUE(roundtrip_check(g).holds);
}

}  // namespace
}  // namespace zxv
