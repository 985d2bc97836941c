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
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

#include "zxv/cyclotomic.hpp"
#include "zxv/dense_matrix.hpp"
#include "zxv/errors.hpp"
#include "zxv/rational.hpp"

namespace zxv {
namespace {

Cyclotomic random_element(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> c(-5, 5), d(1, 4);
  std::vector<Rational> coeffs(order);
  for (auto& x : coeffs) x = Rational(c(rng), d(rng));
  return Cyclotomic::from_coefficients(order, coeffs);
}

TEST(Rational, CanonicalAndPromotesToBig) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  const Rational big = Rational(std::numeric_limits<std::int64_t>::max()) * Rational(4);
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.to_string(), "36893488147419103228");
  EXPECT_EQ(big / Rational(4), Rational(std::numeric_limits<std::int64_t>::max()));
  EXPECT_TRUE((big / Rational(4)).is_small());
  EXPECT_EQ(Rational::from_string("-12/18"), Rational(-2, 3));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Cyclotomic, RootOfUnityExamples) {
  EXPECT_TRUE(Cyclotomic::root_of_unity(0, 1).is_one());
  const Cyclotomic z8 = Cyclotomic::root_of_unity(1, 8);
  EXPECT_EQ(z8 * z8, Cyclotomic::root_of_unity(1, 4));
  EXPECT_EQ(z8 * z8, Cyclotomic::imag_unit());
  const Cyclotomic sum = Cyclotomic::root_of_unity(1, 3) + Cyclotomic::root_of_unity(2, 3) + 1;
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(Cyclotomic::root_of_unity(1, 3).order(), 24);
  EXPECT_EQ(Cyclotomic::root_of_unity(1, 5).order(), 40);
  EXPECT_EQ(Cyclotomic::root_of_unity(4, 8), Cyclotomic(-1));
}

TEST(Cyclotomic, SqrtTwo) {
  const Cyclotomic s = Cyclotomic::sqrt_two();
  EXPECT_EQ(s * s, Cyclotomic(2));
  EXPECT_TRUE((s * s.inverse()).is_one());
  EXPECT_NEAR(s.to_complex().real(), 1.4142135623730951, 1e-12);
  EXPECT_NEAR(s.to_complex().imag(), 0.0, 1e-12);
  EXPECT_EQ(Cyclotomic::inv_sqrt_two() * s, Cyclotomic(1));
}

TEST(Cyclotomic, OrderCap) {
  EXPECT_THROW(Cyclotomic::root_of_unity(1, 241), ExactUnavailable);
  EXPECT_NO_THROW(Cyclotomic::root_of_unity(1, 240));
  EXPECT_THROW(CyclotomicField::get(12), ExactUnavailable);
}

TEST(Cyclotomic, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(8), (std::vector<std::int64_t>{1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  for (int n : {8, 24, 40, 56, 120, 240})
    EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(n).size()) - 1, euler_phi(n));
}

TEST(Cyclotomic, FieldAxiomsOnRandomSamples) {
  std::mt19937_64 rng(7);
  for (int order : {8, 24, 40, 56}) {
    for (int it = 0; it < 20; ++it) {
      const Cyclotomic a = random_element(rng, order), b = random_element(rng, order),
                       c = random_element(rng, order);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Cyclotomic, LiftingCommutesWithOperations) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    const Cyclotomic a = random_element(rng, 24), b = random_element(rng, 24);
    EXPECT_EQ((a * b).lifted(120), a.lifted(120) * b.lifted(120));
    EXPECT_EQ((a + b).lifted(48), a.lifted(48) + b.lifted(48));
    EXPECT_EQ(a, a.lifted(48));
    // mixed orders meet at the lcm
    const Cyclotomic c = random_element(rng, 40);
    EXPECT_EQ((a * c).order() % 120, 0);
    EXPECT_EQ(a * c, a.lifted(120) * c.lifted(120));
  }
}

TEST(Cyclotomic, ToComplexAgreesWithPowerSum) {
  std::mt19937_64 rng(3);
  for (int order : {8, 24, 120, 240}) {
    for (int it = 0; it < 5; ++it) {
      std::uniform_int_distribution<int> c(-9, 9);
      std::vector<Rational> coeffs(order);
      std::complex<long double> ref = 0;
      for (int k = 0; k < order; ++k) {
        coeffs[k] = Rational(c(rng), 7);
        ref += std::polar<long double>(1.0L, 2.0L * 3.14159265358979323846264338L * k / order) *
               static_cast<long double>(coeffs[k].to_double());
      }
      const auto v = Cyclotomic::from_coefficients(order, coeffs).to_complex();
      EXPECT_NEAR(v.real(), static_cast<double>(ref.real()), 1e-12);
      EXPECT_NEAR(v.imag(), static_cast<double>(ref.imag()), 1e-12);
    }
  }
}

TEST(Cyclotomic, ConjugateAndExponent) {
  const Cyclotomic z = Cyclotomic::root_of_unity(5, 24);
  EXPECT_TRUE((z * z.conj()).is_one());
  ASSERT_TRUE(z.root_of_unity_exponent().has_value());
  EXPECT_EQ(*z.root_of_unity_exponent(), 5);
  EXPECT_FALSE(Cyclotomic::sqrt_two().root_of_unity_exponent().has_value());
  EXPECT_EQ(Cyclotomic::exp_i_pi(Rational(2, 3)), Cyclotomic::root_of_unity(1, 3));
}

TEST(ExactRank, Examples) {
  EXPECT_EQ(rank(ExactMatrix::identity(4)), 4u);
  // printed P2 and R
  const ExactMatrix p2 = rational_matrix(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1});
  EXPECT_EQ(rank(p2), 3u);
  const Rational h(1, 2);
  const ExactMatrix r = rational_matrix(4, 4, {1, 0, 0, 0, 0, h, h, 0, 0, h, h, 0, 0, 0, 0, 1});
  EXPECT_EQ(rank(r), 3u);
  EXPECT_EQ(rank(ExactMatrix(3, 5)), 0u);
}

TEST(ExactRank, ProductBound) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> k(1, 4), s(0, 7), c(-2, 2);
  for (int it = 0; it < 15; ++it) {
    // low-rank factors built as sums of outer products
    auto make = [&](std::size_t rows, std::size_t cols) {
      const int terms = k(rng);
      ExactMatrix m(rows, cols);
      for (int t = 0; t < terms; ++t) {
        std::vector<Cyclotomic> u(rows), v(cols);
        for (auto& x : u) x = Cyclotomic::root_of_unity(s(rng), 8) * Cyclotomic(c(rng));
        for (auto& x : v) x = Cyclotomic::root_of_unity(s(rng), 8) + Cyclotomic(c(rng));
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < cols; ++j) m(i, j) += u[i] * v[j];
      }
      return m;
    };
    const ExactMatrix a = make(5, 4), b = make(4, 6);
    EXPECT_LE(rank(a * b), std::min(rank(a), rank(b)));
    EXPECT_EQ(rank(a), rank(to_float(a)));
  }
}

}  // namespace
}  // namespace zxv
