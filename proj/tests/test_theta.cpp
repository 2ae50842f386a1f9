/*
Copyright 2026 The thetaq Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include <gtest/gtest.h>

#include "support.hpp"
#include "thetaq/errors.hpp"
#include "thetaq/etaq.hpp"
#include "thetaq/identities.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {
namespace {

using testing::field;
using testing::num;
using testing::series;

Rat R(long p, long q = 1) { return make_rat(p, q); }

PiSeries constant_theta(Rat e, Rat ep, int scale = 1, Rat trunc = 20) {
  return theta_const(field(), {e, ep}, scale, trunc);
}

TEST(Characteristic, ParseAndRender) {
  Characteristic ch = Characteristic::parse("1,2/10");
  EXPECT_EQ(ch, (Characteristic{1, R(1, 5)}));
  EXPECT_EQ(ch.to_string(), "1,1/5");
  EXPECT_THROW(Characteristic::parse("1"), std::invalid_argument);
  EXPECT_EQ((Characteristic{1, R(1, 5)}).phase_order(), 20);
  EXPECT_EQ((Characteristic{0, 0}).phase_order(), 1);
}

TEST(Theta, ConstantExamples) {
  EXPECT_EQ(constant_theta(0, 0, 1, 5), series({{0, 1}, {R(1, 2), 2}, {2, 2}, {R(9, 2), 2}}, 5));
  // 2 q^(1/8) (1 + q + q^3 + q^6 + ...)
  EXPECT_EQ(constant_theta(1, 0, 1, 7),
            series({{R(1, 8), 2}, {R(9, 8), 2}, {R(25, 8), 2}, {R(49, 8), 2}}, 7));
  EXPECT_TRUE(constant_theta(1, 1).empty());
  // leading coefficient of theta[1,1/2] has absolute value sqrt2
  const PiSeries h = constant_theta(1, R(1, 2));
  EXPECT_NEAR(std::norm(h.terms().front().coeff.to_complex()), 2.0, 1e-9);
  EXPECT_EQ(h.terms().front().exponent, R(1, 8));
}

TEST(Theta, PrimeOfOddCharacteristic) {
  // -2 pi q^(1/8) (q;q)^3 and the explicit 1 - 3q + 5q^3 - 7q^6
  const PiSeries d = theta_prime(field(), {1, 1}, 1, 20);
  const PiSeries cube = pochhammer(field(), 1, 3, 20).shifted(R(1, 8)).scaled(-2).times_pi(1);
  EXPECT_EQ(d, cube.truncated(d.trunc()));
  EXPECT_EQ(d.truncated(7), series({{R(1, 8), -2}, {R(9, 8), 6}, {R(25, 8), -10}, {R(49, 8), 14}}, 7, 1));
  EXPECT_TRUE(theta_prime(field(), {0, 0}, 1, 20).empty());
  EXPECT_EQ(theta_double_prime(field(), {0, 0}, 1, 20).grade(), 2);
}

TEST(Theta, JetCoefficientsHaveGradeK) {
  const ZJet j = theta_jet(field(), {{1, R(1, 3)}, 1, 5, 10});
  EXPECT_EQ(j.z_order(), 5);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(j[k].grade(), k);
}

TEST(Theta, SumEqualsProduct) {
  for (const auto& ch : registry_characteristics()) {
    for (int scale : {1, 2}) {
      const PiSeries sum = theta_const(field(), ch, scale, 30);
      const PiSeries prod = theta_triple_product(field(), {ch, scale, 0, 30});
      EXPECT_EQ(sum, prod) << ch.to_string() << " scale " << scale;
    }
  }
  EXPECT_THROW(theta_triple_product(field(), {{3, 0}, 1, 0, 10}), std::invalid_argument);
}

TEST(Theta, ParityLaw) {
  for (const auto& ch : registry_characteristics()) {
    const ZJet a = theta_jet(field(), {ch, 1, 4, 15});
    const ZJet b = theta_jet(field(), {{-ch.eps, -ch.eps_prime}, 1, 4, 15});
    for (int k = 0; k <= 4; ++k) {
      EXPECT_EQ(b[k], k % 2 ? -a[k] : a[k]) << ch.to_string() << " k=" << k;
    }
  }
}

TEST(Theta, ShiftLaw) {
  for (const auto& ch : registry_characteristics()) {
    const PiSeries base = theta_const(field(), ch, 1, 15);
    for (long m = -1; m <= 1; ++m) {
      for (long n = -1; n <= 1; ++n) {
        const PiSeries moved = theta_const(field(), {ch.eps + 2 * m, ch.eps_prime + 2 * n}, 1, 15);
        EXPECT_EQ(moved, base.scaled(shift_factor(field(), ch, n)))
            << ch.to_string() << " m=" << m << " n=" << n;
      }
    }
  }
}

TEST(Theta, HeatEquation) {
  for (const auto& ch : registry_characteristics()) {
    const ZJet r = heat_residual(field(), ch, 4, 20);
    EXPECT_EQ(r.z_order(), 2);
    EXPECT_TRUE(zero_test(r).zero) << ch.to_string();
  }
  EXPECT_THROW(heat_residual(field(), {0, 0}, 1, 10), std::invalid_argument);
}

TEST(Theta, UnsupportedCharacteristic) {
  EXPECT_THROW(theta_const(field(), {1, R(1, 7)}, 1, 5), EmbeddingError);
  EXPECT_NO_THROW(theta_const(CyclotomicField::of(1680), {1, R(1, 7)}, 1, 5));
}

TEST(Theta, FieldIndependence) {
  // the same theta constant over Q(zeta_480) embeds to the same complex coefficients
  const auto& big = CyclotomicField::of(480);
  const PiSeries a = constant_theta(1, R(1, 5), 1, 8);
  const PiSeries b = theta_const(big, {1, R(1, 5)}, 1, 8);
  ASSERT_EQ(a.terms().size(), b.terms().size());
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    EXPECT_EQ(a.terms()[i].exponent, b.terms()[i].exponent);
    EXPECT_LT(std::abs(a.terms()[i].coeff.to_complex() - b.terms()[i].coeff.to_complex()), 1e-9);
  }
}

}  // namespace
}  // namespace thetaq
