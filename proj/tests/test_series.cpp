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

namespace thetaq {
namespace {

using testing::field;
using testing::num;
using testing::series;

Rat R(long p, long q = 1) { return make_rat(p, q); }

TEST(PiSeries, Addition) {
  EXPECT_TRUE(zero_test(series({{0, 1}, {1, 1}}, 10) + series({{0, -1}, {1, -1}}, 10)).zero);
  EXPECT_EQ(series({{R(1, 8), 1}}, 10) + series({{R(1, 8), 1}}, 10), series({{R(1, 8), 2}}, 10));
  EXPECT_THROW(series({{0, 1}}, 10, 1) + series({{0, 1}}, 10, 0), GradeMismatchError);
  // the zero series is grade-polymorphic
  EXPECT_NO_THROW(series({{0, 1}}, 10, 1) + PiSeries(field(), 0, 10));
  EXPECT_EQ((series({{0, 1}}, 10) + series({{0, 1}}, 5)).trunc(), 5);
}

TEST(PiSeries, Multiplication) {
  std::vector<std::pair<Rat, long>> geom;
  for (long n = 0; n < 20; ++n) geom.push_back({n, 1});
  PiSeries p = series({{0, 1}, {1, -1}}, 20) * series(geom, 20);
  EXPECT_EQ(p, series({{0, 1}}, 20));

  EXPECT_EQ(series({{R(1, 8), 1}}, 10) * series({{R(1, 8), 1}}, 10), series({{R(1, 4), 1}}, R(81, 8)));

  PiSeries a = series({{0, 1}, {R(1, 2), 2}, {2, 2}}, 5);
  EXPECT_EQ(a * a, series({{0, 1}, {R(1, 2), 4}, {1, 4}, {2, 4}, {R(5, 2), 8}, {4, 4}}, 5));
  EXPECT_EQ((a * a).grade(), 0);
  EXPECT_EQ((series({{0, 1}}, 5, 1) * series({{0, 1}}, 5, 2)).grade(), 3);
}

TEST(PiSeries, TruncationOfProducts) {
  // a known below 10 starting at q^2, b known below 4 starting at q^1
  PiSeries a = series({{2, 1}, {3, 1}}, 10), b = series({{1, 1}}, 4);
  EXPECT_EQ((a * b).trunc(), 6);
  EXPECT_EQ((a * PiSeries(field(), 0, 4)).trunc(), 6);
}

TEST(PiSeries, Inverse) {
  std::vector<std::pair<Rat, long>> geom;
  for (long n = 0; n < 12; ++n) geom.push_back({n, 1});
  EXPECT_EQ(inverse(series({{0, 1}, {1, -1}}, 12)), series(geom, 12));

  PiSeries i = inverse(series({{R(1, 8), 1}}, 10));
  EXPECT_EQ(i.terms().size(), 1u);
  EXPECT_EQ(i.terms()[0].exponent, R(-1, 8));

  std::vector<Term> expect;
  Rat c = R(1, 2);
  for (long n = 0; n < 8; ++n, c *= R(-1, 2)) expect.push_back({n, field().from_rat(c)});
  EXPECT_EQ(inverse(series({{0, 2}, {1, 1}}, 8)), PiSeries::from_terms(field(), 0, 8, expect));

  EXPECT_THROW(inverse(PiSeries(field(), 0, 8)), NonInvertibleError);
  EXPECT_EQ(inverse(series({{0, 1}}, 8, 2)).grade(), -2);
}

TEST(PiSeries, Derivation) {
  EXPECT_EQ(q_ddq(series({{3, 1}}, 10)), series({{3, 3}}, 10));
  EXPECT_TRUE(q_ddq(series({{0, 7}}, 10)).empty());
  EXPECT_EQ(q_ddq(series({{R(1, 8), 1}}, 10)),
            PiSeries::monomial(field().from_rat(R(1, 8)), R(1, 8), 0, 10));
}

TEST(PiSeries, ScaleQ) {
  EXPECT_EQ(scale_q(series({{0, 1}, {1, 1}}, 10), 2), series({{0, 1}, {2, 1}}, 20));
  EXPECT_EQ(scale_q(series({{R(1, 8), 1}}, 10), 2), series({{R(1, 4), 1}}, 20));
  PiSeries e2 = scale_q(eisenstein(field(), Eisenstein::E2, 10), 5);
  EXPECT_EQ(e2.trunc(), 50);
  EXPECT_EQ(e2.terms().size(), 10u);
  for (const auto& t : e2.terms()) {
    EXPECT_EQ(t.exponent.get_den(), 1);
    EXPECT_EQ(t.exponent.get_num() % 5, 0);
  }
}

TEST(PiSeries, Powers) {
  PiSeries a = series({{0, 1}, {1, 1}}, 10);
  EXPECT_EQ(pow(a, 2), series({{0, 1}, {1, 2}, {2, 1}}, 10));
  EXPECT_EQ(pow(a, 0), series({{0, 1}}, 10));
  EXPECT_EQ(pow(a, -1), inverse(a));
  EXPECT_EQ(pow(series({{R(1, 8), 1}}, 10), 3).grade(), 0);
  EXPECT_EQ(pow(series({{0, 1}}, 10, 1), 3).grade(), 3);
}

TEST(PiSeries, ZeroTest) {
  EXPECT_TRUE(zero_test(PiSeries(field(), 0, 50)).zero);
  ZeroTest z = zero_test(series({{49, 1}}, 50));
  ASSERT_FALSE(z.zero);
  EXPECT_EQ(to_fraction(z.witness->exponent), "49/1");
  EXPECT_EQ(z.witness->coeff, num(1));
  EXPECT_THROW(series({{0, 1}}, 5).coeff(5), PrecisionError);
  EXPECT_EQ(series({{0, 1}}, 5).coeff(3), field().zero());
}

TEST(PiSeries, Rendering) {
  EXPECT_EQ(to_string(series({{0, 1}, {R(1, 2), -2}}, 3, 1)), "pi^1 * ( 1 * q^(0) + -2 * q^(1/2) + O(q^(3)) )");
  PiSeries s = PiSeries::monomial(field().imaginary_unit(), 1, 0, 2);
  EXPECT_EQ(to_string(s), "pi^0 * ( (z^60) * q^(1) + O(q^(2)) )");
}

TEST(PiSeriesProperty, RingAxiomsAndInverse) {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 25; ++trial) {
    const Rat T = R(6);
    PiSeries a = testing::random_series(rng, 4, T), b = testing::random_series(rng, 2, T),
             c = testing::random_series(rng, 8, T);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE(zero_test(a - a).zero);

    PiSeries u = testing::random_series(rng, 3, T, true);
    PiSeries one = u * inverse(u);
    EXPECT_EQ(one.truncated(one.trunc()), PiSeries::constant(num(1), 0, one.trunc()));

    EXPECT_EQ(q_ddq(a * b), q_ddq(a) * b + a * q_ddq(b));
    EXPECT_EQ(scale_q(a * b, 3), scale_q(a, 3) * scale_q(b, 3));
  }
}

TEST(PiSeriesProperty, TruncationSafety) {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 10; ++trial) {
    PiSeries a = testing::random_series(rng, 4, R(12)), u = testing::random_series(rng, 2, R(12), true);
    PiSeries low = a.truncated(6) * inverse(u.truncated(6));
    PiSeries high = (a * inverse(u)).truncated(low.trunc());
    EXPECT_EQ(low, high);
    EXPECT_EQ(pow(u.truncated(5), 3), pow(u, 3).truncated(5));
  }
}

TEST(ZJet, Arithmetic) {
  std::mt19937 rng(5);
  std::vector<PiSeries> cs, odd;
  for (int k = 0; k <= 4; ++k) {
    cs.push_back(testing::random_series(rng, 2, 6).times_pi(k));
    odd.push_back(k % 2 ? testing::random_series(rng, 2, 6).times_pi(k) : PiSeries(field(), k, 6));
  }
  ZJet j(cs), o(odd);
  std::vector<PiSeries> ones{PiSeries::constant(num(1), 0, 6)};
  for (int k = 1; k <= 4; ++k) ones.push_back(PiSeries(field(), k, 6));
  EXPECT_TRUE(zero_test(ZJet(ones) * j - j).zero);

  ZJet sq = o * o;
  for (int k = 1; k <= 4; k += 2) EXPECT_TRUE(zero_test(sq[k]).zero);
  EXPECT_EQ(sq.z_order(), 4);
  EXPECT_THROW(ZJet({PiSeries::constant(num(1), 1, 6)}), GradeMismatchError);
}

}  // namespace
}  // namespace thetaq
