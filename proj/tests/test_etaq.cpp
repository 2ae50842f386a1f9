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

#include <thread>

#include "support.hpp"
#include "thetaq/etaq.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {
namespace {

using testing::field;
using testing::integer_coeffs;
using testing::num;

Rat R(long p, long q = 1) { return make_rat(p, q); }

/// Euler's pentagonal numbers: (q;q) = sum (-1)^k q^(k(3k-1)/2), k in Z.
std::vector<mpz_class> pentagonal(long n) {
  std::vector<mpz_class> out(n, 0);
  for (long k = -n; k <= n; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e >= 0 && e < n) out[e] += (k % 2 ? -1 : 1);
  }
  return out;
}

/// Partition numbers by the standard dynamic program over part sizes.
std::vector<mpz_class> partitions(long n) {
  std::vector<mpz_class> p(n, 0);
  p[0] = 1;
  for (long part = 1; part < n; ++part) {
    for (long m = part; m < n; ++m) p[m] += p[m - part];
  }
  return p;
}

/// sum_{d | n} d^k via a sieve over multiples (independent of trial division).
std::vector<mpz_class> divisor_sums(unsigned k, long n) {
  std::vector<mpz_class> out(n, 0);
  for (long d = 1; d < n; ++d) {
    mpz_class dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
    for (long m = d; m < n; m += d) out[m] += dk;
  }
  return out;
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(integer_coeffs(pochhammer(field(), 1, 1, 60), 60), pentagonal(60));
  EXPECT_EQ(integer_coeffs(pochhammer(field(), 1, -1, 60), 60), partitions(60));
  EXPECT_EQ(pochhammer(field(), 2, 3, 40), pow(pochhammer(field(), 2, 1, 40), 3));
  EXPECT_EQ(pochhammer(field(), 3, -2, 40), inverse(pow(pochhammer(field(), 3, 1, 40), 2)));
  EXPECT_EQ(integer_coeffs(pochhammer(field(), 1, 0, 10), 10)[0], 1);
}

TEST(Pochhammer, CubeMatchesThetaPrime) {
  const PiSeries d = theta_prime(field(), {1, 1}, 1, 30);
  const PiSeries expected = d.scaled(make_rat(-1, 2)).times_pi(-1).shifted(R(-1, 8));
  EXPECT_EQ(pochhammer(field(), 1, 3, expected.trunc()), expected);
}

TEST(EtaQuotient, ParseAndValidate) {
  EtaQuotient q = EtaQuotient::parse("1^2,2,4^3,8^-2");
  ASSERT_EQ(q.factors().size(), 4u);
  EXPECT_EQ(q.factors()[1].scale, 2);
  EXPECT_EQ(q.factors()[1].exponent, 1);
  EXPECT_EQ(q.leading_exponent(), 0);
  EXPECT_EQ(q.to_string(), "1^2,2^1,4^3,8^-2");
  EXPECT_THROW(EtaQuotient::parse("1^2,1^3"), std::invalid_argument);
  EXPECT_THROW(EtaQuotient::parse("2^0"), std::invalid_argument);
  EXPECT_THROW(EtaQuotient::parse("x"), std::invalid_argument);
  EXPECT_EQ(EtaQuotient::parse("1").leading_exponent(), R(1, 24));
}

TEST(EtaQuotient, Series) {
  const PiSeries eta = eta_series(field(), EtaQuotient::parse("1"), 10);
  EXPECT_EQ(eta.valuation(), R(1, 24));
  EXPECT_EQ(eta.shifted(R(-1, 24)), pochhammer(field(), 1, 1, eta.trunc() - R(1, 24)));

  const PiSeries level4 = eta_series(field(), EtaQuotient::parse("2^3,1^-2,4^-1"), 10);
  EXPECT_EQ(level4.coeff(0), num(1));

  for (int k : {2, 3, 5}) {
    const PiSeries a = eta_series(field(), EtaQuotient({{k, 1}}), 20);
    const PiSeries b = scale_q(eta_series(field(), EtaQuotient({{1, 1}}), 20), k);
    EXPECT_EQ(a, b.truncated(a.trunc()));
  }
}

TEST(EtaQuotient, TwistedCharacterSeries) {
  const long n = 80;
  const auto c = integer_coeffs(eta_series(field(), EtaQuotient::parse("1^2,2,4^3,8^-2"), n), n);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], -2);
  for (long m = 1; m < n; ++m) {
    mpz_class s = 0;
    for (long d = 1; d <= m; ++d) {
      if (m % d) continue;
      const long r = d % 8;
      s += d * (r == 1 || r == 7 ? 1 : r == 3 || r == 5 ? -1 : 0);
    }
    EXPECT_EQ(c[m], -2 * s) << m;
  }
}

TEST(Arith, Sigma) {
  EXPECT_EQ(sigma(1, 1), 1);
  EXPECT_EQ(sigma(1, 6), 12);
  EXPECT_EQ(sigma(3, 2), 9);
  EXPECT_THROW(sigma(1, 0), std::domain_error);
  const auto oracle = divisor_sums(5, 300);
  for (long m = 1; m < 300; ++m) EXPECT_EQ(sigma(5, m), oracle[m]);
}

TEST(Arith, Kron8) {
  EXPECT_EQ(kron8(1), 1);
  EXPECT_EQ(kron8(3), -1);
  EXPECT_EQ(kron8(4), 0);
  EXPECT_EQ(kron8(5), -1);
  EXPECT_EQ(kron8(7), 1);
  EXPECT_EQ(kron8(15), 1);
  // completely multiplicative
  for (long a = 1; a < 40; ++a) {
    for (long b = 1; b < 40; ++b) EXPECT_EQ(kron8(a * b), kron8(a) * kron8(b));
  }
  EXPECT_EQ(kron8_twist(1), 1);
  EXPECT_EQ(kron8_twist(3), -2);
  EXPECT_EQ(kron8_cotwist(1), 1);
}

TEST(Arith, T4) {
  EXPECT_EQ(t4_count(0), 1);
  EXPECT_EQ(t4_count(1), 4);
  EXPECT_EQ(t4_count(5), 12);
  for (long n = 0; n <= 200; ++n) EXPECT_EQ(mpz_class(t4_count(n)), sigma(1, 2 * n + 1)) << n;
}

TEST(Arith, ThetaFourthPowerCountsTriangulars) {
  const PiSeries t = pow(theta_const(field(), {1, 0}, 2, 120), 4);
  std::vector<Term> expect;
  for (long n = 0; 2 * n + 1 < 120; ++n) expect.push_back({2 * n + 1, num(16 * t4_count(n))});
  EXPECT_GE(t.trunc(), 120);
  EXPECT_EQ(t.truncated(120), PiSeries::from_terms(field(), 0, 120, expect));
}

TEST(Eisenstein, Coefficients) {
  const long n = 60;
  const auto e2 = integer_coeffs(eisenstein(field(), Eisenstein::E2, n), n);
  const auto e4 = integer_coeffs(eisenstein(field(), Eisenstein::E4, n), n);
  const auto e6 = integer_coeffs(eisenstein(field(), Eisenstein::E6, n), n);
  EXPECT_EQ(std::vector<mpz_class>(e2.begin(), e2.begin() + 4), (std::vector<mpz_class>{1, -24, -72, -96}));
  EXPECT_EQ(std::vector<mpz_class>(e4.begin(), e4.begin() + 3), (std::vector<mpz_class>{1, 240, 2160}));
  EXPECT_EQ(std::vector<mpz_class>(e6.begin(), e6.begin() + 3), (std::vector<mpz_class>{1, -504, -16632}));
  const auto s1 = divisor_sums(1, n), s3 = divisor_sums(3, n), s5 = divisor_sums(5, n);
  for (long m = 1; m < n; ++m) {
    EXPECT_EQ(e2[m], -24 * s1[m]);
    EXPECT_EQ(e4[m], 240 * s3[m]);
    EXPECT_EQ(e6[m], -504 * s5[m]);
  }
}

TEST(Eisenstein, E4SquaredIsE8) {
  // E4^2 = 1 + 480 sum sigma_7(n) q^n
  const long n = 40;
  const auto e4sq = integer_coeffs(pow(eisenstein(field(), Eisenstein::E4, n), 2), n);
  const auto s7 = divisor_sums(7, n);
  EXPECT_EQ(e4sq[0], 1);
  for (long m = 1; m < n; ++m) EXPECT_EQ(e4sq[m], 480 * s7[m]);
}

TEST(ArithFn, MemoizedAndThreadSafe) {
  const ArithFn t4 = ArithFn::t4();
  const ArithFn s3 = ArithFn::sigma_k(3);
  std::vector<std::thread> pool;
  std::vector<int> ok(4, 1);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (long n = 1; n < 60; ++n) {
        if (t4(n) != sigma(1, 2 * n + 1) || s3(n) != sigma(3, n)) ok[t] = 0;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int v : ok) EXPECT_EQ(v, 1);
  EXPECT_EQ(ArithFn::kron8()(3), -1);
  EXPECT_EQ(t4.kind(), ArithFn::Kind::T4);
}

}  // namespace
}  // namespace thetaq
