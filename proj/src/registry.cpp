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
#include <algorithm>
#include <numeric>
#include <fnmatch.h>

#include "thetaq/identities.hpp"

namespace thetaq {
namespace {

Rat F(long p, long q = 1) { return make_rat(p, q); }

PiSeries sq(const PiSeries& a) { return a * a; }

Residual single(PiSeries r, PiSeries probe) {
  Residual out{{}, std::move(probe)};
  out.parts.emplace_back(std::move(r));
  return out;
}

/// sum_{n >= start, n < trunc} f(n) q^n
template <class Fn>
PiSeries integer_series(const Workspace& w, long start, Fn f) {
  std::vector<Term> terms;
  for (long n = start; Rat(n) < w.trunc(); ++n) {
    mpz_class c = f(n);
    if (c != 0) terms.push_back({Rat(n), w.field().from_rat(Rat(c))});
  }
  return PiSeries::from_terms(w.field(), 0, w.trunc(), std::move(terms));
}

/// theta''_a theta_b - theta''_b theta_a
PiSeries second_difference(Workspace& w, const Rat& a, const Rat& b) {
  return w.th2(1, a) * w.th(1, b) - w.th2(1, b) * w.th(1, a);
}

/// theta_a theta_b (theta''_a theta_b - theta''_b theta_a) - theta'_a^2 theta_b^2 + theta'_b^2 theta_a^2,
/// the part of the z^2 coefficient that does not involve theta'[1,1].
PiSeries z2_left(Workspace& w, const Rat& a, const Rat& b) {
  const PiSeries& ta = w.th(1, a);
  const PiSeries& tb = w.th(1, b);
  return ta * tb * second_difference(w, a, b) - sq(w.th1(1, a) * tb) + sq(w.th1(1, b) * ta);
}

PiSeries theta11_prime_sq(Workspace& w) { return sq(w.th1(1, 1)); }

// Products of (q^k; q^k)^r used by several levels.
PiSeries level4_p(Workspace& w) { return w.poch({{2, 3}, {1, -2}, {4, -1}}); }
PiSeries level4_q(Workspace& w) { return w.poch({{4, 7}, {1, -2}, {2, -1}}); }
PiSeries level5_g(Workspace& w) { return w.poch({{1, 5}, {5, -1}}); }
PiSeries level6_e(Workspace& w) { return w.poch({{1, 2}, {3, 2}, {2, -1}, {6, -1}}); }
PiSeries level6_w(Workspace& w) { return w.poch({{2, 1}, {3, 2}, {1, -2}, {6, -1}}); }
PiSeries level8_p(Workspace& w) { return w.poch({{1, 2}, {2, 1}, {4, 3}, {8, -2}}); }

PiSeries theta_ratio(Workspace& w, const Rat& a, const Rat& b, long n) {
  return pow(w.th(1, a), n) * inverse(pow(w.th(1, b), n));
}

Residual riccati(Workspace& w, const RiccatiSpec& spec) {
  return single(riccati_residual(spec, w), spec.w(w));
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;
  auto add = [&defs](std::string id, std::string statement,
                     std::function<Residual(Workspace&, bool)> build, bool z_jet = false) {
    defs.push_back({std::move(id), std::move(statement), z_jet, std::move(build), {}});
  };
  const Rat h = F(1, 2);

  add("jacobi_derivative", "theta'[1,1] = -pi theta[0,0] theta[1,0] theta[0,1]",
      [](Workspace& w, bool p) {
        PiSeries rhs = (w.th(0, 0) * w.th(1, 0) * w.th(0, 1)).times_pi(1);
        return single(w.th1(1, 1) + rhs.scaled(p ? -1 : 1), w.th1(1, 1));
      });

  add("jacobi_quartic", "theta^4[0,0] = theta^4[0,1] + theta^4[1,0]", [](Workspace& w, bool p) {
    PiSeries a = pow(w.th(0, 0), 4);
    return single(a - pow(w.th(0, 1), 4).scaled(p ? -1 : 1) - pow(w.th(1, 0), 4), a);
  });

  add("farkas_kra_00_00", "theta^2[0,0](tau) = theta^2[0,0](2 tau) + theta^2[1,0](2 tau)",
      [](Workspace& w, bool p) {
        PiSeries a = sq(w.th(0, 0));
        PiSeries shifted = sq(w.th(1, 0, 2));
        return single(a - sq(w.th(0, 0, 2)) - (p ? shifted.scaled(-1) : shifted), a);
      });

  add("farkas_kra_01_01", "theta^2[0,1](tau) = theta^2[0,0](2 tau) - theta^2[1,0](2 tau)",
      [](Workspace& w, bool p) {
        PiSeries a = sq(w.th(0, 1));
        PiSeries shifted = sq(w.th(1, 0, 2));
        return single(a - sq(w.th(0, 0, 2)) + (p ? shifted.scaled(-1) : shifted), a);
      });

  add("farkas_kra_00_01", "theta^2[0,1](2 tau) = theta[0,0](tau) theta[0,1](tau)",
      [](Workspace& w, bool p) {
        PiSeries a = sq(w.th(0, 1, 2));
        return single(a - w.th(0, 0) * (p ? w.th(0, 0) : w.th(0, 1)), a);
      });

  // Bivariate identities, checked coefficientwise in z.
  add("prop3_1",
      "theta^2[1,1/2] theta^2[1,0](z) + theta^2[1,0] theta[1,1/2](z) theta[1,3/2](z)"
      " - theta^2[1,1/2] theta^2[1,1](z) = 0",
      [h](Workspace& w, bool p) {
        const ZJet& j10 = w.jet(1, 0);
        ZJet r = (j10 * j10).scaled(sq(w.th(1, h))) +
                 (w.jet(1, h) * w.jet(1, F(3, 2))).scaled(sq(w.th(1, 0))) -
                 (w.jet(1, 1) * w.jet(1, 1)).scaled(sq(w.th(1, h)).scaled(p ? -1 : 1));
        Residual out{{}, j10[0]};
        out.parts.emplace_back(std::move(r));
        return out;
      },
      true);

  // theta^2_b jet_a jet_(2-a) - theta^2_a jet_b jet_(2-b) + c theta^2[1,1](z)
  auto bivariate = [&add](std::string id, std::string statement, Rat a, Rat b,
                          std::function<PiSeries(Workspace&)> c) {
    add(std::move(id), std::move(statement),
        [a, b, c](Workspace& w, bool p) {
          ZJet r = (w.jet(1, a) * w.jet(1, 2 - a)).scaled(sq(w.th(1, b))) -
                   (w.jet(1, b) * w.jet(1, 2 - b)).scaled(sq(w.th(1, a))) +
                   (w.jet(1, 1) * w.jet(1, 1)).scaled(c(w).scaled(p ? -1 : 1));
          Residual out{{}, w.jet(1, a)[0]};
          out.parts.emplace_back(std::move(r));
          return out;
        },
        true);
  };
  bivariate("prop3_2",
            "theta^2[1,2/3] theta[1,1/3](z) theta[1,5/3](z) - theta^2[1,1/3] theta[1,2/3](z)"
            " theta[1,4/3](z) + theta[1,0] theta[1,2/3] theta^2[1,1](z) = 0",
            F(1, 3), F(2, 3), [](Workspace& w) { return w.th(1, 0) * w.th(1, F(2, 3)); });
  bivariate("prop3_3",
            "theta^2[1,3/4] theta[1,1/4](z) theta[1,7/4](z) - theta^2[1,1/4] theta[1,3/4](z)"
            " theta[1,5/4](z) + theta[1,0] theta[1,1/2] theta^2[1,1](z) = 0",
            F(1, 4), F(3, 4), [h](Workspace& w) { return w.th(1, 0) * w.th(1, h); });
  bivariate("prop3_4",
            "theta^2[1,3/5] theta[1,1/5](z) theta[1,9/5](z) - theta^2[1,1/5] theta[1,3/5](z)"
            " theta[1,7/5](z) + theta[1,1/5] theta[1,3/5] theta^2[1,1](z) = 0",
            F(1, 5), F(3, 5), [](Workspace& w) { return w.th(1, F(1, 5)) * w.th(1, F(3, 5)); });

  add("thm4_1", "theta'[1,1/2] = -pi theta^2[0,0](2 tau) theta[1,1/2]", [h](Workspace& w, bool p) {
    PiSeries rhs = (sq(w.th(0, 0, 2)) * w.th(1, h)).times_pi(1);
    return single(w.th1(1, h) + rhs.scaled(p ? -1 : 1), w.th1(1, h));
  });

  add("thm4_2",
      "theta'[1,1/3]/theta[1,1/3] = theta'[1,1] (theta^4[1,1/3] - 3 theta^4[1,2/3])"
      " / (6 theta[1,0] theta[1,1/3] theta^3[1,2/3]);"
      " theta'[1,2/3]/theta[1,2/3] = theta'[1,1] theta^4[1,1/3]"
      " / (3 theta[1,0] theta[1,1/3] theta^3[1,2/3])",
      [](Workspace& w, bool p) {
        const Rat a = F(1, 3), b = F(2, 3);
        const PiSeries& ta = w.th(1, a);
        const PiSeries& tb = w.th(1, b);
        const PiSeries& t10 = w.th(1, 0);
        const PiSeries& d = w.th1(1, 1);
        PiSeries a4 = pow(ta, 4), b4 = pow(tb, 4);
        PiSeries r1 = (w.th1(1, a) * t10 * tb * sq(tb)).scaled(p ? 3 : 6) - d * (a4 - b4.scaled(3));
        PiSeries r2 = (w.th1(1, b) * t10 * ta * sq(tb)).scaled(3) - d * a4;
        Residual out{{}, w.th1(1, a)};
        out.parts.emplace_back(std::move(r1));
        out.parts.emplace_back(std::move(r2));
        return out;
      });

  add("thm4_3",
      "theta'[1,1/4]/theta[1,1/4] = -pi/2 (theta^2[0,0](2 tau)"
      " - theta^2[0,1](2 tau) theta^2[1,3/4]/theta^2[1,1/4])",
      [](Workspace& w, bool p) {
        const Rat a = F(1, 4), b = F(3, 4);
        PiSeries rhs = (sq(w.th(0, 0, 2)) * sq(w.th(1, a)) -
                        sq(w.th(0, 1, 2)) * sq(w.th(1, b)).scaled(p ? -1 : 1))
                           .times_pi(1);
        return single((w.th1(1, a) * w.th(1, a)).scaled(2) + rhs, w.th1(1, a));
      });

  add("thm4_4",
      "theta'[1,3/4]/theta[1,3/4] = -pi/2 (-theta^2[0,0](2 tau)"
      " + theta^2[0,1](2 tau) theta^2[1,1/4]/theta^2[1,3/4])",
      [](Workspace& w, bool p) {
        const Rat a = F(1, 4), b = F(3, 4);
        PiSeries rhs = (sq(w.th(0, 1, 2)) * sq(w.th(1, a)) -
                        sq(w.th(0, 0, 2)) * sq(w.th(1, b)).scaled(p ? -1 : 1))
                           .times_pi(1);
        return single((w.th1(1, b) * w.th(1, b)).scaled(2) + rhs, w.th1(1, b));
      });

  add("thm4_5",
      "theta'[1,1/5]/theta[1,1/5] = theta'[1,1] (theta^5[1,1/5] - 3 theta^5[1,3/5])"
      " / (10 theta^3[1,1/5] theta^3[1,3/5]);"
      " theta'[1,3/5]/theta[1,3/5] = theta'[1,1] (3 theta^5[1,1/5] + theta^5[1,3/5])"
      " / (10 theta^3[1,1/5] theta^3[1,3/5])",
      [](Workspace& w, bool p) {
        const Rat a = F(1, 5), b = F(3, 5);
        const PiSeries& ta = w.th(1, a);
        const PiSeries& tb = w.th(1, b);
        const PiSeries& d = w.th1(1, 1);
        PiSeries a5 = pow(ta, 5), b5 = pow(tb, 5);
        const long c = p ? 1 : 3;
        PiSeries r1 = (w.th1(1, a) * sq(ta) * pow(tb, 3)).scaled(10) - d * (a5 - b5.scaled(c));
        PiSeries r2 = (w.th1(1, b) * pow(ta, 3) * sq(tb)).scaled(10) - d * (a5.scaled(c) + b5);
        Residual out{{}, w.th1(1, a)};
        out.parts.emplace_back(std::move(r1));
        out.parts.emplace_back(std::move(r2));
        return out;
      });

  // Level 4.
  add("level4_second_derivative",
      "theta''[1,0]/theta[1,0] - theta''[1,1/2]/theta[1,1/2] + pi^2 theta^4[1,0](2 tau) = 0",
      [h](Workspace& w, bool p) {
        const PiSeries& t10 = w.th(1, 0);
        const PiSeries& th_ = w.th(1, h);
        PiSeries r = w.th2(1, 0) * th_ - w.th2(1, h) * t10 +
                     (pow(w.th(1, 0, 2), 4) * t10 * th_).times_pi(2).scaled(p ? -1 : 1);
        return single(r, w.th2(1, 0));
      });

  add("level4_z2_relation",
      "theta''[1,0]/theta[1,0] - theta''[1,1/2]/theta[1,1/2]"
      " = (theta'[1,1]/theta[1,0])^2 - (theta'[1,1/2]/theta[1,1/2])^2",
      [h](Workspace& w, bool p) {
        const PiSeries& t10 = w.th(1, 0);
        const PiSeries& th_ = w.th(1, h);
        PiSeries r = t10 * th_ * (w.th2(1, 0) * th_ - w.th2(1, h) * t10) -
                     (theta11_prime_sq(w) * sq(th_)).scaled(p ? -1 : 1) +
                     sq(w.th1(1, h) * t10);
        return single(r, w.th2(1, 0));
      });

  add("level4_product_forms",
      "theta[1,0]/theta[1,1/2] = sqrt2 (q^2;q^2)^3 / ((q;q)^2 (q^4;q^4));"
      " theta^4[1,0](2 tau) theta[1,0]/theta[1,1/2]"
      " = 16 sqrt2 q (q^4;q^4)^7 / ((q;q)^2 (q^2;q^2))",
      [h](Workspace& w, bool p) {
        const Cyc s2 = w.sqrt(2);
        const PiSeries& t10 = w.th(1, 0);
        const PiSeries& th_ = w.th(1, h);
        PiSeries r1 = t10 - (level4_p(w) * th_).scaled(p ? s2 * F(1, 2) : s2);
        PiSeries r2 = pow(w.th(1, 0, 2), 4) * t10 -
                      (level4_q(w) * th_).shifted(1).scaled(s2 * F(16));
        Residual out{{}, t10};
        out.parts.emplace_back(std::move(r1));
        out.parts.emplace_back(std::move(r2));
        return out;
      });

  defs.push_back(
      {"t4_theorem",
       "t4(n) = sigma(2n+1) for 0 <= n <= N, and theta^4[1,0](2 tau) = 16 sum t4(n) q^(2n+1)",
       false,
       [](Workspace& w, bool p) {
         static const ArithFn t4 = ArithFn::t4();
         std::vector<Term> diff, counts;
         for (long n = 0; Rat(2 * n + 1) < w.trunc(); ++n) {
           const mpz_class t = t4(n);
           const mpz_class s = sigma(1, p ? 2 * n + 3 : 2 * n + 1);
           if (t != s) diff.push_back({Rat(2 * n + 1), w.field().from_rat(Rat(t - s))});
           counts.push_back({Rat(2 * n + 1), w.field().from_rat(Rat(16 * t))});
         }
         PiSeries count_series = PiSeries::from_terms(w.field(), 0, w.trunc(), std::move(counts));
         PiSeries theta4 = pow(w.th(1, 0, 2), 4);
         Residual out{{}, theta4};
         out.parts.emplace_back(PiSeries::from_terms(w.field(), 0, w.trunc(), std::move(diff)));
         out.parts.emplace_back(theta4 - count_series);
         return out;
       },
       [](const RunConfig& cfg) { return Rat(2 * cfg.t4_range + 2); }});

  add("eta_ode_level4",
      "d/dq [(q^2;q^2)^3 / ((q;q)^2 (q^4;q^4))] = 2 (q^4;q^4)^7 / ((q;q)^2 (q^2;q^2))",
      [](Workspace& w, bool p) {
        PiSeries f = level4_p(w);
        return single(q_ddq(f) - level4_q(w).shifted(1).scaled(p ? 1 : 2), f);
      });

  // Level 5.
  add("level5_second_derivative",
      "theta''[1,1/5]/theta[1,1/5] - theta''[1,3/5]/theta[1,3/5] = theta'[1,1]^2"
      " (-8 A^2 + 88 A B + 8 B^2) / (100 theta^6[1,1/5] theta^6[1,3/5]),"
      " A = theta^5[1,1/5], B = theta^5[1,3/5]",
      [](Workspace& w, bool p) {
        const Rat a = F(1, 5), b = F(3, 5);
        PiSeries A = pow(w.th(1, a), 5), B = pow(w.th(1, b), 5);
        PiSeries poly = sq(A).scaled(-8) + (A * B).scaled(p ? 87 : 88) + sq(B).scaled(8);
        PiSeries r = (A * B * second_difference(w, a, b)).scaled(100) - theta11_prime_sq(w) * poly;
        return single(r, w.th2(1, a));
      });

  add("level5_z2_relation",
      "theta''[1,1/5]/theta[1,1/5] - theta''[1,3/5]/theta[1,3/5]"
      " = (theta'[1,1/5]/theta[1,1/5])^2 - (theta'[1,3/5]/theta[1,3/5])^2"
      " + theta'[1,1]^2 / (theta[1,1/5] theta[1,3/5])",
      [](Workspace& w, bool p) {
        const Rat a = F(1, 5), b = F(3, 5);
        PiSeries r = z2_left(w, a, b) -
                     (theta11_prime_sq(w) * w.th(1, a) * w.th(1, b)).scaled(p ? -1 : 1);
        return single(r, w.th2(1, a));
      });

  add("level5_product_form",
      "theta'[1,1]^2 / (theta[1,1/5] theta[1,3/5]) = (4 / sqrt5) pi^2 (q;q)^5 / (q^5;q^5)",
      [](Workspace& w, bool p) {
        const Cyc c = w.sqrt(5) * F(p ? 3 : 4, 5);
        PiSeries r = theta11_prime_sq(w) -
                     (level5_g(w) * w.th(1, F(1, 5)) * w.th(1, F(3, 5))).scaled(c).times_pi(2);
        return single(r, theta11_prime_sq(w));
      });

  add("riccati_level5",
      "q dW/dq = (1/sqrt5^3) (q;q)^5/(q^5;q^5) (W^2 - 11 W - 1),"
      " W = theta^5[1,1/5]/theta^5[1,3/5]",
      [](Workspace& w, bool p) {
        RiccatiSpec spec{[](Workspace& ws) { return theta_ratio(ws, F(1, 5), F(3, 5), 5); },
                         [](Workspace& ws) { return level5_g(ws).scaled(ws.sqrt(5) * F(1, 25)); },
                         {w.num(-1), w.num(p ? -10 : -11), w.num(1)}};
        return riccati(w, spec);
      });

  // Level 6.
  add("level6_quartic", "theta^3[1,0] theta[1,2/3] - theta^4[1,1/3] + theta^4[1,2/3] = 0",
      [](Workspace& w, bool p) {
        const Rat a = F(1, 3), b = F(2, 3);
        PiSeries r = pow(w.th(1, 0), 3) * w.th(1, b) - pow(w.th(1, a), 4) +
                     pow(w.th(1, b), 4).scaled(p ? -1 : 1);
        return single(r, pow(w.th(1, a), 4));
      });

  add("level6_second_derivative_1",
      "theta''[1,1/3]/theta[1,1/3] - theta''[1,2/3]/theta[1,2/3] = -(1/12) theta'[1,1]^2"
      " (theta^8[1,1/3] - 10 theta^4[1,1/3] theta^4[1,2/3] + 9 theta^8[1,2/3])"
      " / (theta^2[1,0] theta^2[1,1/3] theta^6[1,2/3])",
      [](Workspace& w, bool p) {
        const Rat a = F(1, 3), b = F(2, 3);
        const PiSeries& ta = w.th(1, a);
        const PiSeries& tb = w.th(1, b);
        PiSeries A = pow(ta, 4), B = pow(tb, 4);
        PiSeries poly = sq(A) - (A * B).scaled(10) + sq(B).scaled(p ? 8 : 9);
        PiSeries r = (sq(w.th(1, 0)) * ta * B * tb * second_difference(w, a, b)).scaled(12) +
                     theta11_prime_sq(w) * poly;
        return single(r, w.th2(1, a));
      });

  add("level6_second_derivative_2",
      "theta''[1,1/3]/theta[1,1/3] - theta''[1,2/3]/theta[1,2/3] = -(1/12) theta'[1,1]^2"
      " theta[1,0] (theta^4[1,1/3] - 9 theta^4[1,2/3]) / (theta^2[1,1/3] theta^5[1,2/3])",
      [](Workspace& w, bool p) {
        const Rat a = F(1, 3), b = F(2, 3);
        const PiSeries& ta = w.th(1, a);
        const PiSeries& tb = w.th(1, b);
        PiSeries B = pow(tb, 4);
        PiSeries r = (ta * B * second_difference(w, a, b)).scaled(12) +
                     theta11_prime_sq(w) * w.th(1, 0) * (pow(ta, 4) - B.scaled(p ? 8 : 9));
        return single(r, w.th2(1, a));
      });

  add("level6_factorization",
      "theta^8[1,1/3] - 10 theta^4[1,1/3] theta^4[1,2/3] + 9 theta^8[1,2/3]"
      " = theta^3[1,0] theta[1,2/3] (theta^4[1,1/3] - 9 theta^4[1,2/3])",
      [](Workspace& w, bool p) {
        PiSeries A = pow(w.th(1, F(1, 3)), 4), B = pow(w.th(1, F(2, 3)), 4);
        PiSeries lhs = sq(A) - (A * B).scaled(10) + sq(B).scaled(9);
        PiSeries r = lhs - pow(w.th(1, 0), 3) * w.th(1, F(2, 3)) * (A - B.scaled(p ? 8 : 9));
        return single(r, lhs);
      });

  add("level6_z2_relation",
      "theta''[1,1/3]/theta[1,1/3] - theta''[1,2/3]/theta[1,2/3]"
      " = (theta'[1,1/3]/theta[1,1/3])^2 - (theta'[1,2/3]/theta[1,2/3])^2"
      " + theta'[1,1]^2 theta[1,0] theta[1,2/3] / (theta^2[1,1/3] theta^2[1,2/3])",
      [](Workspace& w, bool p) {
        const Rat a = F(1, 3), b = F(2, 3);
        PiSeries r = z2_left(w, a, b) -
                     (theta11_prime_sq(w) * w.th(1, 0) * w.th(1, b)).scaled(p ? -1 : 1);
        return single(r, w.th2(1, a));
      });

  add("level6_product_form",
      "theta'[1,1]^2 theta^2[1,1/3] / (theta^2[1,0] theta^2[1,2/3])"
      " = 3 pi^2 ((q;q)^2 (q^3;q^3)^2 / ((q^2;q^2) (q^6;q^6)))^2",
      [](Workspace& w, bool p) {
        PiSeries r = theta11_prime_sq(w) * sq(w.th(1, F(1, 3))) -
                     (sq(level6_e(w) * w.th(1, 0) * w.th(1, F(2, 3))))
                         .scaled(p ? 2 : 3)
                         .times_pi(2);
        return single(r, theta11_prime_sq(w));
      });

  add("riccati_level6",
      "q dW/dq = (1/2^3) ((q;q)^2 (q^3;q^3)^2 / ((q^2;q^2) (q^6;q^6)))^2 (W^2 - 10 W + 9),"
      " W = theta^4[1,1/3]/theta^4[1,2/3]",
      [](Workspace& w, bool p) {
        RiccatiSpec spec{[](Workspace& ws) { return theta_ratio(ws, F(1, 3), F(2, 3), 4); },
                         [](Workspace& ws) { return sq(level6_e(ws)).scaled(F(1, 8)); },
                         {w.num(p ? 8 : 9), w.num(-10), w.num(1)}};
        return riccati(w, spec);
      });

  add("riccati_level6_eta_form",
      "theta^4[1,1/3]/theta^4[1,2/3]"
      " = (sqrt3 (q^2;q^2) (q^3;q^3)^2 / ((q;q)^2 (q^6;q^6)))^4",
      [](Workspace& w, bool p) {
        PiSeries a4 = pow(w.th(1, F(1, 3)), 4);
        PiSeries r = a4 - (pow(level6_w(w), 4) * pow(w.th(1, F(2, 3)), 4)).scaled(p ? 3 : 9);
        return single(r, a4);
      });

  add("eta_ode_level6",
      "q dW/dq = (q^2;q^2)^7 (q^3;q^3)^7 / ((q;q)^5 (q^6;q^6)^5) (W - 1),"
      " W = ((q^2;q^2) (q^3;q^3)^2 / ((q;q)^2 (q^6;q^6)))^4",
      [](Workspace& w, bool p) {
        RiccatiSpec spec{[](Workspace& ws) { return pow(level6_w(ws), 4); },
                         [](Workspace& ws) { return ws.poch({{2, 7}, {3, 7}, {1, -5}, {6, -5}}); },
                         {w.num(p ? 0 : -1), w.num(1)}};
        return riccati(w, spec);
      });

  // Level 8.
  add("level8_identity_1",
      "theta[1,0] theta^3[1,1/2] - theta[1,1/4] theta^3[1,3/4] - theta[1,3/4] theta^3[1,1/4] = 0",
      [h](Workspace& w, bool p) {
        const PiSeries& ta = w.th(1, F(1, 4));
        const PiSeries& tb = w.th(1, F(3, 4));
        PiSeries first = w.th(1, 0) * pow(w.th(1, h), 3);
        PiSeries r = first - ta * pow(tb, 3) - (tb * pow(ta, 3)).scaled(p ? -1 : 1);
        return single(r, first);
      });

  add("level8_identity_2",
      "theta^2[1,0] theta[1,1/4] theta[1,3/4] - theta^2[1,1/4] theta^2[1,1/2]"
      " + theta^2[1,1/2] theta^2[1,3/4] = 0",
      [h](Workspace& w, bool p) {
        const PiSeries& ta = w.th(1, F(1, 4));
        const PiSeries& tb = w.th(1, F(3, 4));
        PiSeries first = sq(w.th(1, 0)) * ta * tb;
        PiSeries r = first - sq(ta * w.th(1, h)) + sq(w.th(1, h) * tb).scaled(p ? -1 : 1);
        return single(r, first);
      });

  add("level8_identity_3", "theta^4[1,1/4] - theta^4[1,3/4] - theta[1,1/2] theta^3[1,0] = 0",
      [h](Workspace& w, bool p) {
        PiSeries a4 = pow(w.th(1, F(1, 4)), 4);
        PiSeries r = a4 - pow(w.th(1, F(3, 4)), 4) -
                     (w.th(1, h) * pow(w.th(1, 0), 3)).scaled(p ? -1 : 1);
        return single(r, a4);
      });

  add("level8_z2_relation",
      "theta''[1,1/4]/theta[1,1/4] - theta''[1,3/4]/theta[1,3/4]"
      " = (theta'[1,1/4]/theta[1,1/4])^2 - (theta'[1,3/4]/theta[1,3/4])^2"
      " + theta'[1,1]^2 theta[1,0] theta[1,1/2] / (theta^2[1,1/4] theta^2[1,3/4])",
      [h](Workspace& w, bool p) {
        PiSeries r = z2_left(w, F(1, 4), F(3, 4)) -
                     (theta11_prime_sq(w) * w.th(1, 0) * w.th(1, h)).scaled(p ? -1 : 1);
        return single(r, w.th2(1, F(1, 4)));
      });

  add("level8_intermediate",
      "theta''[1,1/4]/theta[1,1/4] - theta''[1,3/4]/theta[1,3/4]"
      " = -(1/8) theta'[1,1]^2 theta^3[1,0] theta^7[1,1/2] / (theta^6[1,1/4] theta^6[1,3/4])"
      " + theta'[1,1]^2 theta[1,0] theta[1,1/2] / (theta^2[1,1/4] theta^2[1,3/4])",
      [h](Workspace& w, bool p) {
        const Rat a = F(1, 4), b = F(3, 4);
        const PiSeries& ta = w.th(1, a);
        const PiSeries& tb = w.th(1, b);
        const PiSeries d2 = theta11_prime_sq(w);
        const PiSeries& t10 = w.th(1, 0);
        const PiSeries& th_ = w.th(1, h);
        PiSeries ab4 = pow(ta * tb, 4);
        PiSeries r = (ab4 * ta * tb * second_difference(w, a, b)).scaled(8) +
                     d2 * pow(t10, 3) * pow(th_, 7) -
                     (d2 * t10 * th_ * ab4).scaled(p ? 4 : 8);
        return single(r, w.th2(1, a));
      });

  add("level8_second_derivative",
      "theta''[1,1/4]/theta[1,1/4] - theta''[1,3/4]/theta[1,3/4] = -(1/8) theta'[1,1]^2"
      " theta[1,0] theta[1,1/2] (A^2 - 6 A B + B^2) / (A^2 B^2),"
      " A = theta^2[1,1/4], B = theta^2[1,3/4]",
      [h](Workspace& w, bool p) {
        const Rat a = F(1, 4), b = F(3, 4);
        const PiSeries& ta = w.th(1, a);
        const PiSeries& tb = w.th(1, b);
        PiSeries A = sq(ta), B = sq(tb);
        PiSeries poly = sq(A) - (A * B).scaled(p ? 5 : 6) + sq(B);
        PiSeries r = (A * ta * B * tb * second_difference(w, a, b)).scaled(8) +
                     theta11_prime_sq(w) * w.th(1, 0) * w.th(1, h) * poly;
        return single(r, w.th2(1, a));
      });

  add("level8_product_forms",
      "theta'[1,1]^2 theta[1,0] theta[1,1/2] / (theta^2[1,1/4] theta^2[1,3/4])"
      " = 4 sqrt2 pi^2 (q;q)^2 (q^2;q^2) (q^4;q^4)^3 / (q^8;q^8)^2;"
      " the same times theta^2[0,0](4 tau)/theta^2[0,1](2 tau)"
      " = (1/8) theta'[1,1]^2 theta^3[1,0] theta^7[1,1/2] / (theta^6[1,1/4] theta^6[1,3/4])"
      " = 4 sqrt2 pi^2 eta^13(4 tau) / (eta^2(tau) eta(2 tau) eta^6(8 tau))",
      [h](Workspace& w, bool p) {
        const Cyc s2 = w.sqrt(2);
        const PiSeries& ta = w.th(1, F(1, 4));
        const PiSeries& tb = w.th(1, F(3, 4));
        const PiSeries& t10 = w.th(1, 0);
        const PiSeries& th_ = w.th(1, h);
        const PiSeries d2 = theta11_prime_sq(w);
        PiSeries ab2 = sq(ta * tb);
        PiSeries r1 = d2 * t10 * th_ - (level8_p(w) * ab2).scaled(s2 * F(p ? 2 : 4)).times_pi(2);
        PiSeries r2 = (t10 * th_ * sq(ab2) * sq(w.th(0, 0, 4))).scaled(8) -
                      pow(t10, 3) * pow(th_, 7) * sq(w.th(0, 1, 2));
        PiSeries q8 = w.eta(EtaQuotient({{4, 13}, {1, -2}, {2, -1}, {8, -6}}));
        PiSeries r3 = d2 * pow(t10, 3) * pow(th_, 7) -
                      (q8 * ab2 * sq(ab2)).scaled(s2 * F(32)).times_pi(2);
        Residual out{{}, d2};
        out.parts.emplace_back(std::move(r1));
        out.parts.emplace_back(std::move(r2));
        out.parts.emplace_back(std::move(r3));
        return out;
      });

  add("riccati_level8",
      "q dW/dq = (1/sqrt2^5) (q;q)^2 (q^2;q^2) (q^4;q^4)^3 / (q^8;q^8)^2 (W^2 - 6 W + 1),"
      " W = theta^2[1,1/4]/theta^2[1,3/4]",
      [](Workspace& w, bool p) {
        RiccatiSpec spec{[](Workspace& ws) { return theta_ratio(ws, F(1, 4), F(3, 4), 2); },
                         [](Workspace& ws) { return level8_p(ws).scaled(ws.sqrt(2) * F(1, 8)); },
                         {w.num(1), w.num(p ? -5 : -6), w.num(1)}};
        return riccati(w, spec);
      });

  add("cor8_1",
      "eta^2(tau) eta(2 tau) eta^3(4 tau) / eta^2(8 tau) = 1 - 2 sum_n (sum_{d|n} d (8/d)) q^n",
      [](Workspace& w, bool p) {
        PiSeries lhs = w.eta(EtaQuotient({{1, 2}, {2, 1}, {4, 3}, {8, -2}}));
        PiSeries rhs = w.constant(w.num(1)) + integer_series(w, 1, [p](long n) {
                         return mpz_class(-2 * (p ? sigma(1, n) : kron8_twist(n)));
                       });
        return single(lhs - rhs, lhs);
      });

  add("cor8_2",
      "eta^13(4 tau) / (eta^2(tau) eta(2 tau) eta^6(8 tau))"
      " = 1 - 2 sum_n (sum_{d|n} (d (8/d) - 2 (n/d) (8/d))) q^n",
      [](Workspace& w, bool p) {
        PiSeries lhs = w.eta(EtaQuotient({{4, 13}, {1, -2}, {2, -1}, {8, -6}}));
        PiSeries rhs = w.constant(w.num(1)) + integer_series(w, 1, [p](long n) {
                         return mpz_class(-2 * (kron8_twist(n) - (p ? 1 : 2) * kron8_cotwist(n)));
                       });
        return single(lhs - rhs, lhs);
      });

  add("cor8_difference",
      "eta^13(4 tau) / (eta^2(tau) eta(2 tau) eta^6(8 tau))"
      " - eta^2(tau) eta(2 tau) eta^3(4 tau) / eta^2(8 tau) = 4 sum_n (sum_{d|n} (n/d) (8/d)) q^n",
      [](Workspace& w, bool p) {
        PiSeries d = w.eta(EtaQuotient({{4, 13}, {1, -2}, {2, -1}, {8, -6}})) -
                     w.eta(EtaQuotient({{1, 2}, {2, 1}, {4, 3}, {8, -2}}));
        PiSeries rhs = integer_series(w, 1, [p](long n) {
          return mpz_class(4 * (p ? sigma(0, n) : kron8_cotwist(n)));
        });
        return single(d - rhs, d);
      });

  // Eisenstein series.
  add("ramanujan_e2", "q dE2/dq = (E2^2 - E4) / 12", [](Workspace& w, bool p) {
    PiSeries e2 = w.eisenstein(Eisenstein::E2);
    PiSeries r = q_ddq(e2).scaled(p ? 6 : 12) - sq(e2) + w.eisenstein(Eisenstein::E4);
    return single(r, e2);
  });

  add("ramanujan_e4", "q dE4/dq = (E2 E4 - E6) / 3", [](Workspace& w, bool p) {
    PiSeries e4 = w.eisenstein(Eisenstein::E4);
    PiSeries r = q_ddq(e4).scaled(p ? 2 : 3) - w.eisenstein(Eisenstein::E2) * e4 +
                 w.eisenstein(Eisenstein::E6);
    return single(r, e4);
  });

  add("ramanujan_e6", "q dE6/dq = (E2 E6 - E4^2) / 2", [](Workspace& w, bool p) {
    PiSeries e6 = w.eisenstein(Eisenstein::E6);
    PiSeries r = q_ddq(e6).scaled(p ? 1 : 2) - w.eisenstein(Eisenstein::E2) * e6 +
                 sq(w.eisenstein(Eisenstein::E4));
    return single(r, e6);
  });

  add("eisenstein_riccati",
      "u = -E2 solves (6 / (pi i)) u' + u^2 = E4 with u' = 2 pi i q du/dq",
      [](Workspace& w, bool p) {
        PiSeries u = -w.eisenstein(Eisenstein::E2);
        PiSeries du = q_ddq(u).scaled(w.i() * F(2)).times_pi(1);
        PiSeries r = du.scaled(-(w.i() * F(p ? 5 : 6))).times_pi(-1) + sq(u) -
                     w.eisenstein(Eisenstein::E4);
        return single(r, u);
      });

  // Structural properties over every characteristic the registry expands.
  add("heat_equation",
      "d^2 theta/dz^2 = 4 pi i d theta/dtau for every characteristic",
      [](Workspace& w, bool p) {
        Residual out{{}, w.jet(0, 0)[0]};
        for (const auto& ch : registry_characteristics()) {
          if (!p) {
            out.parts.emplace_back(heat_residual(w.field(), ch, w.z_order(), w.trunc()));
            continue;
          }
          const ZJet& j = w.jet(ch.eps, ch.eps_prime);
          std::vector<PiSeries> r;
          for (int k = 0; k + 2 <= j.z_order(); ++k) {
            r.push_back(j[k + 2].scaled((k + 2) * (k + 1)).times_pi(-2) + q_ddq(j[k]).scaled(4));
          }
          out.parts.emplace_back(ZJet(std::move(r)));
        }
        return out;
      },
      true);

  add("triple_product_forms",
      "theta[eps,eps'](0, tau) equals its Jacobi triple product for every characteristic",
      [](Workspace& w, bool p) {
        Residual out{{}, w.th(0, 0)};
        for (const auto& ch : registry_characteristics()) {
          PiSeries prod = theta_triple_product(w.field(), {ch, 1, 0, w.trunc()});
          out.parts.emplace_back(w.th(ch.eps, ch.eps_prime) - prod.scaled(p ? 2 : 1));
        }
        return out;
      });

  std::sort(defs.begin(), defs.end(),
            [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
  return defs;
}

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = build_registry();
  return defs;
}

const CheckDef* find_check(const std::string& id) {
  for (const auto& def : registry()) {
    if (def.id == id) return &def;
  }
  return nullptr;
}

std::vector<Characteristic> registry_characteristics() {
  std::vector<Characteristic> out = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (long den : {2, 3, 4, 5}) {
    for (long num = 1; num < 2 * den; ++num) {
      if (std::gcd(num, den) == 1) out.push_back({1, make_rat(num, den)});
    }
  }
  return out;
}

bool id_matches(const std::string& pattern, const std::string& id) {
  return fnmatch(pattern.c_str(), id.c_str(), 0) == 0;
}

}  // namespace thetaq
