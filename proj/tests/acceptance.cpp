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
// Acceptance gate: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <iostream>
#include <map>
#include <string>

#include "thetaq/etaq.hpp"
#include "thetaq/identities.hpp"
#include "thetaq/theta.hpp"

namespace {

using namespace thetaq;
using Clock = std::chrono::steady_clock;

constexpr double kSuiteSeconds = 300.0;
constexpr double kT4Seconds = 10.0;
constexpr long kSuiteOrder = 30;
constexpr long kRiccatiOrder = 40;
constexpr long kT4Range = 200;
constexpr long kCorollaryRange = 100;
constexpr long kCrossFormOrder = 50;
constexpr long kStabilityOrder = 60;

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << std::endl;
  failures += !ok;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

RunConfig config(long order) {
  RunConfig cfg;
  cfg.q_order = Rat(order);
  cfg.z_order = 4;
  cfg.t4_range = kT4Range;
  return cfg;
}

long kron8_oracle(long m) {
  switch (m % 8) {
    case 1: case 7: return 1;
    case 3: case 5: return -1;
    default: return 0;
  }
}

/// Coefficient of q^n of a series with rational integer coefficients.
mpz_class integer_coeff(const PiSeries& s, long n) {
  auto r = s.coeff(Rat(n)).as_rational();
  return r && r->get_den() == 1 ? mpz_class(r->get_num()) : mpz_class(1000000007);
}

std::map<std::string, CheckOutcome> run_suite(long order) {
  std::map<std::string, CheckOutcome> out;
  for (const auto& def : registry()) out.emplace(def.id, run_check(def, config(order)));
  return out;
}

}  // namespace

int main() {
  const auto& field = CyclotomicField::of(240);

  // 1. every registered check at q-order 30, z-order 4
  auto start = Clock::now();
  const auto suite = run_suite(kSuiteOrder);
  const double suite_time = seconds_since(start);
  std::size_t passed = 0;
  std::string failed;
  for (const auto& [id, o] : suite) {
    if (o.report.pass) ++passed;
    else failed += " " + id;
  }
  report(1, passed == suite.size() && suite_time < kSuiteSeconds,
         std::to_string(passed) + "/" + std::to_string(suite.size()) + " checks zero at q-order 30 in " +
             std::to_string(suite_time) + " s (limit 300 s)" + failed);

  // 2. Riccati equations and eta ODEs at q-order 40, plus the constant terms W0
  {
    bool ok = true;
    std::string detail;
    for (const char* id :
         {"riccati_level5", "riccati_level6", "riccati_level8", "eta_ode_level4", "eta_ode_level6"}) {
      const CheckReport r = run_check(*find_check(id), config(kRiccatiOrder)).report;
      ok = ok && r.pass;
      if (!r.pass) detail += std::string(" ") + id;
    }
    Workspace w(field, 1, 2, 0);
    auto w0 = [&](long a, long b, long den, long power) {
      const PiSeries W = pow(w.th(1, make_rat(a, den)), power) * inverse(pow(w.th(1, make_rat(b, den)), power));
      return W.coeff(0);
    };
    const Cyc one = field.one();
    const Cyc w5 = w0(1, 3, 5, 5), w6 = w0(1, 2, 3, 4), w8 = w0(1, 3, 4, 2);
    ok = ok && (w5 * w5 - w5 * Rat(11) - one).is_zero();
    ok = ok && w6 == field.from_int(9) && (w6 * w6 - w6 * Rat(10) + one * Rat(9)).is_zero();
    ok = ok && (w8 * w8 - w8 * Rat(6) + one).is_zero();
    ok = ok && w5 == (field.from_int(11) + field.sqrt_int(5) * Rat(5)) * make_rat(1, 2);
    ok = ok && w8 == field.from_int(3) + field.sqrt_int(2) * Rat(2);
    report(2, ok, "3 Riccati + 2 eta ODE residuals zero at q-order 40; W0 = (11+5sqrt5)/2, 9, 3+2sqrt2" + detail);
  }

  // 3. four-triangular-numbers theorem for n <= 200
  {
    start = Clock::now();
    const PiSeries t = pow(theta_const(field, {1, 0}, 2, Rat(2 * kT4Range + 2)), 4);
    bool ok = true;
    long bad = -1;
    for (long n = 0; n <= kT4Range; ++n) {
      const mpz_class count = t4_count(n);
      if (count != sigma(1, 2 * n + 1) || 16 * count != integer_coeff(t, 2 * n + 1)) {
        ok = false;
        if (bad < 0) bad = n;
      }
    }
    const double secs = seconds_since(start);
    report(3, ok && secs < kT4Seconds,
           "t4(n) = sigma(2n+1) = [q^(2n+1)] theta^4[1,0](2 tau)/16 for n <= 200 in " +
               std::to_string(secs) + " s (limit 10 s)" + (bad >= 0 ? " first mismatch n=" + std::to_string(bad) : ""));
  }

  // 4. level-8 eta quotients against twisted divisor sums, n <= 100
  {
    const Rat trunc(kCorollaryRange + 1);
    const PiSeries a = eta_series(field, EtaQuotient({{1, 2}, {2, 1}, {4, 3}, {8, -2}}), trunc);
    const PiSeries b = eta_series(field, EtaQuotient({{4, 13}, {1, -2}, {2, -1}, {8, -6}}), trunc);
    bool ok = integer_coeff(a, 0) == 1 && integer_coeff(b, 0) == 1;
    for (long n = 1; n <= kCorollaryRange; ++n) {
      long twist = 0, cotwist = 0;
      for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        twist += d * kron8_oracle(d);
        cotwist += (n / d) * kron8_oracle(d);
      }
      ok = ok && integer_coeff(a, n) == -2 * twist && integer_coeff(b, n) == -2 * (twist - 2 * cotwist);
    }
    report(4, ok, "both level-8 eta quotients match 1 - 2 sum (twisted divisor sums) q^n for n <= 100");
  }

  // 5. sum form = triple product form
  {
    bool ok = true;
    std::string bad;
    const auto chars = registry_characteristics();
    for (const auto& ch : chars) {
      const PiSeries s = theta_const(field, ch, 1, Rat(kCrossFormOrder));
      const PiSeries p = theta_triple_product(field, {ch, 1, 0, Rat(kCrossFormOrder)});
      if (s != p) {
        ok = false;
        bad += " [" + ch.to_string() + "]";
      }
    }
    report(5, ok, std::to_string(chars.size()) + " characteristics agree in sum and product form to q-order 50" + bad);
  }

  // 6. negative controls
  {
    const auto reports = run_negative_controls(config(kSuiteOrder));
    std::size_t caught = 0;
    std::string leaked;
    for (const auto& r : reports) {
      if (!r.pass && r.witness && !r.diagnostic) ++caught;
      else leaked += " " + r.id;
    }
    report(6, caught == reports.size() && reports.size() == registry().size(),
           std::to_string(caught) + "/" + std::to_string(reports.size()) +
               " perturbed identities fail with a witness term" + leaked);
  }

  // 7. rerun at q-order 60
  {
    const auto high = run_suite(kStabilityOrder);
    bool ok = high.size() == suite.size();
    std::string bad;
    for (const auto& [id, lo] : suite) {
      const auto& hi = high.at(id);
      const bool same_outcome = lo.report.pass == hi.report.pass;
      const bool same_probe = lo.probe && hi.probe && *lo.probe == hi.probe->truncated(lo.probe->trunc());
      if (!same_outcome || !same_probe) {
        ok = false;
        bad += " " + id;
      }
    }
    report(7, ok, "q-order 60 rerun keeps every outcome and every probe coefficient below q^30" + bad);
  }

  return failures == 0 ? 0 : 1;
}
