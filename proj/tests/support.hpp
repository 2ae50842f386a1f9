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
#pragma once

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "thetaq/cyclotomic.hpp"
#include "thetaq/series.hpp"

namespace thetaq::testing {

inline const CyclotomicField& field() { return CyclotomicField::of(240); }

inline Cyc num(long n) { return field().from_int(n); }

/// Sparse random element: a few zeta powers with small rational coefficients.
inline Cyc random_cyc(std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<long> power(0, 239), top(-9, 9), bottom(1, 5);
  Cyc c = field().zero();
  for (int i = 0; i < terms; ++i) c += field().zeta_power(power(rng)) * make_rat(top(rng), bottom(rng));
  return c;
}

/// sum c_j q^(e_j) with integer coefficients.
inline PiSeries series(std::vector<std::pair<Rat, long>> terms, Rat trunc, int grade = 0) {
  std::vector<Term> out;
  for (auto& [e, c] : terms) out.push_back({e, num(c)});
  return PiSeries::from_terms(field(), grade, std::move(trunc), std::move(out));
}

/// Random series with exponents on the grid (1/den) N, below trunc, with
/// a nonzero constant term when `unit` is set.
inline PiSeries random_series(std::mt19937& rng, long den, const Rat& trunc, bool unit = false) {
  std::vector<Term> out;
  std::bernoulli_distribution keep(0.4);
  std::uniform_int_distribution<long> small(-4, 4);
  for (long k = 0; Rat(make_rat(k, den)) < trunc; ++k) {
    if (k == 0 && unit) {
      Cyc c = random_cyc(rng, 1);
      out.push_back({Rat(0), c.is_zero() ? num(1) : c});
      continue;
    }
    if (!keep(rng)) continue;
    out.push_back({make_rat(k, den), random_cyc(rng, 2) * Rat(small(rng))});
  }
  return PiSeries::from_terms(field(), 0, trunc, std::move(out));
}

/// Integer coefficients of q^0 .. q^(n-1) of a series supported on integers.
inline std::vector<mpz_class> integer_coeffs(const PiSeries& s, long n) {
  std::vector<mpz_class> out(n, 0);
  for (const auto& t : s.terms()) {
    if (t.exponent.get_den() != 1 || t.exponent < 0 || t.exponent >= n) continue;
    auto r = t.coeff.as_rational();
    if (!r || r->get_den() != 1) throw std::logic_error("coefficient is not an integer");
    out[t.exponent.get_num().get_si()] = r->get_num();
  }
  return out;
}

}  // namespace thetaq::testing
