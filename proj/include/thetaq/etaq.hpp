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

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "thetaq/cyclotomic.hpp"
#include "thetaq/rat.hpp"
#include "thetaq/series.hpp"

namespace thetaq {

/// (q^k; q^k)_inf^r = prod_{n>=1} (1 - q^(k n))^r, expanded below trunc.
PiSeries pochhammer(const CyclotomicField& field, int k, int r, const Rat& trunc);

struct EtaFactor {
  int scale;     // k in eta(k tau)
  int exponent;  // r
};

/// prod_k eta(k tau)^(r_k), with distinct scales and nonzero exponents.
class EtaQuotient {
 public:
  EtaQuotient(std::vector<EtaFactor> factors);

  /// "k^r" items separated by commas, e.g. "1^2,2,4^3,8^-2" for
  /// eta^2(tau) eta(2 tau) eta^3(4 tau) / eta^2(8 tau).
  static EtaQuotient parse(std::string_view text);

  const std::vector<EtaFactor>& factors() const noexcept { return factors_; }

  /// sum_k k r_k / 24.
  Rat leading_exponent() const;

  std::string to_string() const;

 private:
  std::vector<EtaFactor> factors_;
};

/// q^(sum k r / 24) * prod_k (q^k; q^k)^(r_k), known below trunc.
PiSeries eta_series(const CyclotomicField& field, const EtaQuotient& quot, const Rat& trunc);

/// sum_{d | n} d^k. Throws std::domain_error for n < 1.
mpz_class sigma(unsigned k, long n);

/// (8/m): +1 for m = +-1 mod 8, -1 for m = +-3 mod 8, 0 for even m.
int kron8(long m);

/// sum_{d | n} d (8/d)
mpz_class kron8_twist(long n);

/// sum_{d | n} (n/d) (8/d)
mpz_class kron8_cotwist(long n);

/// Number of ordered (x, y, z, w) in N_0^4 with n = sum of x(x+1)/2 terms,
/// by exhaustive enumeration.
std::int64_t t4_count(long n);

enum class Eisenstein { E2, E4, E6 };

/// E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n,
/// E6 = 1 - 504 sum sigma_5(n) q^n.
PiSeries eisenstein(const CyclotomicField& field, Eisenstein which, const Rat& trunc);

/// Memoized arithmetic function. Lookups may come from several threads.
class ArithFn {
 public:
  enum class Kind { Sigma, Kron8, T4 };

  static ArithFn sigma_k(unsigned k) { return ArithFn(Kind::Sigma, k); }
  static ArithFn kron8() { return ArithFn(Kind::Kron8, 0); }
  static ArithFn t4() { return ArithFn(Kind::T4, 0); }

  ArithFn(const ArithFn& o) : kind_(o.kind_), k_(o.k_) {}

  Kind kind() const noexcept { return kind_; }
  mpz_class operator()(long n) const;

 private:
  ArithFn(Kind kind, unsigned k) : kind_(kind), k_(k) {}

  Kind kind_;
  unsigned k_;
  mutable std::mutex mu_;
  mutable std::map<long, mpz_class> memo_;
};

}  // namespace thetaq
