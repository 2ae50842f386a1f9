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
#include "thetaq/etaq.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace thetaq {

namespace {

/// Number of integer exponents e >= 0 with e < trunc.
long integer_slots(const Rat& trunc) {
  if (sgn(trunc) <= 0) return 0;
  return rat_ceil(trunc).get_si();
}

/// poly *= (1 - q^step)^r in place, on a dense integer power series.
void times_binomial_power(std::vector<mpz_class>& poly, long step, int r) {
  const long len = static_cast<long>(poly.size());
  if (step >= len) return;
  if (r > 0) {
    for (int t = 0; t < r; ++t) {
      for (long i = len - 1; i >= step; --i) poly[i] -= poly[i - step];
    }
  } else {
    // 1 / (1 - q^step) = 1 + q^step + q^(2 step) + ...
    for (int t = 0; t < -r; ++t) {
      for (long i = step; i < len; ++i) poly[i] += poly[i - step];
    }
  }
}

void times_pochhammer(std::vector<mpz_class>& poly, int k, int r) {
  const long len = static_cast<long>(poly.size());
  for (long step = k; step < len; step += k) times_binomial_power(poly, step, r);
}

PiSeries from_dense(const CyclotomicField& field, const std::vector<mpz_class>& poly,
                    const Rat& shift, const Rat& trunc) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (sgn(poly[i]) == 0) continue;
    terms.push_back({Rat(static_cast<long>(i)) + shift, field.from_rat(Rat(poly[i]))});
  }
  return PiSeries::from_terms(field, 0, trunc, std::move(terms));
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

PiSeries pochhammer(const CyclotomicField& field, int k, int r, const Rat& trunc) {
  if (k < 1) throw std::invalid_argument("pochhammer step must be positive");
  std::vector<mpz_class> poly(integer_slots(trunc));
  if (!poly.empty()) poly[0] = 1;
  times_pochhammer(poly, k, r);
  return from_dense(field, poly, Rat(0), trunc);
}

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
  std::set<int> seen;
  for (const auto& f : factors_) {
    if (f.scale < 1) throw std::invalid_argument("eta scale must be positive");
    if (f.exponent == 0) throw std::invalid_argument("eta exponent must be nonzero");
    if (!seen.insert(f.scale).second) {
      throw std::invalid_argument("eta scale " + std::to_string(f.scale) + " repeated");
    }
  }
}

EtaQuotient EtaQuotient::parse(std::string_view text) {
  std::vector<EtaFactor> factors;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string item(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto caret = item.find('^');
    try {
      std::size_t used = 0;
      const int scale = std::stoi(item.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? item.size() : caret)) throw std::invalid_argument(item);
      int exponent = 1;
      if (caret != std::string::npos) {
        const std::string exp_text = item.substr(caret + 1);
        exponent = std::stoi(exp_text, &used);
        if (used != exp_text.size()) throw std::invalid_argument(item);
      }
      factors.push_back({scale, exponent});
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad eta factor '" + item + "' (expected k or k^r)");
    }
  }
  if (factors.empty()) throw std::invalid_argument("empty eta quotient");
  return EtaQuotient(std::move(factors));
}

Rat EtaQuotient::leading_exponent() const {
  long total = 0;
  for (const auto& f : factors_) total += static_cast<long>(f.scale) * f.exponent;
  return make_rat(total, 24);
}

std::string EtaQuotient::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out << ",";
    out << factors_[i].scale << "^" << factors_[i].exponent;
  }
  return out.str();
}

PiSeries eta_series(const CyclotomicField& field, const EtaQuotient& quot, const Rat& trunc) {
  const Rat lead = quot.leading_exponent();
  std::vector<mpz_class> poly(integer_slots(trunc - lead));
  if (!poly.empty()) poly[0] = 1;
  for (const auto& f : quot.factors()) times_pochhammer(poly, f.scale, f.exponent);
  return from_dense(field, poly, lead, trunc);
}

mpz_class sigma(unsigned k, long n) {
  if (n < 1) throw std::domain_error("sigma needs n >= 1, got " + std::to_string(n));
  mpz_class total = 0;
  for (long d : divisors(n)) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), k);
    total += p;
  }
  return total;
}

int kron8(long m) {
  if (m < 1) throw std::domain_error("kron8 needs m >= 1");
  switch (m % 8) {
    case 1:
    case 7:
      return 1;
    case 3:
    case 5:
      return -1;
    default:
      return 0;
  }
}

mpz_class kron8_twist(long n) {
  mpz_class total = 0;
  for (long d : divisors(n)) total += d * kron8(d);
  return total;
}

mpz_class kron8_cotwist(long n) {
  mpz_class total = 0;
  for (long d : divisors(n)) total += (n / d) * kron8(d);
  return total;
}

std::int64_t t4_count(long n) {
  if (n < 0) throw std::domain_error("t4 needs n >= 0");
  std::vector<long> tri;
  for (long x = 0; x * (x + 1) / 2 <= n; ++x) tri.push_back(x * (x + 1) / 2);
  std::int64_t count = 0;
  for (long a : tri) {
    for (long b : tri) {
      if (a + b > n) break;
      for (long c : tri) {
        if (a + b + c > n) break;
        for (long d : tri) {
          const long s = a + b + c + d;
          if (s > n) break;
          if (s == n) ++count;
        }
      }
    }
  }
  return count;
}

PiSeries eisenstein(const CyclotomicField& field, Eisenstein which, const Rat& trunc) {
  long scale = 0;
  unsigned k = 0;
  switch (which) {
    case Eisenstein::E2: scale = -24; k = 1; break;
    case Eisenstein::E4: scale = 240; k = 3; break;
    case Eisenstein::E6: scale = -504; k = 5; break;
  }
  std::vector<mpz_class> poly(integer_slots(trunc));
  if (!poly.empty()) poly[0] = 1;
  for (std::size_t n = 1; n < poly.size(); ++n) poly[n] = scale * sigma(k, static_cast<long>(n));
  return from_dense(field, poly, Rat(0), trunc);
}

mpz_class ArithFn::operator()(long n) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
  }
  mpz_class v;
  switch (kind_) {
    case Kind::Sigma: v = sigma(k_, n); break;
    case Kind::Kron8: v = thetaq::kron8(n); break;
    case Kind::T4: v = t4_count(n); break;
  }
  std::lock_guard lock(mu_);
  memo_.emplace(n, v);
  return v;
}

}  // namespace thetaq
