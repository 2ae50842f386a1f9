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
#include "thetaq/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "thetaq/errors.hpp"

namespace thetaq {

namespace {

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (b.empty()) throw DivisionByZeroError("polynomial division by zero");
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly q(a.size() - b.size() + 1);
  const Rat& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (sgn(a[k]) == 0) continue;
    const Rat c = a[k] / lead;
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

RatPoly compute_cyclotomic(int m, std::map<int, RatPoly>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  RatPoly p(static_cast<std::size_t>(m) + 1);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [quot, rem] = divmod(p, compute_cyclotomic(d, memo));
    if (!rem.empty()) throw std::logic_error("cyclotomic division not exact");
    p = std::move(quot);
  }
  memo.emplace(m, p);
  return p;
}

bool all_zero(const std::vector<mpz_class>& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

}  // namespace

RatPoly cyclotomic_poly(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, RatPoly> memo;
  std::lock_guard lock(mu);
  return compute_cyclotomic(m, memo);
}

// ---------------------------------------------------------------------------
// CyclotomicField

const CyclotomicField& CyclotomicField::of(int order) {
  if (order < 1) throw std::invalid_argument("field order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[order];
  if (!slot) slot.reset(new CyclotomicField(order));
  return *slot;
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
  const RatPoly phi = cyclotomic_poly(order);
  degree_ = static_cast<int>(phi.size()) - 1;
  modulus_.reserve(phi.size());
  for (const auto& c : phi) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
      throw std::logic_error("cyclotomic polynomial coefficient out of range");
    }
    modulus_.push_back(c.get_num().get_si());
  }
  for (int j = 0; j < degree_; ++j) {
    if (modulus_[j] != 0) tail_.emplace_back(j, modulus_[j]);
  }
  powers_.reserve(order_);
  for (int k = 0; k < order_; ++k) {
    std::vector<mpz_class> p(std::max(k + 1, degree_));
    p[k] = 1;
    reduce(p);
    powers_.push_back(std::move(p));
  }
}

void CyclotomicField::reduce(std::vector<mpz_class>& poly) const {
  for (std::size_t k = poly.size(); k-- > static_cast<std::size_t>(degree_);) {
    if (sgn(poly[k]) == 0) continue;
    const std::size_t base = k - degree_;
    mpz_ptr lead = poly[k].get_mpz_t();
    for (const auto& [j, c] : tail_) {
      // z^k = z^base * z^deg and z^deg = -sum_j Phi_j z^j
      if (c > 0) {
        mpz_submul_ui(poly[base + j].get_mpz_t(), lead, static_cast<unsigned long>(c));
      } else {
        mpz_addmul_ui(poly[base + j].get_mpz_t(), lead, static_cast<unsigned long>(-c));
      }
    }
    poly[k] = 0;
  }
  poly.resize(degree_);
}

Cyc CyclotomicField::zero() const { return Cyc(*this); }

Cyc CyclotomicField::one() const { return from_int(1); }

Cyc CyclotomicField::from_int(long n) const {
  std::vector<mpz_class> num(degree_);
  num[0] = n;
  return Cyc(*this, std::move(num));
}

Cyc CyclotomicField::from_rat(const Rat& r) const {
  std::vector<mpz_class> num(degree_);
  num[0] = r.get_num();
  return Cyc(*this, std::move(num), r.get_den());
}

Cyc CyclotomicField::zeta_power(long k) const {
  long r = k % order_;
  if (r < 0) r += order_;
  return Cyc(*this, powers_[r]);
}

Cyc CyclotomicField::imaginary_unit() const { return root_of_unity(4, 1); }

Cyc CyclotomicField::root_of_unity(long m, long k) const {
  if (!contains_roots_of_unity(m)) {
    throw OrderMismatchError("root of unity of order " + std::to_string(m) +
                             " is not in Q(zeta_" + std::to_string(order_) + ")");
  }
  long r = k % m;
  if (r < 0) r += m;
  return zeta_power(r * (order_ / m));
}

Cyc CyclotomicField::sqrt_int(int n) const {
  switch (n) {
    case 2:
      return root_of_unity(8, 1) + root_of_unity(8, -1);
    case 3:
      return root_of_unity(12, 1) + root_of_unity(12, -1);
    case 5: {
      Cyc s = zero();
      for (long k = 0; k < 5; ++k) s += root_of_unity(5, k * k);
      return s;
    }
    default:
      throw UnsupportedRadicandError("sqrt_int supports 2, 3 and 5, got " + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// Cyc

Cyc::Cyc(const CyclotomicField& field) : field_(&field), num_(field.degree()), den_(1) {}

Cyc::Cyc(const CyclotomicField& field, std::vector<mpz_class> num, mpz_class den)
    : field_(&field), num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw DivisionByZeroError("zero denominator");
  if (num_.size() != static_cast<std::size_t>(field.degree())) field.reduce(num_);
  normalize();
}

void Cyc::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  if (all_zero(num_)) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& x : num_) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& x : num_) {
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void Cyc::check_same_field(const Cyc& o) const {
  if (field_ != o.field_) {
    throw OrderMismatchError("elements of Q(zeta_" + std::to_string(field_->order()) +
                             ") and Q(zeta_" + std::to_string(o.field_->order()) + ") mixed");
  }
}

Rat Cyc::coeff(int j) const {
  Rat r(num_.at(j), den_);
  r.canonicalize();
  return r;
}

bool Cyc::is_zero() const noexcept { return all_zero(num_); }

bool Cyc::is_one() const noexcept {
  if (den_ != 1 || num_[0] != 1) return false;
  for (std::size_t j = 1; j < num_.size(); ++j) {
    if (sgn(num_[j]) != 0) return false;
  }
  return true;
}

std::optional<Rat> Cyc::as_rational() const {
  for (std::size_t j = 1; j < num_.size(); ++j) {
    if (sgn(num_[j]) != 0) return std::nullopt;
  }
  return coeff(0);
}

Cyc& Cyc::operator+=(const Cyc& o) {
  check_same_field(o);
  if (den_ == o.den_) {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] += o.num_[j];
  } else {
    for (std::size_t j = 0; j < num_.size(); ++j) {
      num_[j] *= o.den_;
      mpz_addmul(num_[j].get_mpz_t(), o.num_[j].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
  check_same_field(o);
  CycProductSum sum(*field_);
  sum.add(*this, o);
  *this = sum.take();
  return *this;
}

Cyc& Cyc::operator*=(const Rat& r) {
  for (auto& x : num_) x *= r.get_num();
  den_ *= r.get_den();
  normalize();
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& x : out.num_) x = -x;
  return out;
}

bool operator==(const Cyc& a, const Cyc& b) {
  return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in Q(zeta_" +
                                           std::to_string(field_->order()) + ")");
  // Extended Euclid on (Phi_M, a): track s with s*a = r (mod Phi_M).
  RatPoly r0, r1;
  for (long c : field_->modulus()) r0.emplace_back(c);
  for (std::size_t j = 0; j < num_.size(); ++j) r1.emplace_back(num_[j]);
  trim(r1);
  RatPoly s0, s1{Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::logic_error("Phi_M not coprime to element");
  // s0 * a_int = r0[0], and a = a_int / den, so a^-1 = den * s0 / r0[0].
  const Rat scale = Rat(den_) / r0[0];
  mpz_class common = 1;
  for (auto& c : s0) {
    c *= scale;
    common = lcm(common, c.get_den());
  }
  std::vector<mpz_class> num(field_->degree());
  for (std::size_t j = 0; j < s0.size(); ++j) {
    num[j] = s0[j].get_num() * (common / s0[j].get_den());
  }
  return Cyc(*field_, std::move(num), common);
}

Cyc Cyc::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Cyc result = field_->one();
  Cyc base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::complex<double> Cyc::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  const double d = den_.get_d();
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (sgn(num_[j]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / field_->order();
    acc += (num_[j].get_d() / d) * std::polar(1.0, angle);
  }
  return acc;
}

std::string Cyc::to_string() const {
  if (auto r = as_rational()) return r->get_str();
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (sgn(num_[j]) == 0) continue;
    Rat c(num_[j], den_);
    c.canonicalize();
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    const Rat mag = abs(c);
    if (j == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "z";
      if (j > 1) out << "^" << j;
    }
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// CycProductSum

CycProductSum::CycProductSum(const CyclotomicField& field)
    : field_(&field), acc_(2 * field.degree() - 1), den_(1) {}

void CycProductSum::add(const Cyc& a, const Cyc& b) {
  ia_.clear();
  ib_.clear();
  for (int i = 0; i < static_cast<int>(a.num_.size()); ++i) {
    if (sgn(a.num_[i]) != 0) ia_.push_back(i);
  }
  if (ia_.empty()) return;
  for (int j = 0; j < static_cast<int>(b.num_.size()); ++j) {
    if (sgn(b.num_[j]) != 0) ib_.push_back(j);
  }
  if (ib_.empty()) return;

  // Bring the accumulator and the new product to a common denominator L; the
  // product gets multiplied by L / (da * db).
  const bool unit_dens = a.den_ == 1 && b.den_ == 1;
  mpz_class factor = 1;
  if (!(unit_dens && den_ == 1)) {
    const mpz_class d = a.den_ * b.den_;
    if (d != den_) {
      const mpz_class l = lcm(den_, d);
      const mpz_class up = l / den_;
      if (up != 1) {
        for (auto& x : acc_) {
          if (sgn(x) != 0) x *= up;
        }
      }
      factor = l / d;
      den_ = l;
    }
  }
  const bool plain = factor == 1;
  for (int i : ia_) {
    mpz_srcptr ai = a.num_[i].get_mpz_t();
    if (!plain) {
      mpz_mul(scratch_.get_mpz_t(), ai, factor.get_mpz_t());
      ai = scratch_.get_mpz_t();
    }
    for (int j : ib_) mpz_addmul(acc_[i + j].get_mpz_t(), ai, b.num_[j].get_mpz_t());
  }
  touched_ = true;
}

Cyc CycProductSum::take() {
  std::vector<mpz_class> out(acc_.size());
  out.swap(acc_);
  mpz_class den = 1;
  den.swap(den_);
  touched_ = false;
  field_->reduce(out);
  return Cyc(*field_, std::move(out), std::move(den));
}

}  // namespace thetaq
