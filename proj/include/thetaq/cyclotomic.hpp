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

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "thetaq/rat.hpp"

namespace thetaq {

/// Dense polynomial over Q, coefficients from x^0 upward, no trailing zeros.
using RatPoly = std::vector<Rat>;

/// m-th cyclotomic polynomial, (x^m - 1) divided exactly by every Phi_d with
/// d | m, d < m. Results are memoized process-wide.
RatPoly cyclotomic_poly(int m);

class Cyc;

/**
 * The field Q(zeta_M) for one fixed order M.
 *
 * Elements are stored on the power basis 1, z, ..., z^(phi(M)-1) of
 * z = exp(2 pi i / M), reduced modulo Phi_M. Fields are interned: of(M)
 * always returns the same immutable object, so elements can carry a plain
 * pointer to their field and compare fields by address.
 */
class CyclotomicField {
 public:
  static constexpr int kDefaultOrder = 240;

  static const CyclotomicField& of(int order);

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

  int order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }
  const std::vector<long>& modulus() const noexcept { return modulus_; }

  Cyc zero() const;
  Cyc one() const;
  Cyc from_int(long n) const;
  Cyc from_rat(const Rat& r) const;

  /// zeta_M^k for any integer k.
  Cyc zeta_power(long k) const;

  /// zeta_m^k. Throws OrderMismatchError unless m divides the field order.
  Cyc root_of_unity(long m, long k) const;

  Cyc imaginary_unit() const;

  /// Positive real square root of 2, 3 or 5:
  /// sqrt2 = z8 + z8^-1, sqrt3 = z12 + z12^-1, sqrt5 = sum_k z5^(k^2).
  Cyc sqrt_int(int n) const;

  bool contains_roots_of_unity(long m) const noexcept { return m > 0 && order_ % m == 0; }

  /// Reduces an integer polynomial (any length) modulo Phi_M in place and
  /// leaves exactly degree() coefficients.
  void reduce(std::vector<mpz_class>& poly) const;

 private:
  explicit CyclotomicField(int order);

  int order_;
  int degree_;
  std::vector<long> modulus_;
  std::vector<std::pair<int, long>> tail_;  // nonzero Phi_j for j < degree
  std::vector<std::vector<mpz_class>> powers_;  // z^k mod Phi, k < order
};

/**
 * Exact element of Q(zeta_M): integer numerator vector over a positive common
 * denominator, always reduced mod Phi_M and with gcd(content, den) = 1, so
 * equality is plain vector equality.
 */
class Cyc {
 public:
  explicit Cyc(const CyclotomicField& field);
  Cyc(const CyclotomicField& field, std::vector<mpz_class> num, mpz_class den = 1);

  const CyclotomicField& field() const noexcept { return *field_; }
  const std::vector<mpz_class>& numerators() const noexcept { return num_; }
  const mpz_class& denominator() const noexcept { return den_; }

  /// Coefficient of z^j on the power basis.
  Rat coeff(int j) const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  std::optional<Rat> as_rational() const;

  Cyc inverse() const;
  Cyc pow(long n) const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator*=(const Rat& r);

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator*(Cyc a, const Rat& r) { return a *= r; }
  friend Cyc operator*(const Rat& r, Cyc a) { return a *= r; }
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
  Cyc operator-() const;

  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// Complex value under z -> exp(2 pi i / M).
  std::complex<double> to_complex() const;

  /// Rational elements print as "p/q"; others as a sum over powers of z,
  /// e.g. "1 + 2*z^12 - z^36".
  std::string to_string() const;

 private:
  friend class CycProductSum;
  void normalize();
  void check_same_field(const Cyc& o) const;

  const CyclotomicField* field_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.to_string(); }

/**
 * Accumulates sum_i a_i * b_i without reducing modulo Phi_M or normalizing
 * until take(). This is the inner loop of series multiplication.
 */
class CycProductSum {
 public:
  explicit CycProductSum(const CyclotomicField& field);

  void add(const Cyc& a, const Cyc& b);
  bool empty() const noexcept { return !touched_; }

  /// Returns the reduced sum and resets the accumulator.
  Cyc take();

 private:
  const CyclotomicField* field_;
  std::vector<mpz_class> acc_;
  mpz_class den_;
  bool touched_ = false;
  std::vector<int> ia_, ib_;
  mpz_class scratch_;
};

}  // namespace thetaq
