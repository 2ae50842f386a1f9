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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "thetaq/cyclotomic.hpp"
#include "thetaq/rat.hpp"

namespace thetaq {

struct Term {
  Rat exponent;
  Cyc coeff;
};

/**
 * Truncated Puiseux series pi^grade * sum_e c_e q^e with coefficients in a
 * cyclotomic field.
 *
 * Every exponent below trunc() is determined; nothing at or above it is
 * known. Terms are kept sorted by exponent with no zero coefficients and
 * no exponent >= trunc(). A series without terms is zero to its truncation
 * and may be added to a series of any grade.
 */
class PiSeries {
 public:
  /// Zero series determined below trunc.
  PiSeries(const CyclotomicField& field, int grade, Rat trunc);

  /// Builds from arbitrary terms: sorts, merges equal exponents, drops zeros
  /// and anything at or above trunc.
  static PiSeries from_terms(const CyclotomicField& field, int grade, Rat trunc,
                             std::vector<Term> terms);
  static PiSeries monomial(const Cyc& c, Rat exponent, int grade, Rat trunc);
  static PiSeries constant(const Cyc& c, int grade, Rat trunc);

  const CyclotomicField& field() const noexcept { return *field_; }
  int grade() const noexcept { return grade_; }
  const Rat& trunc() const noexcept { return trunc_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Smallest exponent with nonzero coefficient, if any is determined.
  std::optional<Rat> valuation() const;

  /// Coefficient of q^e. Throws PrecisionError if e >= trunc().
  Cyc coeff(const Rat& e) const;

  /// Lowers the truncation to min(trunc(), t).
  PiSeries truncated(const Rat& t) const;

  PiSeries operator-() const;
  PiSeries& operator+=(const PiSeries& o);
  PiSeries& operator-=(const PiSeries& o);
  friend PiSeries operator+(PiSeries a, const PiSeries& b) { return a += b; }
  friend PiSeries operator-(PiSeries a, const PiSeries& b) { return a -= b; }
  friend PiSeries operator*(const PiSeries& a, const PiSeries& b);

  PiSeries scaled(const Cyc& c) const;
  PiSeries scaled(const Rat& r) const;
  PiSeries scaled(long n) const { return scaled(make_rat(n)); }

  /// Multiplies by pi^k (grade shift only).
  PiSeries times_pi(int k) const;

  /// Multiplies by q^e; the truncation moves with the terms.
  PiSeries shifted(const Rat& e) const;

  /// Structural equality: same grade (unless both are empty), truncation
  /// and terms.
  friend bool operator==(const PiSeries& a, const PiSeries& b);

 private:
  PiSeries(const CyclotomicField* field, int grade, Rat trunc, std::vector<Term> terms);
  void check_same_field(const PiSeries& o) const;

  const CyclotomicField* field_;
  int grade_;
  Rat trunc_;
  std::vector<Term> terms_;
};

/// Multiplicative inverse. If a = c q^v (1 + ...) is known below T, the
/// inverse is known below T - 2v. Throws NonInvertibleError for a series with
/// no determined nonzero term.
PiSeries inverse(const PiSeries& a);

/// q d/dq: c q^e -> e c q^e. Grade and truncation unchanged.
PiSeries q_ddq(const PiSeries& a);

/// Substitutes q -> q^k for k >= 1.
PiSeries scale_q(const PiSeries& a, int k);

/// a^n by repeated squaring; negative n goes through inverse().
PiSeries pow(const PiSeries& a, long n);

struct ZeroTest {
  bool zero = true;
  std::optional<Term> witness;  // lowest nonzero term when !zero
};

ZeroTest zero_test(const PiSeries& a);

/// "pi^g * ( c * q^(p/r) + ... + O(q^(T)) )"
std::string to_string(const PiSeries& a);

inline std::ostream& operator<<(std::ostream& os, const PiSeries& a) { return os << to_string(a); }

/**
 * Taylor jet in z of a theta function: coefficient c_k of z^k carries
 * pi-grade k. Products are truncated at z^(K+1).
 */
class ZJet {
 public:
  explicit ZJet(std::vector<PiSeries> coeffs);

  int z_order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const PiSeries& operator[](int k) const { return coeffs_.at(k); }
  const std::vector<PiSeries>& coeffs() const noexcept { return coeffs_; }

  /// Multiplies every coefficient by a grade-0 series.
  ZJet scaled(const PiSeries& s) const;
  ZJet scaled(const Cyc& c) const;
  ZJet truncated(const Rat& t) const;

  /// Smallest truncation over all coefficients.
  Rat trunc() const;

  ZJet operator-() const;
  friend ZJet operator+(const ZJet& a, const ZJet& b);
  friend ZJet operator-(const ZJet& a, const ZJet& b);
  friend ZJet operator*(const ZJet& a, const ZJet& b);

 private:
  std::vector<PiSeries> coeffs_;
};

struct JetZeroTest {
  bool zero = true;
  int z_power = -1;
  std::optional<Term> witness;
};

JetZeroTest zero_test(const ZJet& j);

}  // namespace thetaq
