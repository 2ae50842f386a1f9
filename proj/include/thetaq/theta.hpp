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

#include <string>
#include <string_view>

#include "thetaq/cyclotomic.hpp"
#include "thetaq/rat.hpp"
#include "thetaq/series.hpp"

namespace thetaq {

/// Characteristic [eps; eps'] of
///   theta[eps; eps'](z, tau) = sum_n q^((n + eps/2)^2 / 2) exp(2 pi i (n + eps/2)(z + eps'/2)).
/// Entries are used literally; no reduction to a fundamental domain.
struct Characteristic {
  Rat eps;
  Rat eps_prime;

  /// Smallest m such that every phase of the defining sum is an m-th root
  /// of unity.
  long phase_order() const;

  /// "eps,eps'" in canonical fraction form.
  std::string to_string() const;

  /// Parses "eps,eps'" such as "1,1/5".
  static Characteristic parse(std::string_view text);

  friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

struct ThetaSpec {
  Characteristic ch;
  int tau_scale = 1;  // evaluate at tau_scale * tau
  int z_order = 0;    // K
  Rat trunc;
};

/// Jet sum_{k<=K} c_k z^k of theta[ch](z, s*tau), c_k of pi-grade k:
///   c_k = (2i)^k / k! * sum_n a^k exp(pi i a eps') q^(s a^2 / 2),  a = n + eps/2,
/// over every n with s a^2 / 2 < trunc. Throws EmbeddingError if a phase is
/// not in the field.
ZJet theta_jet(const CyclotomicField& field, const ThetaSpec& spec);

/// theta[ch](0, s*tau) from the defining sum.
PiSeries theta_const(const CyclotomicField& field, const Characteristic& ch, int tau_scale,
                     const Rat& trunc);

/// theta[ch](0, s*tau) from the Jacobi triple product
///   exp(pi i eps eps'/2) x^(eps^2/4) prod_n (1 - x^2n)(1 + e^(pi i eps') x^(2n-1+eps))
///                                          (1 + e^(-pi i eps') x^(2n-1-eps)),
/// x = q^(s/2). Requires |eps| <= 1 so that every factor is a power series.
PiSeries theta_triple_product(const CyclotomicField& field, const ThetaSpec& spec);

/// d/dz theta at z = 0 (pi-grade 1).
PiSeries theta_prime(const CyclotomicField& field, const Characteristic& ch, int tau_scale,
                     const Rat& trunc);

/// d^2/dz^2 theta at z = 0 (pi-grade 2).
PiSeries theta_double_prime(const CyclotomicField& field, const Characteristic& ch, int tau_scale,
                            const Rat& trunc);

/// Jet of d^2 theta/dz^2 - 4 pi i d theta/dtau, coefficient by coefficient:
/// r_k = (k+2)(k+1) c_(k+2) + 8 pi^2 q d/dq c_k, for k = 0..K-2.
/// r_k naturally has pi-grade k + 2; the returned jet holds r_k / pi^2 so the
/// jet grading holds. Identically zero for every characteristic.
ZJet heat_residual(const CyclotomicField& field, const Characteristic& ch, int z_order,
                   const Rat& trunc);

/// exp(pi i eps n), the factor in theta[eps + 2m; eps' + 2n] = exp(pi i eps n) theta[eps; eps'].
Cyc shift_factor(const CyclotomicField& field, const Characteristic& ch, long n);

}  // namespace thetaq
