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
#include "thetaq/theta.hpp"

#include <vector>

#include "thetaq/errors.hpp"

namespace thetaq {

namespace {

/// zeta_M^(M * turns); turns is a fraction of a full turn.
Cyc phase(const CyclotomicField& field, const Rat& turns, const Characteristic& ch) {
  Rat k = turns * field.order();
  if (k.get_den() != 1) {
    throw EmbeddingError("characteristic [" + ch.to_string() + "] needs roots of unity of order " +
                         std::to_string(ch.phase_order()) + ", not in Q(zeta_" +
                         std::to_string(field.order()) + ")");
  }
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), k.get_num_mpz_t(), static_cast<unsigned long>(field.order()));
  return field.zeta_power(r.get_si());
}

void check_embedding(const CyclotomicField& field, const Characteristic& ch) {
  if (!field.contains_roots_of_unity(ch.phase_order())) {
    throw EmbeddingError("characteristic [" + ch.to_string() + "] needs roots of unity of order " +
                         std::to_string(ch.phase_order()) + ", not in Q(zeta_" +
                         std::to_string(field.order()) + ")");
  }
}

}  // namespace

long Characteristic::phase_order() const {
  // Phases are exp(2 pi i (n + eps/2) eps'/2) = exp(2 pi i (n eps'/2 + eps eps'/4)).
  const Rat half = eps_prime / 2;
  const Rat quarter = eps * eps_prime / 4;
  const mpz_class m = lcm(half.get_den(), quarter.get_den());
  return m.get_si();
}

std::string Characteristic::to_string() const { return eps.get_str() + "," + eps_prime.get_str(); }

Characteristic Characteristic::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("characteristic must be 'eps,eps_prime': '" + std::string(text) + "'");
  }
  return {parse_rat(text.substr(0, comma)), parse_rat(text.substr(comma + 1))};
}

ZJet theta_jet(const CyclotomicField& field, const ThetaSpec& spec) {
  if (spec.tau_scale < 1) throw std::invalid_argument("tau scale must be >= 1");
  if (spec.z_order < 0) throw std::invalid_argument("z-order must be >= 0");
  const Characteristic& ch = spec.ch;
  check_embedding(field, ch);
  const int K = spec.z_order;

  // (2i)^k / k!
  std::vector<Cyc> prefactor;
  Cyc two_i = field.imaginary_unit() * make_rat(2);
  prefactor.push_back(field.one());
  for (int k = 1; k <= K; ++k) prefactor.push_back(prefactor.back() * two_i * make_rat(1, k));

  std::vector<std::vector<Term>> terms(K + 1);
  const Rat half_eps = ch.eps / 2;
  auto add_index = [&](const mpz_class& n) -> bool {
    const Rat a = Rat(n) + half_eps;
    Rat e = a * a * spec.tau_scale / 2;
    if (e >= spec.trunc) return false;
    const Cyc base = phase(field, a * ch.eps_prime / 2, ch);
    Rat a_pow(1);
    for (int k = 0; k <= K; ++k) {
      if (k > 0) a_pow *= a;
      if (sgn(a_pow) == 0) break;
      terms[k].push_back({e, base * prefactor[k] * a_pow});
    }
    return true;
  };
  // s a^2 / 2 is convex in n with its minimum near n = -eps/2.
  const mpz_class start = rat_floor(-half_eps);
  for (mpz_class n = start; add_index(n); ++n) {
  }
  for (mpz_class n = start - 1; add_index(n); --n) {
  }

  std::vector<PiSeries> coeffs;
  for (int k = 0; k <= K; ++k) {
    coeffs.push_back(PiSeries::from_terms(field, k, spec.trunc, std::move(terms[k])));
  }
  return ZJet(std::move(coeffs));
}

PiSeries theta_const(const CyclotomicField& field, const Characteristic& ch, int tau_scale,
                     const Rat& trunc) {
  return theta_jet(field, {ch, tau_scale, 0, trunc})[0];
}

PiSeries theta_prime(const CyclotomicField& field, const Characteristic& ch, int tau_scale,
                     const Rat& trunc) {
  return theta_jet(field, {ch, tau_scale, 1, trunc})[1];
}

PiSeries theta_double_prime(const CyclotomicField& field, const Characteristic& ch, int tau_scale,
                            const Rat& trunc) {
  return theta_jet(field, {ch, tau_scale, 2, trunc})[2].scaled(2);
}

PiSeries theta_triple_product(const CyclotomicField& field, const ThetaSpec& spec) {
  if (spec.z_order != 0) throw std::invalid_argument("triple product is implemented for z = 0 only");
  if (spec.tau_scale < 1) throw std::invalid_argument("tau scale must be >= 1");
  const Characteristic& ch = spec.ch;
  if (abs(ch.eps) > 1) {
    throw std::invalid_argument("triple product needs |eps| <= 1, got [" + ch.to_string() + "]");
  }
  check_embedding(field, ch);
  const int s = spec.tau_scale;
  const Rat lead_exp = ch.eps * ch.eps * s / 8;
  const Rat rel_trunc = spec.trunc - lead_exp;
  if (rel_trunc <= 0) return PiSeries(field, 0, spec.trunc);

  const Cyc plus = phase(field, ch.eps_prime / 2, ch);    // e^{pi i eps'}
  const Cyc minus = phase(field, -ch.eps_prime / 2, ch);  // e^{-pi i eps'}

  PiSeries acc = PiSeries::constant(field.one(), 0, rel_trunc);
  auto times_binomial = [&](const Cyc& c, const Rat& e) {
    // acc *= (1 + c q^e)
    if (sgn(e) == 0) {
      acc = acc.scaled(field.one() + c);
    } else if (e < rel_trunc) {
      acc += acc.scaled(c).shifted(e);
    }
  };
  const Cyc minus_one = field.from_int(-1);
  for (long n = 1;; ++n) {
    const Rat e_even = make_rat(s * n);
    const Rat e_plus = Rat(s) * (make_rat(2 * n - 1) + ch.eps) / 2;
    const Rat e_minus = Rat(s) * (make_rat(2 * n - 1) - ch.eps) / 2;
    if (e_even >= rel_trunc && e_plus >= rel_trunc && e_minus >= rel_trunc) break;
    times_binomial(minus_one, e_even);
    times_binomial(plus, e_plus);
    times_binomial(minus, e_minus);
    if (acc.empty()) break;
  }
  const Cyc prefix = phase(field, ch.eps * ch.eps_prime / 4, ch);
  return acc.scaled(prefix).shifted(lead_exp);
}

ZJet heat_residual(const CyclotomicField& field, const Characteristic& ch, int z_order,
                   const Rat& trunc) {
  if (z_order < 2) throw std::invalid_argument("heat residual needs z-order >= 2");
  const ZJet jet = theta_jet(field, {ch, 1, z_order, trunc});
  std::vector<PiSeries> out;
  for (int k = 0; k + 2 <= z_order; ++k) {
    out.push_back(jet[k + 2].scaled((k + 2) * (k + 1)) + q_ddq(jet[k]).scaled(8).times_pi(2));
  }
  for (auto& s : out) s = s.times_pi(-2);
  return ZJet(std::move(out));
}

Cyc shift_factor(const CyclotomicField& field, const Characteristic& ch, long n) {
  return phase(field, ch.eps * n / 2, ch);
}

}  // namespace thetaq
