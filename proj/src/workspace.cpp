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
#include "thetaq/identities.hpp"

namespace thetaq {

Workspace::Workspace(const CyclotomicField& field, Rat trunc, int z_order, long t4_range)
    : field_(&field), trunc_(std::move(trunc)), z_order_(z_order), t4_range_(t4_range) {
  if (z_order_ < 2) throw std::invalid_argument("z-order must be >= 2");
}

const Workspace::Derivatives& Workspace::derivatives(const Rat& eps, const Rat& eps_prime) {
  auto key = std::make_pair(eps, eps_prime);
  if (auto it = jets_.find(key); it != jets_.end()) return it->second;
  ZJet jet = theta_jet(*field_, {{eps, eps_prime}, 1, z_order_, trunc_});
  PiSeries first = jet[1];
  PiSeries second = jet[2].scaled(2);
  return jets_.emplace(key, Derivatives{std::move(jet), std::move(first), std::move(second)})
      .first->second;
}

const PiSeries& Workspace::th(const Rat& eps, const Rat& eps_prime, int tau_scale) {
  if (tau_scale == 1) return derivatives(eps, eps_prime).jet[0];
  auto key = std::make_tuple(eps, eps_prime, tau_scale);
  if (auto it = scaled_.find(key); it != scaled_.end()) return it->second;
  return scaled_.emplace(key, theta_const(*field_, {eps, eps_prime}, tau_scale, trunc_))
      .first->second;
}

const PiSeries& Workspace::th1(const Rat& eps, const Rat& eps_prime) {
  return derivatives(eps, eps_prime).first;
}

const PiSeries& Workspace::th2(const Rat& eps, const Rat& eps_prime) {
  return derivatives(eps, eps_prime).second;
}

const ZJet& Workspace::jet(const Rat& eps, const Rat& eps_prime) {
  return derivatives(eps, eps_prime).jet;
}

PiSeries Workspace::poch(std::initializer_list<EtaFactor> factors) const {
  const EtaQuotient quot{std::vector<EtaFactor>(factors)};
  const Rat lead = quot.leading_exponent();
  return eta_series(*field_, quot, trunc_ + lead).shifted(-lead);
}

PiSeries Workspace::eta(const EtaQuotient& quot) const { return eta_series(*field_, quot, trunc_); }

PiSeries Workspace::eisenstein(Eisenstein which) const {
  return thetaq::eisenstein(*field_, which, trunc_);
}

PiSeries Workspace::constant(const Cyc& c, int grade) const {
  return PiSeries::constant(c, grade, trunc_);
}

PiSeries riccati_residual(const RiccatiSpec& spec, Workspace& ws) {
  const PiSeries w = spec.w(ws);
  const PiSeries g = spec.g(ws);
  PiSeries poly = PiSeries::constant(spec.p.at(0), 0, w.trunc());
  PiSeries power = w;
  for (std::size_t j = 1; j < spec.p.size(); ++j) {
    if (j > 1) power = power * w;
    poly += power.scaled(spec.p[j]);
  }
  return q_ddq(w) - g * poly;
}

}  // namespace thetaq
