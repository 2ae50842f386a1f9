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
#include <algorithm>

#include "thetaq/errors.hpp"
#include "thetaq/series.hpp"

namespace thetaq {

ZJet::ZJet(std::vector<PiSeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("jet needs at least the z^0 coefficient");
  for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k) {
    if (!coeffs_[k].empty() && coeffs_[k].grade() != k) {
      throw GradeMismatchError("jet coefficient of z^" + std::to_string(k) + " has pi-grade " +
                               std::to_string(coeffs_[k].grade()));
    }
  }
}

ZJet ZJet::scaled(const PiSeries& s) const {
  if (!s.empty() && s.grade() != 0) {
    throw GradeMismatchError("jets can only be scaled by grade-0 series");
  }
  std::vector<PiSeries> out;
  out.reserve(coeffs_.size());
  for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k) {
    PiSeries c = coeffs_[k] * s;
    out.push_back(c.empty() ? PiSeries(c.field(), k, c.trunc()) : std::move(c));
  }
  return ZJet(std::move(out));
}

ZJet ZJet::scaled(const Cyc& c) const {
  std::vector<PiSeries> out;
  for (const auto& s : coeffs_) out.push_back(s.scaled(c));
  return ZJet(std::move(out));
}

ZJet ZJet::truncated(const Rat& t) const {
  std::vector<PiSeries> out;
  for (const auto& s : coeffs_) out.push_back(s.truncated(t));
  return ZJet(std::move(out));
}

Rat ZJet::trunc() const {
  Rat t = coeffs_.front().trunc();
  for (const auto& s : coeffs_) t = std::min(t, s.trunc());
  return t;
}

ZJet ZJet::operator-() const {
  std::vector<PiSeries> out;
  for (const auto& s : coeffs_) out.push_back(-s);
  return ZJet(std::move(out));
}

namespace {

void check_orders(const ZJet& a, const ZJet& b) {
  if (a.z_order() != b.z_order()) {
    throw std::invalid_argument("jets of z-order " + std::to_string(a.z_order()) + " and " +
                                std::to_string(b.z_order()) + " combined");
  }
}

}  // namespace

ZJet operator+(const ZJet& a, const ZJet& b) {
  check_orders(a, b);
  std::vector<PiSeries> out;
  for (int k = 0; k <= a.z_order(); ++k) out.push_back(a[k] + b[k]);
  return ZJet(std::move(out));
}

ZJet operator-(const ZJet& a, const ZJet& b) { return a + (-b); }

ZJet operator*(const ZJet& a, const ZJet& b) {
  check_orders(a, b);
  std::vector<PiSeries> out;
  for (int k = 0; k <= a.z_order(); ++k) {
    PiSeries c = a[0] * b[k];
    for (int i = 1; i <= k; ++i) c += a[i] * b[k - i];
    out.push_back(c.empty() ? PiSeries(c.field(), k, c.trunc()) : std::move(c));
  }
  return ZJet(std::move(out));
}

JetZeroTest zero_test(const ZJet& j) {
  for (int k = 0; k <= j.z_order(); ++k) {
    if (!j[k].empty()) return {false, k, j[k].terms().front()};
  }
  return {};
}

}  // namespace thetaq
