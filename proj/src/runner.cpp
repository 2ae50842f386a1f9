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
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "thetaq/errors.hpp"
#include "thetaq/identities.hpp"

namespace thetaq {
namespace {

constexpr int kMaxAttempts = 8;

Rat determined_order(const Residual& r) {
  std::optional<Rat> out;
  for (const auto& part : r.parts) {
    Rat t = std::visit([](const auto& x) { return Rat(x.trunc()); }, part);
    if (!out || t < *out) out = t;
  }
  return out ? *out : r.probe.trunc();
}

std::string render_coefficient(const Term& t, int grade) {
  std::string s = t.coeff.to_string();
  if (grade == 0) return s;
  if (!t.coeff.as_rational()) s = "(" + s + ")";
  return s + " * pi^" + std::to_string(grade);
}

std::optional<Witness> first_witness(const Residual& r, const Rat& order) {
  for (const auto& part : r.parts) {
    if (const auto* s = std::get_if<PiSeries>(&part)) {
      ZeroTest z = zero_test(s->truncated(order));
      if (!z.zero) {
        return Witness{to_fraction(z.witness->exponent), render_coefficient(*z.witness, s->grade())};
      }
    } else {
      const ZJet jet = std::get<ZJet>(part).truncated(order);
      JetZeroTest z = zero_test(jet);
      if (!z.zero) {
        return Witness{to_fraction(z.witness->exponent),
                       "z^" + std::to_string(z.z_power) + ": " +
                           render_coefficient(*z.witness, jet[z.z_power].grade())};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CheckOutcome run_check(const CheckDef& def, const RunConfig& cfg, bool perturbed) {
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome out;
  CheckReport& rep = out.report;
  rep.id = perturbed ? def.id + ".perturbed" : def.id;
  rep.paper_ref = def.statement;
  rep.q_order = def.order ? def.order(cfg) : cfg.q_order;
  if (def.z_jet) rep.z_order = cfg.z_order;

  try {
    const CyclotomicField& field = CyclotomicField::of(cfg.field_order);
    Rat input = rep.q_order;
    bool done = false;
    for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
      Workspace ws(field, input, cfg.z_order, cfg.t4_range);
      Residual r = def.build(ws, perturbed);
      const Rat got = determined_order(r);
      if (got < rep.q_order) {
        input += rep.q_order - got;
        continue;
      }
      rep.witness = first_witness(r, rep.q_order);
      rep.pass = !rep.witness;
      out.probe = r.probe.truncated(std::min(rep.q_order, r.probe.trunc()));
      done = true;
    }
    if (!done) throw PrecisionError("residual precision did not reach the requested order");
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.witness = Witness{"-", "-"};
    rep.diagnostic = e.what();
    out.probe.reset();
  }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return out;
}

namespace {

std::vector<CheckReport> run_selected(const RunConfig& cfg, bool perturbed) {
  std::vector<const CheckDef*> selected;
  for (const auto& def : registry()) {
    if (id_matches(cfg.filter, def.id)) selected.push_back(&def);
  }
  std::vector<CheckReport> reports(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      reports[i] = run_check(*selected[i], cfg, perturbed).report;
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(cfg.threads, selected.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

}  // namespace

std::vector<CheckReport> run_all(const RunConfig& cfg) { return run_selected(cfg, false); }

std::vector<CheckReport> run_negative_controls(const RunConfig& cfg) {
  return run_selected(cfg, true);
}

}  // namespace thetaq
