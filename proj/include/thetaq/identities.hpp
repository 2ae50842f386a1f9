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
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "thetaq/cyclotomic.hpp"
#include "thetaq/etaq.hpp"
#include "thetaq/rat.hpp"
#include "thetaq/series.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

/**
 * Per-check construction context: one field, one input truncation, and a
 * cache of theta jets so each characteristic is expanded once per check.
 * Not thread-safe; every check run gets its own workspace.
 */
class Workspace {
 public:
  Workspace(const CyclotomicField& field, Rat trunc, int z_order, long t4_range);

  const CyclotomicField& field() const noexcept { return *field_; }
  const Rat& trunc() const noexcept { return trunc_; }
  int z_order() const noexcept { return z_order_; }
  long t4_range() const noexcept { return t4_range_; }

  /// theta[eps; eps'](0, tau_scale * tau)
  const PiSeries& th(const Rat& eps, const Rat& eps_prime, int tau_scale = 1);
  /// theta'[eps; eps'] (grade 1)
  const PiSeries& th1(const Rat& eps, const Rat& eps_prime);
  /// theta''[eps; eps'] (grade 2)
  const PiSeries& th2(const Rat& eps, const Rat& eps_prime);
  /// z-jet of theta[eps; eps'](z, tau) to z_order()
  const ZJet& jet(const Rat& eps, const Rat& eps_prime);

  /// prod (q^k; q^k)^r over the given factors, without the q^(k r / 24) shift.
  PiSeries poch(std::initializer_list<EtaFactor> factors) const;
  PiSeries eta(const EtaQuotient& quot) const;
  PiSeries eisenstein(Eisenstein which) const;
  PiSeries constant(const Cyc& c, int grade = 0) const;

  Cyc num(long n) const { return field_->from_int(n); }
  Cyc frac(long p, long q) const { return field_->from_rat(make_rat(p, q)); }
  Cyc sqrt(int n) const { return field_->sqrt_int(n); }
  Cyc i() const { return field_->imaginary_unit(); }

 private:
  struct Derivatives {
    ZJet jet;
    PiSeries first;
    PiSeries second;
  };
  const Derivatives& derivatives(const Rat& eps, const Rat& eps_prime);

  const CyclotomicField* field_;
  Rat trunc_;
  int z_order_;
  long t4_range_;
  std::map<std::pair<Rat, Rat>, Derivatives> jets_;
  std::map<std::tuple<Rat, Rat, int>, PiSeries> scaled_;
};

/// Residual of one check: every part must vanish. probe is a representative
/// non-residual series (usually one side of the identity) kept for
/// truncation-stability comparisons.
using ResidualPart = std::variant<PiSeries, ZJet>;

struct Residual {
  std::vector<ResidualPart> parts;
  PiSeries probe;
};

/// q dW/dq = g(q) * p(W) with p(W) = sum_j p[j] W^j.
struct RiccatiSpec {
  std::function<PiSeries(Workspace&)> w;
  std::function<PiSeries(Workspace&)> g;
  std::vector<Cyc> p;
};

/// q dW/dq - g * p(W).
PiSeries riccati_residual(const RiccatiSpec& spec, Workspace& ws);

struct RunConfig {
  int field_order = CyclotomicField::kDefaultOrder;
  Rat q_order = Rat(50);
  int z_order = 4;
  long t4_range = 200;
  unsigned threads = 1;
  std::string filter = "*";  // glob over check ids
};

struct CheckDef {
  std::string id;
  std::string statement;
  bool z_jet = false;
  std::function<Residual(Workspace&, bool perturbed)> build;
  /// Order the residual must be verified to; defaults to RunConfig::q_order.
  std::function<Rat(const RunConfig&)> order;
};

struct Witness {
  std::string exponent;
  std::string coefficient;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  std::string id;
  std::string paper_ref;
  Rat q_order;
  std::optional<int> z_order;
  bool pass = false;
  std::optional<Witness> witness;  // present iff !pass
  std::int64_t millis = 0;
  std::optional<std::string> diagnostic;  // set when construction threw
};

struct CheckOutcome {
  CheckReport report;
  std::optional<PiSeries> probe;
};

/// All registered checks, sorted by id.
const std::vector<CheckDef>& registry();

const CheckDef* find_check(const std::string& id);

/// Every characteristic any registered check expands at z = 0.
std::vector<Characteristic> registry_characteristics();

/// shell-style glob (*, ?, [...]) over check ids
bool id_matches(const std::string& pattern, const std::string& id);

/// Runs one check; construction errors become a failed report. A perturbed
/// run reports id "<id>.perturbed" and is expected to fail.
CheckOutcome run_check(const CheckDef& def, const RunConfig& cfg, bool perturbed = false);

/// Runs every check matching cfg.filter on up to cfg.threads threads;
/// reports come back ordered by id.
std::vector<CheckReport> run_all(const RunConfig& cfg);

/// Perturbed variant of every check matching cfg.filter.
std::vector<CheckReport> run_negative_controls(const RunConfig& cfg);

}  // namespace thetaq
