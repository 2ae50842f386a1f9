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
#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "thetaq/errors.hpp"
#include "thetaq/identities.hpp"
#include "thetaq/json_io.hpp"

namespace thetaq::cli {
namespace {

struct Options {
  std::string order = "50";
  int z_order = 4;
  int field_order = CyclotomicField::kDefaultOrder;
  std::string format = "text";
  std::string out_path;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("THETA_RICCATI_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      throw ConfigError("THETA_RICCATI_THREADS must be a positive integer");
    }
    n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

RunConfig make_config(const Options& o) {
  RunConfig cfg;
  try {
    cfg.q_order = parse_rat(o.order);
  } catch (const std::invalid_argument&) {
    throw ConfigError("invalid --order: " + o.order);
  }
  if (cfg.q_order <= 0) throw ConfigError("--order must be positive");
  if (o.z_order < 2) throw ConfigError("--zorder must be at least 2");
  if (o.field_order <= 0 || o.field_order % CyclotomicField::kDefaultOrder != 0) {
    throw ConfigError("--field-order must be a positive multiple of 240");
  }
  cfg.z_order = o.z_order;
  cfg.field_order = o.field_order;
  cfg.threads = thread_cap();
  return cfg;
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw ConfigError("cannot open " + o.out_path);
  file << text;
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
  std::ostringstream s;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    passed += r.pass;
    s << (r.pass ? "PASS " : "FAIL ") << r.id << " qOrder=" << to_string(r.q_order);
    if (r.z_order) s << " zOrder=" << *r.z_order;
    s << " " << r.millis << "ms";
    if (r.witness) s << " witness q^(" << r.witness->exponent << "): " << r.witness->coefficient;
    if (r.diagnostic) s << " error: " << *r.diagnostic;
    s << "\n";
  }
  s << passed << "/" << reports.size() << " checks passed\n";
  return s.str();
}

int cmd_verify(const Options& o, bool all, const std::string& id, bool negative,
               std::ostream& out, std::ostream& err) {
  RunConfig cfg = make_config(o);
  if (!all && id.empty()) throw ConfigError("verify needs --all or --id");
  cfg.filter = all ? "*" : id;
  const bool any = std::any_of(registry().begin(), registry().end(),
                               [&](const CheckDef& d) { return id_matches(cfg.filter, d.id); });
  if (!any) throw ConfigError("no check matches '" + cfg.filter + "'");

  auto reports = negative ? run_negative_controls(cfg) : run_all(cfg);
  write_output(o, o.format == "json" ? reports_to_json(reports) : reports_to_text(reports), out);

  // A negative control is expected to fail; one that passes is the error.
  const auto bad = std::count_if(reports.begin(), reports.end(),
                                 [&](const CheckReport& r) { return r.pass == negative; });
  if (bad > 0) {
    err << bad << (negative ? " negative control(s) passed\n" : " check(s) failed\n");
    return kExitFailure;
  }
  return kExitOk;
}

/// Expands with growing input precision until the result is known to `order`.
template <class Build>
PiSeries expand_to(const CyclotomicField& field, const Rat& order, Build build) {
  Rat input = order;
  for (int attempt = 0; attempt < 8; ++attempt) {
    PiSeries s = build(field, input);
    if (s.trunc() >= order) return s.truncated(order);
    input += order - s.trunc();
  }
  throw PrecisionError("could not reach the requested order");
}

PiSeries theta_quotient(const CyclotomicField& field, const Rat& trunc, Rat a, Rat b, long n) {
  PiSeries ta = theta_const(field, {1, a}, 1, trunc);
  PiSeries tb = theta_const(field, {1, b}, 1, trunc);
  return pow(ta, n) * inverse(pow(tb, n));
}

PiSeries expand_named(const std::string& name, const CyclotomicField& field, const Rat& order) {
  if (name.rfind("theta:", 0) == 0) {
    std::string body = name.substr(6);
    int scale = 1;
    if (auto at = body.find('@'); at != std::string::npos) {
      try {
        scale = std::stoi(body.substr(at + 1));
      } catch (const std::exception&) {
        throw ConfigError("bad tau scale in " + name);
      }
      if (scale < 1) throw ConfigError("tau scale must be positive");
      body = body.substr(0, at);
    }
    Characteristic ch;
    try {
      ch = Characteristic::parse(body);
    } catch (const std::invalid_argument&) {
      throw ConfigError("bad characteristic in " + name);
    }
    return theta_const(field, ch, scale, order);
  }
  if (name.rfind("eta:", 0) == 0) {
    std::optional<EtaQuotient> quot;
    try {
      quot = EtaQuotient::parse(name.substr(4));
    } catch (const std::invalid_argument&) {
      throw ConfigError("bad eta quotient in " + name);
    }
    return eta_series(field, *quot, order);
  }
  if (name == "E2") return eisenstein(field, Eisenstein::E2, order);
  if (name == "E4") return eisenstein(field, Eisenstein::E4, order);
  if (name == "E6") return eisenstein(field, Eisenstein::E6, order);
  if (name == "W5" || name == "W6" || name == "W8") {
    return expand_to(field, order, [&](const CyclotomicField& f, const Rat& t) {
      if (name == "W5") return theta_quotient(f, t, make_rat(1, 5), make_rat(3, 5), 5);
      if (name == "W6") return theta_quotient(f, t, make_rat(1, 3), make_rat(2, 3), 4);
      return theta_quotient(f, t, make_rat(1, 4), make_rat(3, 4), 2);
    });
  }
  throw ConfigError("unknown series name '" + name + "'");
}

int cmd_expand(const Options& o, const std::string& name, std::ostream& out) {
  const RunConfig cfg = make_config(o);
  const CyclotomicField& field = CyclotomicField::of(cfg.field_order);
  const PiSeries s = [&] {
    try {
      return expand_named(name, field, cfg.q_order);
    } catch (const EmbeddingError& e) {
      throw ConfigError(std::string("unsupported characteristic: ") + e.what());
    }
  }();
  write_output(o, o.format == "json" ? series_to_json(s).dump(2) + "\n" : to_string(s) + "\n", out);
  return kExitOk;
}

int cmd_coeffs(const Options& o, const std::string& fn, long n_max, std::ostream& out) {
  if (n_max < 0) throw ConfigError("n_max must be non-negative");
  std::ostringstream s;
  if (fn == "t4") {
    s << "n,t4,sigma_2n_plus_1\n";
    for (long n = 0; n <= n_max; ++n) {
      s << n << "," << t4_count(n) << "," << sigma(1, 2 * n + 1).get_str() << "\n";
    }
  } else if (fn == "sigma1") {
    s << "n,sigma1\n";
    for (long n = 1; n <= n_max; ++n) s << n << "," << sigma(1, n).get_str() << "\n";
  } else if (fn == "kron8_twist") {
    s << "n,kron8_twist\n";
    for (long n = 1; n <= n_max; ++n) s << n << "," << kron8_twist(n).get_str() << "\n";
  } else {
    throw ConfigError("unknown function '" + fn + "' (t4, sigma1, kron8_twist)");
  }
  write_output(o, s.str(), out);
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--order", o.order, "q-order p or p/r (coefficients below q^order)");
  cmd->add_option("--zorder", o.z_order, "z-jet order K");
  cmd->add_option("--field-order", o.field_order, "cyclotomic field order, a multiple of 240");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series verification of theta-function identities", "theta-riccati"};
  app.require_subcommand(1);

  Options o;
  bool all = false, negative = false;
  std::string id, name, fn;
  long n_max = 0;

  auto* verify = app.add_subcommand("verify", "verify registered identities");
  add_common(verify, o);
  verify->add_flag("--all", all, "run every registered check");
  verify->add_option("--id", id, "glob over check ids");
  verify->add_flag("--negative-controls", negative, "run the perturbed variants instead");

  auto* expand = app.add_subcommand("expand", "expand a named series");
  add_common(expand, o);
  expand->add_option("name", name, "theta:<eps>,<eps'>[@k], eta:<k^r,...>, E2, E4, E6, W5, W6, W8")
      ->required();

  auto* coeffs = app.add_subcommand("coeffs", "print an arithmetic function as CSV");
  add_common(coeffs, o);
  coeffs->add_option("fn", fn, "t4, sigma1 or kron8_twist")->required();
  coeffs->add_option("n_max", n_max, "last n")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (*verify) return cmd_verify(o, all, id, negative, out, err);
    if (*expand) return cmd_expand(o, name, out);
    return cmd_coeffs(o, fn, n_max, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace thetaq::cli
