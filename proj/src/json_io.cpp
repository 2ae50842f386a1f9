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
#include "thetaq/json_io.hpp"

namespace thetaq {

using nlohmann::json;

json report_to_json(const CheckReport& r) {
  json j;
  j["id"] = r.id;
  j["paperRef"] = r.paper_ref;
  j["qOrder"] = to_fraction(r.q_order);
  j["zOrder"] = r.z_order ? json(*r.z_order) : json(nullptr);
  j["pass"] = r.pass;
  j["witness"] = r.witness ? json{{"exponent", r.witness->exponent},
                                  {"coefficient", r.witness->coefficient}}
                           : json(nullptr);
  j["millis"] = r.millis;
  j["diagnostic"] = r.diagnostic ? json(*r.diagnostic) : json(nullptr);
  return j;
}

CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.id = j.at("id").get<std::string>();
  r.paper_ref = j.at("paperRef").get<std::string>();
  r.q_order = parse_rat(j.at("qOrder").get<std::string>());
  if (!j.at("zOrder").is_null()) r.z_order = j.at("zOrder").get<int>();
  r.pass = j.at("pass").get<bool>();
  if (const auto& w = j.at("witness"); !w.is_null()) {
    r.witness = Witness{w.at("exponent").get<std::string>(), w.at("coefficient").get<std::string>()};
  }
  r.millis = j.at("millis").get<std::int64_t>();
  if (j.contains("diagnostic") && !j.at("diagnostic").is_null()) {
    r.diagnostic = j.at("diagnostic").get<std::string>();
  }
  return r;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

std::vector<CheckReport> reports_from_json(const std::string& text) {
  std::vector<CheckReport> out;
  for (const auto& j : json::parse(text)) out.push_back(report_from_json(j));
  return out;
}

json series_to_json(const PiSeries& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) {
    json coeff = json::array();
    const int n = s.field().degree();
    for (int p = 0; p < n; ++p) {
      Rat c = t.coeff.coeff(p);
      if (c != 0) coeff.push_back(json::array({p, to_fraction(c)}));
    }
    terms.push_back({{"exp", to_fraction(t.exponent)}, {"coeff", std::move(coeff)}});
  }
  return {{"fieldOrder", s.field().order()},
          {"grade", s.grade()},
          {"trunc", to_fraction(s.trunc())},
          {"terms", std::move(terms)}};
}

PiSeries series_from_json(const json& j) {
  const CyclotomicField& field = CyclotomicField::of(j.at("fieldOrder").get<int>());
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    Cyc c = field.zero();
    for (const auto& pc : t.at("coeff")) {
      c += field.zeta_power(pc.at(0).get<long>()) * parse_rat(pc.at(1).get<std::string>());
    }
    terms.push_back({parse_rat(t.at("exp").get<std::string>()), std::move(c)});
  }
  return PiSeries::from_terms(field, j.at("grade").get<int>(),
                              parse_rat(j.at("trunc").get<std::string>()), std::move(terms));
}

}  // namespace thetaq
