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

#include <json.hpp>
#include <string>
#include <vector>

#include "thetaq/identities.hpp"
#include "thetaq/series.hpp"

namespace thetaq {

/// Keys are emitted in sorted order and rationals as "p/q" strings, so
/// dump(parse(dump(x))) == dump(x).
nlohmann::json report_to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);

std::string reports_to_json(const std::vector<CheckReport>& reports);
std::vector<CheckReport> reports_from_json(const std::string& text);

/// {"fieldOrder", "grade", "trunc", "terms": [{"exp", "coeff": [[power, "p/q"], ...]}]}
nlohmann::json series_to_json(const PiSeries& s);
PiSeries series_from_json(const nlohmann::json& j);

}  // namespace thetaq
