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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace thetaq {

/// Arbitrary-precision rational. mpq_class keeps values in lowest terms with a
/// positive denominator as long as every value enters through make_rat or
/// parse_rat (both canonicalize).
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

/// Parses "p" or "p/q" (optional sign, no spaces). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);

/// Always "p/q", including q = 1 ("50/1").
std::string to_fraction(const Rat& r);

mpz_class rat_floor(const Rat& r);
mpz_class rat_ceil(const Rat& r);

mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace thetaq
