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

#include <stdexcept>
#include <string>

namespace thetaq {

/// Root-of-unity order (or field order) not compatible with the engine field.
class OrderMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedRadicandError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two series of different pi-grade are added. An identity that
/// triggers this is dimensionally inconsistent.
class GradeMismatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NonInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A characteristic needs a root of unity the field does not contain.
class EmbeddingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coefficient at or beyond the truncation order was requested.
class PrecisionError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace thetaq
