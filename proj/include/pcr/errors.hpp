// Copyright 2026 The pcrbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace pcr {

// Malformed input bytes (bad column counts, unbalanced coref parentheses, ...).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input that violates a data contract (duplicate ids,
// missing predictions, coverage gaps).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller misconfiguration (unknown template, missing spans for a
// span-requiring template, bad placeholder).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scoring backend failure. Retried by run_batch; surfaces as an unscored
// instance once retries are exhausted.
class ScorerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcr
