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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace pcr {

inline constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

// FNV-1a. Used wherever a platform-stable hash is required (per-document rng
// seeding, the mock scorer); std::hash is implementation-defined.
constexpr std::uint64_t fnv1a(std::string_view s, std::uint64_t h = kFnvOffset) {
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

// Derives an independent stream seed from (global_seed, key).
std::uint64_t mix_seed(std::uint64_t global_seed, std::string_view key);

// Unbiased draw in [0, n). The standard distributions are not bit-reproducible
// across library implementations; mt19937_64 itself is.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// Fisher-Yates with uniform_below, reproducible everywhere.
template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

// ASCII case fold; sufficient for the pronoun inventory and lexicon keys.
std::string to_lower(std::string_view s);

std::string trim(std::string_view s);

// Splits on a single separator, keeping empty fields.
std::vector<std::string> split(std::string_view s, char sep);

// Splits on runs of ASCII whitespace, dropping empty fields.
std::vector<std::string> split_ws(std::string_view s);

// Splits text into lines; tolerates \r\n and a missing final newline.
std::vector<std::string> split_lines(std::string_view text);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

struct CodePoint {
  char32_t value = 0;
  std::size_t byte_offset = 0;
  std::size_t byte_len = 0;
};

// Minimal UTF-8 decode; invalid bytes decode as U+FFFD of length 1 so offsets
// stay consistent with the input.
std::vector<CodePoint> decode_utf8(std::string_view s);

// Number of code points in a UTF-8 string.
std::size_t utf8_length(std::string_view s);

}  // namespace pcr
