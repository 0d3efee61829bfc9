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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pcr {

// One token plus its code-point offsets [begin, end) in the raw text.
struct TokenizerSpan {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct TokenizedText {
  std::vector<TokenizerSpan> tokens;
  std::vector<std::size_t> sentence_starts;  // token indices; begins with 0
};

// Raw-text datasets need tokenization before span alignment. The interface is
// pluggable so callers can substitute the segmentation their corpus was
// annotated with; span parity with external pipelines requires either a
// matching Tokenizer or pre-tokenized input.
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;
  virtual TokenizedText tokenize(std::string_view utf8_text) const = 0;
};

// Deterministic default: Unicode whitespace split plus punctuation
// detachment. Leading and trailing punctuation code points become their own
// tokens; internal apostrophes and hyphens are kept ("y'all", "don't",
// "3.5"). Sentences break after . ! ? or unicode ellipsis unless the
// preceding word is a known abbreviation; trailing close quotes stay with
// the finished sentence.
class RuleTokenizer : public Tokenizer {
 public:
  TokenizedText tokenize(std::string_view utf8_text) const override;
};

}  // namespace pcr
