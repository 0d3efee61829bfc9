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

#include "pcr/tokenizer.hpp"

#include <set>

#include "pcr/util.hpp"

namespace pcr {
namespace {

bool is_space_cp(char32_t c) {
  switch (c) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00A0:   // no-break space
    case 0x202F:   // narrow no-break space
    case 0x3000:   // ideographic space
    case 0x200B:   // zero width space
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool is_punct_cp(char32_t c) {
  if (c < 0x80) {
    return (c >= U'!' && c <= U'/') || (c >= U':' && c <= U'@') ||
           (c >= U'[' && c <= U'`') || (c >= U'{' && c <= U'~');
  }
  switch (c) {
    case 0x2018:  // left single quote
    case 0x2019:  // right single quote
    case 0x201C:  // left double quote
    case 0x201D:  // right double quote
    case 0x00AB:  // «
    case 0x00BB:  // »
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2026:  // ellipsis
    case 0x00A1:  // ¡
    case 0x00BF:  // ¿
      return true;
    default:
      return false;
  }
}

bool is_terminator(std::string_view token) {
  return token == "." || token == "!" || token == "?" ||
         token == "\xE2\x80\xA6";  // …
}

bool is_closing(std::string_view token) {
  return token == "\"" || token == "'" || token == ")" || token == "]" ||
         token == "\xE2\x80\x9D" || token == "\xE2\x80\x99";  // ” ’
}

bool can_start_sentence(std::string_view token) {
  if (token.empty()) return false;
  const auto c = static_cast<unsigned char>(token.front());
  if (c >= '0' && c <= '9') return true;
  if (c >= 'A' && c <= 'Z') return true;
  // The next sentence may start quoted.
  return token == "\"" || starts_with(token, "\xE2\x80\x9C");
}

const std::set<std::string>& abbreviations() {
  static const std::set<std::string> kAbbrev = {
      "mr",  "mrs", "ms",  "dr",  "prof", "st",  "jr",  "sr",  "vs",
      "etc", "e.g", "i.e", "no",  "gen",  "sen", "rep", "fig", "al",
      "inc", "ltd", "co",  "corp"};
  return kAbbrev;
}

}  // namespace

TokenizedText RuleTokenizer::tokenize(std::string_view utf8_text) const {
  const std::vector<CodePoint> cps = decode_utf8(utf8_text);
  TokenizedText out;

  auto substr_cps = [&](std::size_t b, std::size_t e) {
    const std::size_t byte_b = cps[b].byte_offset;
    const std::size_t byte_e = cps[e - 1].byte_offset + cps[e - 1].byte_len;
    return std::string(utf8_text.substr(byte_b, byte_e - byte_b));
  };
  auto push = [&](std::size_t b, std::size_t e) {
    out.tokens.push_back({substr_cps(b, e), b, e});
  };

  // Whitespace split, then peel punctuation off both edges of each chunk.
  // Punctuation strictly inside the word core stays attached, which keeps
  // contractions ("y'all", "don't"), hyphenations and decimals intact.
  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    while (i < n && is_space_cp(cps[i].value)) ++i;
    const std::size_t b = i;
    while (i < n && !is_space_cp(cps[i].value)) ++i;
    if (b == i) continue;
    const std::size_t e = i;

    std::size_t first_word = e;
    std::size_t last_word = b;
    for (std::size_t k = b; k < e; ++k) {
      if (!is_punct_cp(cps[k].value)) {
        if (first_word == e) first_word = k;
        last_word = k;
      }
    }
    if (first_word == e) {
      // Pure punctuation chunk: one token per code point.
      for (std::size_t k = b; k < e; ++k) push(k, k + 1);
      continue;
    }
    for (std::size_t k = b; k < first_word; ++k) push(k, k + 1);
    push(first_word, last_word + 1);
    for (std::size_t k = last_word + 1; k < e; ++k) push(k, k + 1);
  }

  // Sentence boundaries.
  if (!out.tokens.empty()) out.sentence_starts.push_back(0);
  std::size_t k = 0;
  while (k < out.tokens.size()) {
    const auto& tok = out.tokens[k];
    if (is_terminator(tok.text)) {
      bool abbrev = false;
      if (tok.text == "." && k > 0) {
        std::string prev = to_lower(out.tokens[k - 1].text);
        while (!prev.empty() && prev.back() == '.') prev.pop_back();
        abbrev = abbreviations().count(prev) > 0;
      }
      if (!abbrev) {
        // Close quotes and brackets belong to the finished sentence.
        std::size_t next = k + 1;
        while (next < out.tokens.size() && is_closing(out.tokens[next].text)) {
          ++next;
        }
        if (next < out.tokens.size() && can_start_sentence(out.tokens[next].text)) {
          out.sentence_starts.push_back(next);
          k = next;
          continue;
        }
      }
    }
    ++k;
  }
  return out;
}

}  // namespace pcr
