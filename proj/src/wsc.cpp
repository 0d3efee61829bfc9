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

#include "pcr/wsc.hpp"

#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pcr/errors.hpp"
#include "pcr/util.hpp"

namespace pcr {
namespace {

using nlohmann::json;

struct TokenView {
  std::vector<std::string> texts;
  std::vector<std::string> folded;
};

std::vector<std::string> fold_all(const std::vector<std::string>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(to_lower(s));
  return out;
}

// Locates `needle_tokens` as a token n-gram. Prefers the last occurrence
// strictly before `before_token` (the antecedent convention); falls back to
// the first occurrence anywhere.
std::optional<std::pair<std::size_t, std::size_t>> locate_ngram(
    const std::vector<std::string>& folded_tokens,
    const std::vector<std::string>& needle_tokens,
    std::optional<std::size_t> before_token) {
  const std::size_t m = needle_tokens.size();
  if (m == 0 || folded_tokens.size() < m) return std::nullopt;
  std::optional<std::pair<std::size_t, std::size_t>> last_before, first_any;
  for (std::size_t i = 0; i + m <= folded_tokens.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < m; ++k) {
      if (folded_tokens[i + k] != needle_tokens[k]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    if (!first_any) first_any = {i, i + m - 1};
    if (before_token && i + m - 1 < *before_token) last_before = {i, i + m - 1};
  }
  if (last_before) return last_before;
  return first_any;
}

}  // namespace

WscParseResult parse_wsc_jsonl(std::istream& in, const Tokenizer& tokenizer,
                               const std::string& source_dataset) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_wsc_jsonl(buf.str(), tokenizer, source_dataset);
}

WscParseResult parse_wsc_jsonl(const std::string& text, const Tokenizer& tokenizer,
                               const std::string& source_dataset) {
  WscParseResult result;
  const std::vector<std::string> lines = split_lines(text);

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    if (trim(lines[li]).empty()) continue;
    json j;
    try {
      j = json::parse(lines[li]);
    } catch (const json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    const std::string id = j.value("id", source_dataset + "-" + std::to_string(line_no));
    auto exclude = [&](const std::string& reason) {
      result.excluded.push_back({line_no, id, reason});
    };

    try {
      std::vector<std::string> tokens;
      std::vector<std::size_t> sentence_starts;
      std::vector<std::size_t> cp_begin, cp_end;  // raw-text rows only

      if (j.contains("tokens")) {
        tokens = j.at("tokens").get<std::vector<std::string>>();
        if (j.contains("sentence_starts")) {
          sentence_starts = j.at("sentence_starts").get<std::vector<std::size_t>>();
        } else if (!tokens.empty()) {
          sentence_starts = {0};
        }
      } else if (j.contains("text")) {
        const std::string raw = j.at("text").get<std::string>();
        const TokenizedText tt = tokenizer.tokenize(raw);
        for (const auto& t : tt.tokens) {
          tokens.push_back(t.text);
          cp_begin.push_back(t.begin);
          cp_end.push_back(t.end);
        }
        sentence_starts = tt.sentence_starts;
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": row carries neither \"text\" nor \"tokens\"");
      }
      const std::vector<std::string> folded = fold_all(tokens);

      // Pronoun position.
      const std::string pronoun = j.at("pronoun").get<std::string>();
      const std::string pronoun_folded = to_lower(pronoun);
      std::optional<std::size_t> pronoun_tok;
      if (j.contains("pronoun_token")) {
        pronoun_tok = j.at("pronoun_token").get<std::size_t>();
      } else if (j.contains("pronoun_offset") && !cp_begin.empty()) {
        const auto off = j.at("pronoun_offset").get<std::size_t>();
        for (std::size_t t = 0; t < tokens.size(); ++t) {
          if (cp_begin[t] == off) {
            pronoun_tok = t;
            break;
          }
        }
        if (!pronoun_tok) {
          exclude("pronoun_offset_not_aligned");
          continue;
        }
      } else {
        // Unique case-folded occurrence.
        std::vector<std::size_t> hits;
        for (std::size_t t = 0; t < folded.size(); ++t) {
          if (folded[t] == pronoun_folded) hits.push_back(t);
        }
        if (hits.size() != 1) {
          exclude(hits.empty() ? "pronoun_not_locatable" : "pronoun_ambiguous");
          continue;
        }
        pronoun_tok = hits[0];
      }
      if (*pronoun_tok >= tokens.size() ||
          to_lower(tokens[*pronoun_tok]) != pronoun_folded) {
        exclude("pronoun_not_locatable");
        continue;
      }

      // Candidate spans.
      auto candidate_span = [&](int which)
          -> std::optional<std::pair<std::size_t, std::size_t>> {
        const std::string span_key = "candidate_" + std::to_string(which) + "_span";
        const std::string off_key = "candidate_" + std::to_string(which) + "_offset";
        const std::string str_key = "candidate_" + std::to_string(which);
        if (j.contains(span_key)) {
          const auto v = j.at(span_key).get<std::vector<std::size_t>>();
          if (v.size() != 2 || v[0] > v[1] || v[1] >= tokens.size()) return std::nullopt;
          return std::make_pair(v[0], v[1]);
        }
        const std::string surface = j.at(str_key).get<std::string>();
        const TokenizedText ct = tokenizer.tokenize(surface);
        std::vector<std::string> needle;
        for (const auto& t : ct.tokens) needle.push_back(to_lower(t.text));
        if (j.contains(off_key) && !cp_begin.empty()) {
          const auto off = j.at(off_key).get<std::size_t>();
          const std::size_t end_cp = off + utf8_length(surface);
          std::optional<std::size_t> first, last;
          for (std::size_t t = 0; t < tokens.size(); ++t) {
            if (cp_begin[t] == off) first = t;
            if (cp_end[t] == end_cp) last = t;
          }
          if (!first || !last || *first > *last) return std::nullopt;
          return std::make_pair(*first, *last);
        }
        return locate_ngram(folded, needle, pronoun_tok);
      };

      const auto c1 = candidate_span(1);
      const auto c2 = candidate_span(2);
      if (!c1 || !c2) {
        exclude("candidate_not_locatable");
        continue;
      }
      if (*c1 == *c2) {
        exclude("degenerate_candidates");
        continue;
      }
      const auto overlaps_pronoun = [&](const std::pair<std::size_t, std::size_t>& s) {
        return s.first <= *pronoun_tok && *pronoun_tok <= s.second;
      };
      if (overlaps_pronoun(*c1) || overlaps_pronoun(*c2)) {
        exclude("candidate_overlaps_pronoun");
        continue;
      }

      // Gold label: index or surface string.
      auto surface_of = [&](const std::pair<std::size_t, std::size_t>& s) {
        std::string out;
        for (std::size_t t = s.first; t <= s.second; ++t) {
          if (!out.empty()) out += ' ';
          out += tokens[t];
        }
        return out;
      };
      int gold = 0;
      const json& gj = j.at("gold");
      if (gj.is_number_integer()) {
        gold = gj.get<int>();
        if (gold != 1 && gold != 2) {
          exclude("gold_unresolvable");
          continue;
        }
      } else {
        const std::string g = to_lower(gj.get<std::string>());
        const bool m1 = to_lower(surface_of(*c1)) == g;
        const bool m2 = to_lower(surface_of(*c2)) == g;
        if (m1 == m2) {
          exclude("gold_unresolvable");
          continue;
        }
        gold = m1 ? 1 : 2;
      }

      // Footnote-2 inventory filter: flagged rows are excluded downstream.
      if (!PronounInventory::standard().contains(pronoun)) {
        exclude("pronoun_outside_inventory");
        continue;
      }

      PCRInstance inst;
      inst.instance_id = id;
      inst.source_dataset = source_dataset;
      inst.context_tokens = tokens;
      inst.pronoun = {*pronoun_tok, *pronoun_tok, tokens[*pronoun_tok]};
      inst.candidate_1 = {c1->first, c1->second, surface_of(*c1)};
      inst.candidate_2 = {c2->first, c2->second, surface_of(*c2)};
      inst.gold_label = gold;
      inst.validate();
      result.instances.push_back(std::move(inst));
    } catch (const json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return result;
}

}  // namespace pcr
