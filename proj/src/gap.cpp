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

#include "pcr/gap.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "pcr/errors.hpp"
#include "pcr/util.hpp"

namespace pcr {
namespace {

// Token range [first, last] covering code points [begin, begin+len) exactly,
// or nullopt when the boundaries fall inside tokens.
std::optional<MentionSpan> align_span(const TokenizedText& tt, std::size_t begin,
                                      std::size_t len) {
  const std::size_t end = begin + len;  // code points, exclusive
  std::optional<std::size_t> first, last;
  for (std::size_t i = 0; i < tt.tokens.size(); ++i) {
    if (tt.tokens[i].begin == begin) first = i;
    if (tt.tokens[i].end == end) last = i;
  }
  if (!first || !last || *first > *last) return std::nullopt;
  return MentionSpan{*first, *last, std::nullopt};
}

bool parse_bool(const std::string& s) {
  const std::string v = to_lower(trim(s));
  return v == "true" || v == "1" || v == "yes";
}

}  // namespace

GapParseResult parse_gap_tsv(std::istream& in, const Tokenizer& tokenizer) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_gap_tsv(buf.str(), tokenizer);
}

GapParseResult parse_gap_tsv(const std::string& text, const Tokenizer& tokenizer) {
  GapParseResult result;
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty GAP file: missing header row");

  std::map<std::string, std::size_t> col;
  {
    const std::vector<std::string> header = split(lines[0], '\t');
    for (std::size_t i = 0; i < header.size(); ++i) {
      col[to_lower(trim(header[i]))] = i;
    }
    for (const char* required :
         {"text", "pronoun", "pronoun-offset", "a", "a-offset", "a-coref", "b",
          "b-offset", "b-coref"}) {
      if (!col.count(required)) {
        throw ParseError(std::string("GAP header missing column '") + required + "'");
      }
    }
  }

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    if (trim(lines[li]).empty()) continue;
    const std::vector<std::string> f = split(lines[li], '\t');
    auto field = [&](const char* name) -> const std::string& {
      const std::size_t idx = col.at(name);
      if (idx >= f.size()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": row has too few columns");
      }
      return f[idx];
    };

    const bool a_coref = parse_bool(field("a-coref"));
    const bool b_coref = parse_bool(field("b-coref"));
    if (a_coref == b_coref) {
      ++result.skipped_label_rows;
      continue;
    }

    const std::string& raw_text = field("text");
    const TokenizedText tt = tokenizer.tokenize(raw_text);
    const std::string row_id =
        col.count("id") && col.at("id") < f.size() && !f[col.at("id")].empty()
            ? f[col.at("id")]
            : "gap-row-" + std::to_string(line_no);

    const auto pron_off = static_cast<std::size_t>(
        std::stol(field("pronoun-offset")));
    const auto a_off = static_cast<std::size_t>(std::stol(field("a-offset")));
    const auto b_off = static_cast<std::size_t>(std::stol(field("b-offset")));

    auto pron = align_span(tt, pron_off, utf8_length(field("pronoun")));
    auto a_span = align_span(tt, a_off, utf8_length(field("a")));
    auto b_span = align_span(tt, b_off, utf8_length(field("b")));
    if (!pron || !a_span || !b_span) {
      ++result.rejected_offset_rows;
      std::string which = !pron ? "pronoun" : (!a_span ? "candidate A" : "candidate B");
      result.diagnostics.push_back(row_id + ": " + which +
                                   " offset not aligned to token boundaries");
      continue;
    }

    // Chain 0: the coreferring candidate plus the pronoun. Chain 1: the
    // distractor.
    const MentionSpan& gold = a_coref ? *a_span : *b_span;
    const MentionSpan& other = a_coref ? *b_span : *a_span;

    Document doc;
    doc.doc_id = row_id;
    doc.tokens.reserve(tt.tokens.size());
    for (std::size_t i = 0; i < tt.tokens.size(); ++i) {
      std::size_t sentence = 0;
      for (std::size_t s = 0; s < tt.sentence_starts.size(); ++s) {
        if (tt.sentence_starts[s] <= i) sentence = s;
      }
      doc.tokens.push_back({tt.tokens[i].text, sentence, i});
    }
    doc.sentence_starts = tt.sentence_starts;

    MentionSpan g = gold, p = *pron, d = other;
    g.cluster_id = 0;
    p.cluster_id = 0;
    d.cluster_id = 1;
    doc.chains[0] = g.start <= p.start ? std::vector<MentionSpan>{g, p}
                                       : std::vector<MentionSpan>{p, g};
    doc.chains[1] = {d};
    doc.validate();
    result.documents.push_back(std::move(doc));
  }
  return result;
}

}  // namespace pcr
