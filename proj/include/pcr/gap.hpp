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

#include <istream>
#include <string>
#include <vector>

#include "pcr/document.hpp"
#include "pcr/tokenizer.hpp"

namespace pcr {

struct GapParseResult {
  std::vector<Document> documents;
  std::size_t skipped_label_rows = 0;    // both-or-neither candidate marked true
  std::size_t rejected_offset_rows = 0;  // offsets never aligned to tokens
  std::vector<std::string> diagnostics;  // one entry per rejected row
};

// Parses GAP-style TSV: a header row naming at least Text, Pronoun,
// Pronoun-offset, A, A-offset, A-coref, B, B-offset, B-coref (ID and URL
// optional). Offsets are code-point offsets into the UTF-8 text. Each kept
// row becomes one Document whose chain 0 holds the coreferring candidate and
// the pronoun, and chain 1 the distractor candidate. Rows are kept only when
// exactly one candidate label is true; offset misalignments are rejected
// with a diagnostic.
GapParseResult parse_gap_tsv(std::istream& in, const Tokenizer& tokenizer);
GapParseResult parse_gap_tsv(const std::string& text, const Tokenizer& tokenizer);

}  // namespace pcr
