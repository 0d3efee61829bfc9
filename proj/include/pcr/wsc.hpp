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

#include "pcr/instance.hpp"
#include "pcr/tokenizer.hpp"

namespace pcr {

struct WscExclusion {
  std::size_t line_no = 0;
  std::string instance_id;
  std::string reason;
};

struct WscParseResult {
  std::vector<PCRInstance> instances;
  std::vector<WscExclusion> excluded;
};

// Parses WSC-like challenge sets from JSONL, one object per line. Two row
// shapes are accepted (see docs/formats.md): raw text with character
// offsets, tokenized here; or pre-tokenized rows carrying token spans. The
// gold candidate may be named by index (1/2) or by surface string. Rows
// whose pronoun falls outside the 16-form inventory, whose candidates are
// degenerate, or whose candidate strings cannot be located are excluded
// with a reason rather than failing the parse.
WscParseResult parse_wsc_jsonl(std::istream& in, const Tokenizer& tokenizer,
                               const std::string& source_dataset = "wsc");
WscParseResult parse_wsc_jsonl(const std::string& text, const Tokenizer& tokenizer,
                               const std::string& source_dataset = "wsc");

}  // namespace pcr
