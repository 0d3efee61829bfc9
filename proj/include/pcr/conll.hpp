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

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "pcr/document.hpp"

namespace pcr {

// Parses CoNLL-2012 coreference column format. Two dialects are accepted,
// auto-detected by column count:
//   - full CoNLL-2012 (>= 12 columns): word in column 4, speaker in column
//     10, coreference in the last column;
//   - minimal 4-column coref-only layout: word number, word, speaker,
//     coreference.
// One Document per `#begin document` ... `#end document` part. Nested and
// multi-line coreference spans are reconstructed from the parenthesized
// cluster ids. Throws ParseError with a line number on malformed input and
// names the cluster id on unbalanced parentheses.
std::vector<Document> parse_conll(std::istream& in);
std::vector<Document> parse_conll(const std::string& text);
std::vector<Document> parse_conll_file(const std::filesystem::path& path);

// Serializes to the minimal 4-column layout. The columns consumed by the
// parser (word, speaker, coreference) round-trip bit-exact; parse(write(d))
// equals d for any parsed document.
std::string write_conll(const Document& doc);
std::string write_conll(const std::vector<Document>& docs);

}  // namespace pcr
