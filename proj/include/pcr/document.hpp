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
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pcr {

struct Token {
  std::string text;
  std::size_t sentence_index = 0;
  std::size_t index = 0;  // position in document; consecutive from 0
};

// Inclusive token range [start, end] tagged with its coreference cluster.
struct MentionSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::optional<int> cluster_id;

  bool overlaps(const MentionSpan& other) const {
    return start <= other.end && other.start <= end;
  }
  bool operator==(const MentionSpan& other) const {
    return start == other.start && end == other.end &&
           cluster_id == other.cluster_id;
  }
};

// A tokenized, sentence-segmented document with speakers and gold chains.
struct Document {
  std::string doc_id;
  std::optional<int> conll_part;  // part number from the #begin line, if any
  std::optional<std::string> genre;
  std::vector<Token> tokens;
  std::vector<std::size_t> sentence_starts;  // begins with 0, strictly increasing
  std::vector<std::string> speakers;         // per token, verbatim; empty when no column
  std::map<int, std::vector<MentionSpan>> chains;  // mentions sorted by (start, end)

  // doc_id plus the part number when present; unique within a corpus file.
  std::string unique_id() const;

  std::size_t sentence_count() const { return sentence_starts.size(); }
  std::size_t sentence_of(std::size_t token_index) const;

  // Half-open token range [begin, end) of one sentence.
  std::pair<std::size_t, std::size_t> sentence_range(std::size_t sentence) const;

  // Space-joined token text of a span.
  std::string surface(const MentionSpan& span) const;

  // True when any token carries a real speaker label (not "-", "_" or empty).
  bool has_speakers() const;

  // Throws DataError on a violated structural invariant.
  void validate() const;

  bool operator==(const Document& other) const;
};

}  // namespace pcr
