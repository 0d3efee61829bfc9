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

#include "pcr/document.hpp"

#include <algorithm>
#include <cstdio>

#include "pcr/errors.hpp"

namespace pcr {

std::string Document::unique_id() const {
  if (!conll_part) return doc_id;
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#p%03d", *conll_part);
  return doc_id + buf;
}

std::size_t Document::sentence_of(std::size_t token_index) const {
  auto it = std::upper_bound(sentence_starts.begin(), sentence_starts.end(),
                             token_index);
  if (it == sentence_starts.begin()) return 0;
  return static_cast<std::size_t>(it - sentence_starts.begin()) - 1;
}

std::pair<std::size_t, std::size_t> Document::sentence_range(
    std::size_t sentence) const {
  const std::size_t begin = sentence_starts.at(sentence);
  const std::size_t end = sentence + 1 < sentence_starts.size()
                              ? sentence_starts[sentence + 1]
                              : tokens.size();
  return {begin, end};
}

std::string Document::surface(const MentionSpan& span) const {
  std::string out;
  for (std::size_t i = span.start; i <= span.end && i < tokens.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i].text;
  }
  return out;
}

bool Document::has_speakers() const {
  for (const auto& s : speakers) {
    if (!s.empty() && s != "-" && s != "_") return true;
  }
  return false;
}

void Document::validate() const {
  if (!sentence_starts.empty() && sentence_starts.front() != 0) {
    throw DataError("document " + doc_id + ": sentence_starts must begin at 0");
  }
  for (std::size_t i = 1; i < sentence_starts.size(); ++i) {
    if (sentence_starts[i] <= sentence_starts[i - 1]) {
      throw DataError("document " + doc_id +
                      ": sentence_starts must strictly increase");
    }
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].index != i) {
      throw DataError("document " + doc_id + ": token indices not consecutive");
    }
    if (tokens[i].text.empty()) {
      throw DataError("document " + doc_id + ": empty token text");
    }
  }
  if (!speakers.empty() && speakers.size() != tokens.size()) {
    throw DataError("document " + doc_id + ": speaker/token count mismatch");
  }
  for (const auto& [cluster, mentions] : chains) {
    for (std::size_t i = 0; i < mentions.size(); ++i) {
      const auto& m = mentions[i];
      if (m.start > m.end || m.end >= tokens.size()) {
        throw DataError("document " + doc_id + ": mention out of bounds");
      }
      if (m.cluster_id != cluster) {
        throw DataError("document " + doc_id +
                        ": mention cluster_id does not match chain key");
      }
      if (i > 0 && (mentions[i - 1].start > m.start ||
                    (mentions[i - 1].start == m.start &&
                     mentions[i - 1].end > m.end))) {
        throw DataError("document " + doc_id + ": chain mentions not sorted");
      }
    }
  }
}

bool Document::operator==(const Document& other) const {
  if (doc_id != other.doc_id || conll_part != other.conll_part ||
      sentence_starts != other.sentence_starts ||
      speakers != other.speakers || chains != other.chains) {
    return false;
  }
  if (tokens.size() != other.tokens.size()) return false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].text != other.tokens[i].text ||
        tokens[i].sentence_index != other.tokens[i].sentence_index) {
      return false;
    }
  }
  return true;
}

}  // namespace pcr
