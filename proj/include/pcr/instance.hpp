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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pcr/document.hpp"

namespace pcr {

// The 16 third-person forms treated as pronouns. Case-folded.
class PronounInventory {
 public:
  static const PronounInventory& standard();

  bool contains(std::string_view surface) const;
  const std::set<std::string>& forms() const { return forms_; }

 private:
  explicit PronounInventory(std::set<std::string> forms)
      : forms_(std::move(forms)) {}
  std::set<std::string> forms_;
};

// Token range in window coordinates plus the surface string.
struct CandidateSpan {
  std::size_t start = 0;
  std::size_t end = 0;  // inclusive
  std::string text;

  bool operator==(const CandidateSpan&) const = default;
};

// One binary resolution problem: a context window, a pronoun, and two
// candidate antecedents of which exactly one corefers.
struct PCRInstance {
  std::string instance_id;
  std::string source_dataset;
  std::vector<std::string> context_tokens;
  CandidateSpan pronoun;
  CandidateSpan candidate_1;
  CandidateSpan candidate_2;
  int gold_label = 1;  // 1 or 2
  std::optional<std::size_t> window_offset;  // window start in the source document
  std::vector<std::string> speakers;         // per window token; empty when absent
  std::optional<std::vector<std::string>> full_document_tokens;
  std::vector<std::string> full_document_speakers;

  const CandidateSpan& gold() const {
    return gold_label == 1 ? candidate_1 : candidate_2;
  }
  const CandidateSpan& distractor() const {
    return gold_label == 1 ? candidate_2 : candidate_1;
  }
  // Throws DataError on a violated structural invariant.
  void validate() const;
};

enum class SkipReason {
  kNoAntecedent,        // zero nominal same-chain mentions before the pronoun in window
  kMultipleAntecedents, // more than one such mention
  kNoDistractor,        // no eligible other-chain mention in window
};

struct SkipReport {
  std::map<std::string, std::size_t> counts;

  void add(SkipReason reason);
  void add(const std::string& reason, std::size_t n = 1);
  std::size_t total() const;
  // reason<TAB>count rows, sorted by reason, with a trailing total row.
  std::string to_tsv() const;
};

struct ExtractionOptions {
  std::string source_dataset = "conll";
  bool include_full_document = false;
};

struct ExtractionResult {
  std::vector<PCRInstance> instances;
  SkipReport skips;
};

// Emits binary instances from a gold-annotated document. For each chain
// mention whose case-folded surface is in the inventory: the window is its
// sentence plus up to two preceding sentences; an instance is emitted iff
// exactly one nominal same-chain mention precedes the pronoun inside the
// window and at least one other-chain mention (not overlapping pronoun or
// antecedent) lies inside the window. Several eligible distractors are
// resolved by seeded uniform sampling; candidate presentation order is
// seeded-random. The rng is derived from (seed, document id) so outputs do
// not depend on scheduling. Every excluded pronoun mention lands in exactly
// one SkipReport bucket.
ExtractionResult extract_instances(const Document& doc,
                                   const PronounInventory& inventory,
                                   std::uint64_t seed,
                                   const ExtractionOptions& options = {});

// Token range [begin, end) of the pronoun's sentence plus up to two
// preceding sentences.
std::pair<std::size_t, std::size_t> window_of(const Document& doc,
                                              const MentionSpan& pronoun);

// A mention is nominal unless it is a single-token inventory pronoun.
bool is_nominal(const MentionSpan& mention, const Document& doc,
                const PronounInventory& inventory);

// Canonical JSONL with stable key order.
std::string instances_to_jsonl(const std::vector<PCRInstance>& instances);
std::vector<PCRInstance> instances_from_jsonl(std::istream& in);
std::vector<PCRInstance> instances_from_jsonl(const std::string& text);

}  // namespace pcr
