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

#include "pcr/instance.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pcr/errors.hpp"
#include "pcr/util.hpp"

namespace pcr {

using ordered_json = nlohmann::ordered_json;

const PronounInventory& PronounInventory::standard() {
  static const PronounInventory kStandard(std::set<std::string>{
      "she", "her", "he", "him", "them", "they", "it", "his", "hers", "its",
      "their", "theirs", "this", "that", "these", "those"});
  return kStandard;
}

bool PronounInventory::contains(std::string_view surface) const {
  return forms_.count(to_lower(surface)) > 0;
}

void PCRInstance::validate() const {
  if (gold_label != 1 && gold_label != 2) {
    throw DataError(instance_id + ": gold_label must be 1 or 2");
  }
  if (!PronounInventory::standard().contains(pronoun.text)) {
    throw DataError(instance_id + ": pronoun '" + pronoun.text +
                    "' outside the inventory");
  }
  const auto overlaps = [](const CandidateSpan& a, const CandidateSpan& b) {
    return a.start <= b.end && b.start <= a.end;
  };
  if (overlaps(candidate_1, pronoun) || overlaps(candidate_2, pronoun)) {
    throw DataError(instance_id + ": candidate overlaps the pronoun span");
  }
  if (!full_document_tokens) {
    for (const CandidateSpan* s : {&pronoun, &candidate_1, &candidate_2}) {
      if (s->start > s->end || s->end >= context_tokens.size()) {
        throw DataError(instance_id + ": span outside the context window");
      }
    }
  }
}

namespace {

const char* reason_name(SkipReason reason) {
  switch (reason) {
    case SkipReason::kNoAntecedent: return "no_antecedent";
    case SkipReason::kMultipleAntecedents: return "multiple_antecedents";
    case SkipReason::kNoDistractor: return "no_distractor";
  }
  return "unknown";
}

}  // namespace

void SkipReport::add(SkipReason reason) { add(reason_name(reason)); }

void SkipReport::add(const std::string& reason, std::size_t n) {
  counts[reason] += n;
}

std::size_t SkipReport::total() const {
  std::size_t t = 0;
  for (const auto& [k, v] : counts) t += v;
  return t;
}

std::string SkipReport::to_tsv() const {
  std::string out = "reason\tcount\n";
  for (const auto& [k, v] : counts) {
    out += k + "\t" + std::to_string(v) + "\n";
  }
  out += "total\t" + std::to_string(total()) + "\n";
  return out;
}

std::pair<std::size_t, std::size_t> window_of(const Document& doc,
                                              const MentionSpan& pronoun) {
  const std::size_t sentence = doc.sentence_of(pronoun.start);
  const std::size_t first = sentence >= 2 ? sentence - 2 : 0;
  return {doc.sentence_range(first).first, doc.sentence_range(sentence).second};
}

bool is_nominal(const MentionSpan& mention, const Document& doc,
                const PronounInventory& inventory) {
  if (mention.start != mention.end) return true;
  return !inventory.contains(doc.tokens[mention.start].text);
}

ExtractionResult extract_instances(const Document& doc,
                                   const PronounInventory& inventory,
                                   std::uint64_t seed,
                                   const ExtractionOptions& options) {
  ExtractionResult result;
  std::mt19937_64 rng(mix_seed(seed, doc.unique_id()));

  struct PronounMention {
    MentionSpan span;
    int cluster;
  };
  std::vector<PronounMention> pronouns;
  for (const auto& [cluster, mentions] : doc.chains) {
    for (const auto& m : mentions) {
      if (inventory.contains(doc.surface(m))) pronouns.push_back({m, cluster});
    }
  }
  std::sort(pronouns.begin(), pronouns.end(),
            [](const PronounMention& a, const PronounMention& b) {
              if (a.span.start != b.span.start) return a.span.start < b.span.start;
              if (a.span.end != b.span.end) return a.span.end < b.span.end;
              return a.cluster < b.cluster;
            });

  for (const auto& pm : pronouns) {
    const auto [wb, we] = window_of(doc, pm.span);
    const auto in_window = [&](const MentionSpan& m) {
      return m.start >= wb && m.end < we;
    };

    // Rule (i): exactly one nominal same-chain mention strictly before the
    // pronoun inside the window.
    std::vector<MentionSpan> antecedents;
    for (const auto& m : doc.chains.at(pm.cluster)) {
      if (m == pm.span) continue;
      if (!in_window(m) || m.end >= pm.span.start) continue;
      if (!is_nominal(m, doc, inventory)) continue;
      antecedents.push_back(m);
    }
    if (antecedents.empty()) {
      result.skips.add(SkipReason::kNoAntecedent);
      continue;
    }
    if (antecedents.size() > 1) {
      result.skips.add(SkipReason::kMultipleAntecedents);
      continue;
    }
    const MentionSpan antecedent = antecedents.front();

    // Rule (ii): an eligible distractor is any other-chain mention inside the
    // window that overlaps neither the pronoun nor the antecedent.
    std::vector<MentionSpan> distractors;
    for (const auto& [cluster, mentions] : doc.chains) {
      if (cluster == pm.cluster) continue;
      for (const auto& m : mentions) {
        if (!in_window(m)) continue;
        if (m.overlaps(pm.span) || m.overlaps(antecedent)) continue;
        distractors.push_back(m);
      }
    }
    if (distractors.empty()) {
      result.skips.add(SkipReason::kNoDistractor);
      continue;
    }
    std::sort(distractors.begin(), distractors.end(),
              [](const MentionSpan& a, const MentionSpan& b) {
                if (a.start != b.start) return a.start < b.start;
                if (a.end != b.end) return a.end < b.end;
                return *a.cluster_id < *b.cluster_id;
              });
    const MentionSpan distractor =
        distractors[uniform_below(rng, distractors.size())];
    const bool antecedent_first = uniform_below(rng, 2) == 0;

    PCRInstance inst;
    inst.source_dataset = options.source_dataset;
    inst.instance_id = doc.unique_id() + "|" + std::to_string(pm.span.start) +
                       "|c" + std::to_string(pm.cluster);
    inst.window_offset = wb;
    inst.context_tokens.reserve(we - wb);
    for (std::size_t t = wb; t < we; ++t) {
      inst.context_tokens.push_back(doc.tokens[t].text);
    }
    if (doc.has_speakers()) {
      inst.speakers.assign(doc.speakers.begin() + static_cast<long>(wb),
                           doc.speakers.begin() + static_cast<long>(we));
    }
    const auto rebase = [&](const MentionSpan& m) {
      return CandidateSpan{m.start - wb, m.end - wb, doc.surface(m)};
    };
    inst.pronoun = rebase(pm.span);
    const CandidateSpan a = rebase(antecedent);
    const CandidateSpan b = rebase(distractor);
    inst.candidate_1 = antecedent_first ? a : b;
    inst.candidate_2 = antecedent_first ? b : a;
    inst.gold_label = antecedent_first ? 1 : 2;
    if (options.include_full_document) {
      std::vector<std::string> full;
      full.reserve(doc.tokens.size());
      for (const auto& t : doc.tokens) full.push_back(t.text);
      inst.full_document_tokens = std::move(full);
      if (doc.has_speakers()) inst.full_document_speakers = doc.speakers;
    }
    inst.validate();
    result.instances.push_back(std::move(inst));
  }
  return result;
}

namespace {

ordered_json span_to_json(const CandidateSpan& s) {
  return ordered_json{{"start", s.start}, {"end", s.end}, {"text", s.text}};
}

CandidateSpan span_from_json(const nlohmann::json& j) {
  return CandidateSpan{j.at("start").get<std::size_t>(),
                       j.at("end").get<std::size_t>(),
                       j.at("text").get<std::string>()};
}

}  // namespace

std::string instances_to_jsonl(const std::vector<PCRInstance>& instances) {
  std::string out;
  for (const auto& inst : instances) {
    ordered_json j;
    j["id"] = inst.instance_id;
    j["source"] = inst.source_dataset;
    j["context_tokens"] = inst.context_tokens;
    j["pronoun"] = span_to_json(inst.pronoun);
    j["candidate_1"] = span_to_json(inst.candidate_1);
    j["candidate_2"] = span_to_json(inst.candidate_2);
    j["gold_label"] = inst.gold_label;
    if (inst.window_offset) j["window_offset"] = *inst.window_offset;
    if (!inst.speakers.empty()) j["speakers"] = inst.speakers;
    if (inst.full_document_tokens) {
      j["full_document_tokens"] = *inst.full_document_tokens;
      if (!inst.full_document_speakers.empty()) {
        j["full_document_speakers"] = inst.full_document_speakers;
      }
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<PCRInstance> instances_from_jsonl(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return instances_from_jsonl(buf.str());
}

std::vector<PCRInstance> instances_from_jsonl(const std::string& text) {
  std::vector<PCRInstance> out;
  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(lines[i]);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("instances line " + std::to_string(i + 1) + ": " + e.what());
    }
    try {
      PCRInstance inst;
      inst.instance_id = j.at("id").get<std::string>();
      inst.source_dataset = j.value("source", std::string{});
      inst.context_tokens = j.at("context_tokens").get<std::vector<std::string>>();
      inst.pronoun = span_from_json(j.at("pronoun"));
      inst.candidate_1 = span_from_json(j.at("candidate_1"));
      inst.candidate_2 = span_from_json(j.at("candidate_2"));
      inst.gold_label = j.at("gold_label").get<int>();
      if (j.contains("window_offset")) {
        inst.window_offset = j.at("window_offset").get<std::size_t>();
      }
      if (j.contains("speakers")) {
        inst.speakers = j.at("speakers").get<std::vector<std::string>>();
      }
      if (j.contains("full_document_tokens")) {
        inst.full_document_tokens =
            j.at("full_document_tokens").get<std::vector<std::string>>();
      }
      if (j.contains("full_document_speakers")) {
        inst.full_document_speakers =
            j.at("full_document_speakers").get<std::vector<std::string>>();
      }
      inst.validate();
      out.push_back(std::move(inst));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("instances line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace pcr
