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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcr/instance.hpp"

namespace pcr {

enum class ScoringMode { kGenerateMatch, kCandidateLikelihood };

// Template text is data, loaded from versioned files; built-in copies of the
// four shipped templates are used when no template directory is given.
// Placeholders: {context}, {context_marked}, {pronoun}, {candidate_1},
// {candidate_2}, {answer}. Literal braces escape as {{ and }}.
struct PromptTemplate {
  std::string name;  // gpt3 | qa | mqa | doc
  ScoringMode mode = ScoringMode::kCandidateLikelihood;
  bool requires_gold_mentions = true;
  std::string text;

  static PromptTemplate builtin(const std::string& name);
  static PromptTemplate load(const std::string& name,
                             const std::filesystem::path& template_dir);
};

struct RenderedPrompt {
  std::string instance_id;
  ScoringMode mode = ScoringMode::kCandidateLikelihood;
  std::string prompt_text;
  // Likelihood mode: exactly two continuations, labeled 1 and 2.
  std::vector<std::pair<int, std::string>> continuations;
  // Match mode: the gold surface string.
  std::string expected_target;
  // Candidate surfaces, used by the generate-and-match decision.
  std::string candidate_1_text;
  std::string candidate_2_text;
  int gold_label = 1;
};

enum class FeatureKind { kGender, kNumber, kEnamexType, kDistance, kGoldLabel };

// Renders exactly as `The [FEATURE_NAME] of "[X]" is [Y].`
struct FeatureStatement {
  std::string feature_name;
  std::string subject_surface;
  std::string value;

  std::string render() const;
};

// Per-candidate feature values keyed by (instance_id, candidate index),
// ARRAU-style. TSV rows: instance_id <TAB> candidate(1|2) <TAB> feature
// <TAB> value.
class FeatureAnnotations {
 public:
  static FeatureAnnotations from_tsv(std::istream& in);
  static FeatureAnnotations from_tsv_file(const std::filesystem::path& path);

  void set(const std::string& instance_id, int candidate,
           const std::string& feature, const std::string& value);
  std::optional<std::string> lookup(const std::string& instance_id, int candidate,
                                    const std::string& feature) const;

 private:
  std::map<std::string, std::string> values_;
};

struct FeatureResult {
  std::vector<FeatureStatement> statements;
  std::vector<std::string> diagnostics;  // one per omitted statement
};

// One statement per candidate for gender/number/enamex/distance; a single
// statement naming the correct antecedent for the gold-label oracle.
// Distance is the token count between candidate end and pronoun start and
// needs no annotations.
FeatureResult render_feature(const PCRInstance& instance, FeatureKind kind,
                             const FeatureAnnotations& annotations);

enum class SpeakerMode { kOff, kOn };
enum class ContextMode { kWindow, kFullDocument };

struct RenderOptions {
  int n_shots = 0;
  const std::vector<PCRInstance>* shot_pool = nullptr;
  std::vector<FeatureStatement> features;
  SpeakerMode speaker_mode = SpeakerMode::kOff;
  ContextMode context_mode = ContextMode::kWindow;
  std::uint64_t seed = 0;
};

// Deterministic expansion: feature statements, then n_shots worked examples
// (the first n of a seeded shuffle of the shot pool, never sharing an id
// with the instance), then the instance cut at {answer}. Throws ConfigError
// when a span-requiring template gets an instance without usable candidate
// spans or when the pool cannot supply n_shots examples.
RenderedPrompt render(const PCRInstance& instance, const PromptTemplate& tmpl,
                      const RenderOptions& options = {});

}  // namespace pcr
