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

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcr/prompt.hpp"

namespace pcr {

// Continuation log-probability plus the token count it was summed over.
struct ContinuationScore {
  double logprob = 0.0;
  int n_tokens = 1;
};

// Abstract scoring backend. Implementations must be deterministic for a
// fixed configuration and either tolerate concurrent calls or be run with a
// parallelism budget of 1.
class Scorer {
 public:
  virtual ~Scorer() = default;

  // Total log-probability of the continuation tokens given the prompt.
  virtual ContinuationScore score_continuation(const std::string& prompt,
                                               const std::string& continuation) = 0;

  virtual std::string generate(const std::string& prompt, int max_tokens) = 0;

  virtual bool supports_concurrency() const { return true; }
};

struct ScoredPrediction {
  std::string instance_id;
  std::string system_id;
  int chosen_label = 0;  // 1 or 2; 0 when unmatched or unscored
  std::optional<double> score_1;
  std::optional<double> score_2;
  bool tie = false;
  bool unmatched = false;
  bool unscored = false;
  std::optional<std::string> raw_generation;
  std::vector<std::string> trace;  // sieve decision trace
};

// Case-folded containment of the candidate's head word, leading articles
// stripped. A generation matching exactly one candidate selects it; matching
// neither or both is incorrect by convention (unmatched flag).
struct MatchPolicy {
  static std::string head_word(std::string_view candidate);
  // Returns 1 or 2, or 0 with *unmatched set.
  int match(std::string_view generation, std::string_view candidate_1,
            std::string_view candidate_2, bool* unmatched) const;
};

struct ScoreOptions {
  bool length_normalize = false;  // divide by continuation token count
  int max_generate_tokens = 8;
  MatchPolicy match_policy;
};

// Scores both continuations under the identical prompt; argmax, ties toward
// candidate 1 with the tie flag set. Throws ScorerError on backend failure.
ScoredPrediction score_likelihood(const RenderedPrompt& prompt, Scorer& scorer,
                                  const ScoreOptions& options = {});

// Generates at temperature 0 and matches against both candidates.
ScoredPrediction score_generate_match(const RenderedPrompt& prompt, Scorer& scorer,
                                      const ScoreOptions& options = {});

struct RetryPolicy {
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{500};
  double multiplier = 2.0;
};

struct BatchOptions {
  int parallelism = 1;
  RetryPolicy retry;
  ScoreOptions score;
  std::string system_id = "lm";
};

// Scores every prompt, in input order regardless of completion order.
// Backend failures are retried with exponential backoff; exhausted retries
// mark the instance unscored instead of aborting the batch.
std::vector<ScoredPrediction> run_batch(const std::vector<RenderedPrompt>& prompts,
                                        Scorer& scorer,
                                        const BatchOptions& options = {});

// Convenience wrapper: render every instance, then score the batch.
std::vector<ScoredPrediction> run_batch(const std::vector<PCRInstance>& instances,
                                        const PromptTemplate& tmpl,
                                        const RenderOptions& render_options,
                                        Scorer& scorer,
                                        const BatchOptions& options = {});

// Deterministic in-process backend, selected by the `mock:` URL scheme.
// Scores and generations are stable hashes of the request strings.
class MockScorer : public Scorer {
 public:
  ContinuationScore score_continuation(const std::string& prompt,
                                       const std::string& continuation) override;
  std::string generate(const std::string& prompt, int max_tokens) override;
};

// Builds a backend from a spec: "mock:..." selects the mock scorer;
// "http://..." or "https://..." an OpenAI-compatible completions endpoint.
std::unique_ptr<Scorer> make_scorer(const std::string& backend_spec,
                                    const std::string& model,
                                    const std::string& api_key);

// Prediction JSONL with stable key order.
std::string predictions_to_jsonl(const std::vector<ScoredPrediction>& predictions);
std::vector<ScoredPrediction> predictions_from_jsonl(const std::string& text);

}  // namespace pcr
