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

#include "pcr/prompt.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "pcr/errors.hpp"
#include "pcr/util.hpp"

namespace pcr {
namespace {

// Built-in copies of data/templates/*.txt. The gpt3 wording follows the
// published few-shot WSC format (passage with the pronoun marked in
// asterisks, then a pointed question); qa keeps candidates out of the prompt
// body so they appear only as scored continuations; mqa lists choices as
// A/B; doc asks for an inline annotation of the marked document.
constexpr const char* kGpt3Template =
    "Passage: {context_marked}\n"
    "Question: In the passage above, what does the pronoun \"*{pronoun}*\" refer to?\n"
    "Answer: {answer}";

constexpr const char* kQaTemplate =
    "{context}\n"
    "Question: In the passage above, what does \"{pronoun}\" refer to?\n"
    "Answer: {answer}";

constexpr const char* kMqaTemplate =
    "{context}\n"
    "Question: In the passage above, which of the following does \"{pronoun}\" refer to?\n"
    "A. {candidate_1}\n"
    "B. {candidate_2}\n"
    "Answer: {answer}";

constexpr const char* kDocTemplate =
    "Document: {context_marked}\n"
    "Annotation: the marked pronoun \"{pronoun}\" corefers with \"{answer}\"";

struct BuiltinSpec {
  const char* name;
  ScoringMode mode;
  bool requires_gold_mentions;
  const char* text;
};

constexpr BuiltinSpec kBuiltins[] = {
    {"gpt3", ScoringMode::kGenerateMatch, false, kGpt3Template},
    {"qa", ScoringMode::kCandidateLikelihood, true, kQaTemplate},
    {"mqa", ScoringMode::kCandidateLikelihood, true, kMqaTemplate},
    {"doc", ScoringMode::kCandidateLikelihood, true, kDocTemplate},
};

const BuiltinSpec* find_builtin(const std::string& name) {
  for (const auto& b : kBuiltins) {
    if (name == b.name) return &b;
  }
  return nullptr;
}

// Expands placeholders; {{ and }} are literal braces. When `split_at_answer`
// is set, expansion stops at {answer} and the remainder of the template is
// returned through `suffix`.
std::string expand(const std::string& text,
                   const std::map<std::string, std::string>& values,
                   bool split_at_answer, std::string* suffix) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '{') {
      if (i + 1 < text.size() && text[i + 1] == '{') {
        out += '{';
        i += 2;
        continue;
      }
      const std::size_t close = text.find('}', i);
      if (close == std::string::npos) {
        throw ConfigError("template: unterminated placeholder");
      }
      const std::string key = text.substr(i + 1, close - i - 1);
      if (key == "answer" && split_at_answer) {
        if (suffix) *suffix = text.substr(close + 1);
        return out;
      }
      auto it = values.find(key);
      if (it == values.end()) {
        throw ConfigError("template: unknown placeholder {" + key + "}");
      }
      out += it->second;
      i = close + 1;
      continue;
    }
    if (text[i] == '}' && i + 1 < text.size() && text[i + 1] == '}') {
      out += '}';
      i += 2;
      continue;
    }
    out += text[i];
    ++i;
  }
  if (suffix) suffix->clear();
  return out;
}

// Joins window (or full-document) tokens. Speaker mode prefixes each run of
// tokens sharing a speaker label as "SPEAKER_NAME: ...", one turn per line.
std::string context_string(const PCRInstance& inst, const RenderOptions& opt,
                           bool mark_pronoun) {
  const bool full = opt.context_mode == ContextMode::kFullDocument &&
                    inst.full_document_tokens.has_value();
  const std::vector<std::string>& tokens =
      full ? *inst.full_document_tokens : inst.context_tokens;
  const std::vector<std::string>& speakers =
      full ? inst.full_document_speakers : inst.speakers;
  std::size_t pron_begin = inst.pronoun.start;
  std::size_t pron_end = inst.pronoun.end;
  if (full) {
    const std::size_t off = inst.window_offset.value_or(0);
    pron_begin += off;
    pron_end += off;
  }

  const bool use_speakers = opt.speaker_mode == SpeakerMode::kOn &&
                            speakers.size() == tokens.size();
  std::string out;
  std::string current_speaker;
  bool line_open = false;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (use_speakers) {
      const std::string& s = speakers[t];
      const bool real = !s.empty() && s != "-" && s != "_";
      const std::string label = real ? s : std::string();
      if (t == 0 || label != current_speaker) {
        if (line_open) out += '\n';
        current_speaker = label;
        if (!label.empty()) out += label + ": ";
        line_open = true;
      } else if (t > 0) {
        out += ' ';
      }
    } else if (t > 0) {
      out += ' ';
    }
    if (mark_pronoun && t == pron_begin) out += '*';
    out += tokens[t];
    if (mark_pronoun && t == pron_end) out += '*';
  }
  return out;
}

// The value that fills {answer} for a worked example, and the continuation
// body for the evaluated instance.
std::string answer_value(const PromptTemplate& tmpl, const PCRInstance& inst,
                         int label) {
  if (tmpl.name == "mqa") return label == 1 ? "A" : "B";
  return label == 1 ? inst.candidate_1.text : inst.candidate_2.text;
}

std::map<std::string, std::string> placeholder_values(const PCRInstance& inst,
                                                      const RenderOptions& opt) {
  return {
      {"context", context_string(inst, opt, false)},
      {"context_marked", context_string(inst, opt, true)},
      {"pronoun", inst.pronoun.text},
      {"candidate_1", inst.candidate_1.text},
      {"candidate_2", inst.candidate_2.text},
  };
}

}  // namespace

PromptTemplate PromptTemplate::builtin(const std::string& name) {
  const BuiltinSpec* spec = find_builtin(name);
  if (!spec) throw ConfigError("unknown prompt template '" + name + "'");
  return PromptTemplate{spec->name, spec->mode, spec->requires_gold_mentions,
                        spec->text};
}

PromptTemplate PromptTemplate::load(const std::string& name,
                                    const std::filesystem::path& template_dir) {
  if (template_dir.empty()) return builtin(name);
  const BuiltinSpec* spec = find_builtin(name);
  if (!spec) throw ConfigError("unknown prompt template '" + name + "'");
  const std::filesystem::path path = template_dir / (name + ".txt");
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open template file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // Template files end with a newline; the placeholder grammar treats it as
  // content, so strip exactly one.
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return PromptTemplate{spec->name, spec->mode, spec->requires_gold_mentions,
                        std::move(text)};
}

std::string FeatureStatement::render() const {
  return "The " + feature_name + " of \"" + subject_surface + "\" is " + value + ".";
}

FeatureAnnotations FeatureAnnotations::from_tsv(std::istream& in) {
  FeatureAnnotations out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || line.front() == '#') continue;
    const std::vector<std::string> f = split(line, '\t');
    if (f.size() != 4) {
      throw ParseError("annotations line " + std::to_string(line_no) +
                       ": expected 4 tab-separated fields");
    }
    out.set(f[0], std::stoi(f[1]), f[2], f[3]);
  }
  return out;
}

FeatureAnnotations FeatureAnnotations::from_tsv_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open annotations file " + path.string());
  return from_tsv(in);
}

void FeatureAnnotations::set(const std::string& instance_id, int candidate,
                             const std::string& feature,
                             const std::string& value) {
  values_[instance_id + "\x1f" + std::to_string(candidate) + "\x1f" + feature] =
      value;
}

std::optional<std::string> FeatureAnnotations::lookup(
    const std::string& instance_id, int candidate,
    const std::string& feature) const {
  auto it = values_.find(instance_id + "\x1f" + std::to_string(candidate) +
                         "\x1f" + feature);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

FeatureResult render_feature(const PCRInstance& instance, FeatureKind kind,
                             const FeatureAnnotations& annotations) {
  FeatureResult result;
  const auto candidate = [&](int label) -> const CandidateSpan& {
    return label == 1 ? instance.candidate_1 : instance.candidate_2;
  };

  if (kind == FeatureKind::kGoldLabel) {
    result.statements.push_back(
        {"gold label", instance.pronoun.text, instance.gold().text});
    return result;
  }
  if (kind == FeatureKind::kDistance) {
    for (int label : {1, 2}) {
      const CandidateSpan& c = candidate(label);
      std::size_t gap = 0;
      if (c.end < instance.pronoun.start) {
        gap = instance.pronoun.start - c.end - 1;
      } else if (c.start > instance.pronoun.end) {
        gap = c.start - instance.pronoun.end - 1;
      }
      result.statements.push_back({"distance", c.text, std::to_string(gap)});
    }
    return result;
  }

  const std::string feature_name = kind == FeatureKind::kGender
                                       ? "grammatical gender"
                                       : kind == FeatureKind::kNumber
                                             ? "number"
                                             : "enamex type";
  for (int label : {1, 2}) {
    const CandidateSpan& c = candidate(label);
    const auto value = annotations.lookup(instance.instance_id, label, feature_name);
    if (!value) {
      result.diagnostics.push_back("missing " + feature_name + " for candidate " +
                                   std::to_string(label) + " of " +
                                   instance.instance_id);
      continue;
    }
    result.statements.push_back({feature_name, c.text, *value});
  }
  return result;
}

RenderedPrompt render(const PCRInstance& instance, const PromptTemplate& tmpl,
                      const RenderOptions& options) {
  if (tmpl.requires_gold_mentions) {
    if (instance.candidate_1.text.empty() || instance.candidate_2.text.empty()) {
      throw ConfigError("template '" + tmpl.name +
                        "' requires gold mention spans; instance " +
                        instance.instance_id + " lacks them");
    }
  }
  if (options.n_shots < 0) throw ConfigError("n_shots must be >= 0");

  std::string out;
  for (const auto& f : options.features) {
    out += f.render();
    out += '\n';
  }
  if (!options.features.empty()) out += '\n';

  if (options.n_shots > 0) {
    if (options.shot_pool == nullptr) {
      throw ConfigError("n_shots > 0 requires a shot pool");
    }
    std::vector<std::size_t> order(options.shot_pool->size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(mix_seed(options.seed, "shots"));
    seeded_shuffle(order, rng);
    int taken = 0;
    for (std::size_t idx : order) {
      if (taken == options.n_shots) break;
      const PCRInstance& shot = (*options.shot_pool)[idx];
      if (shot.instance_id == instance.instance_id) continue;
      std::map<std::string, std::string> values = placeholder_values(shot, options);
      values["answer"] = answer_value(tmpl, shot, shot.gold_label);
      out += expand(tmpl.text, values, false, nullptr);
      out += "\n\n";
      ++taken;
    }
    if (taken < options.n_shots) {
      throw ConfigError("shot pool too small: needed " +
                        std::to_string(options.n_shots) + ", had " +
                        std::to_string(taken));
    }
  }

  std::string suffix;
  std::map<std::string, std::string> values = placeholder_values(instance, options);
  values["answer"] = "";  // never reached: expansion stops at {answer}
  out += expand(tmpl.text, values, true, &suffix);

  RenderedPrompt rp;
  rp.instance_id = instance.instance_id;
  rp.mode = tmpl.mode;
  rp.prompt_text = std::move(out);
  rp.candidate_1_text = instance.candidate_1.text;
  rp.candidate_2_text = instance.candidate_2.text;
  rp.gold_label = instance.gold_label;
  if (tmpl.mode == ScoringMode::kCandidateLikelihood) {
    rp.continuations = {
        {1, answer_value(tmpl, instance, 1) + suffix},
        {2, answer_value(tmpl, instance, 2) + suffix},
    };
    for (const auto& [label, text] : rp.continuations) {
      if (text.empty()) {
        throw ConfigError("empty continuation for instance " + instance.instance_id);
      }
    }
  } else {
    rp.expected_target = instance.gold().text;
  }
  return rp;
}

}  // namespace pcr
