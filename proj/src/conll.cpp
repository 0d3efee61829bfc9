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

#include "pcr/conll.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "pcr/errors.hpp"
#include "pcr/util.hpp"

namespace pcr {
namespace {

constexpr std::string_view kBegin = "#begin document";
constexpr std::string_view kEnd = "#end document";

std::string line_msg(std::size_t line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

int parse_int(const std::string& s, std::size_t line_no, const char* what) {
  if (s.empty()) throw ParseError(line_msg(line_no, std::string("empty ") + what));
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw ParseError(line_msg(line_no, std::string("bad ") + what + " '" + s + "'"));
    }
  }
  return std::stoi(s);
}

// `#begin document (<name>); part <NNN>` or `#begin document (<name>)`.
void parse_begin_line(const std::string& line, std::size_t line_no,
                      std::string* name, std::optional<int>* part) {
  std::string rest = trim(line.substr(kBegin.size()));
  *part = std::nullopt;
  if (rest.empty()) {
    throw ParseError(line_msg(line_no, "missing document name in #begin line"));
  }
  if (rest.front() == '(') {
    const std::size_t close = rest.rfind(')');
    if (close == std::string::npos) {
      throw ParseError(line_msg(line_no, "unterminated ( in #begin line"));
    }
    *name = rest.substr(1, close - 1);
    std::string tail = trim(rest.substr(close + 1));
    if (!tail.empty()) {
      if (tail.front() == ';') tail = trim(tail.substr(1));
      if (starts_with(tail, "part")) {
        *part = parse_int(trim(tail.substr(4)), line_no, "part number");
      } else if (!tail.empty()) {
        throw ParseError(line_msg(line_no, "unrecognized trailer in #begin line"));
      }
    }
  } else {
    *name = rest;
  }
}

struct OpenSpan {
  std::size_t start;
};

void apply_coref_field(const std::string& field, std::size_t token_index,
                       std::size_t line_no,
                       std::map<int, std::vector<OpenSpan>>* open,
                       std::map<int, std::vector<MentionSpan>>* chains) {
  if (field == "-" || field == "_" || field.empty()) return;
  for (const std::string& unit : split(field, '|')) {
    if (unit.empty()) {
      throw ParseError(line_msg(line_no, "empty unit in coreference field"));
    }
    const bool opens = unit.front() == '(';
    const bool closes = unit.back() == ')';
    std::string digits = unit.substr(opens ? 1 : 0,
                                     unit.size() - (opens ? 1 : 0) - (closes ? 1 : 0));
    const int cluster = parse_int(digits, line_no, "cluster id");
    if (opens) (*open)[cluster].push_back({token_index});
    if (closes) {
      auto it = open->find(cluster);
      if (it == open->end() || it->second.empty()) {
        throw ParseError(line_msg(
            line_no, "coreference close without open for cluster " +
                         std::to_string(cluster)));
      }
      MentionSpan span{it->second.back().start, token_index, cluster};
      it->second.pop_back();
      (*chains)[cluster].push_back(span);
    }
    if (!opens && !closes) {
      throw ParseError(line_msg(line_no, "bad coreference unit '" + unit + "'"));
    }
  }
}

}  // namespace

std::vector<Document> parse_conll(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_conll(buf.str());
}

std::vector<Document> parse_conll(const std::string& text) {
  std::vector<Document> docs;
  const std::vector<std::string> lines = split_lines(text);

  bool in_doc = false;
  Document doc;
  std::map<int, std::vector<OpenSpan>> open;
  bool at_sentence_start = true;

  auto finish_document = [&](std::size_t line_no) {
    for (const auto& [cluster, spans] : open) {
      if (!spans.empty()) {
        throw ParseError(line_msg(
            line_no, "unbalanced coreference parentheses for cluster " +
                         std::to_string(cluster)));
      }
    }
    for (auto& [cluster, mentions] : doc.chains) {
      std::sort(mentions.begin(), mentions.end(),
                [](const MentionSpan& a, const MentionSpan& b) {
                  return a.start != b.start ? a.start < b.start : a.end < b.end;
                });
    }
    if (doc.doc_id.find('/') != std::string::npos) {
      doc.genre = doc.doc_id.substr(0, doc.doc_id.find('/'));
    }
    doc.validate();
    docs.push_back(std::move(doc));
  };

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    const std::string& raw = lines[li];
    const std::string line = trim(raw);

    if (starts_with(line, kBegin)) {
      if (in_doc) {
        throw ParseError(line_msg(line_no, "#begin inside an open document"));
      }
      doc = Document{};
      parse_begin_line(line, line_no, &doc.doc_id, &doc.conll_part);
      open.clear();
      in_doc = true;
      at_sentence_start = true;
      continue;
    }
    if (starts_with(line, kEnd)) {
      if (!in_doc) {
        throw ParseError(line_msg(line_no, "#end without #begin"));
      }
      finish_document(line_no);
      in_doc = false;
      continue;
    }
    if (line.empty()) {
      if (in_doc) at_sentence_start = true;
      continue;
    }
    if (!in_doc) {
      throw ParseError(line_msg(line_no, "token line outside a document"));
    }
    if (line.front() == '#') {
      throw ParseError(line_msg(line_no, "unrecognized comment line"));
    }

    const std::vector<std::string> cols = split_ws(line);
    std::string word;
    std::string speaker;
    std::string coref;
    if (cols.size() == 4) {
      word = cols[1];
      speaker = cols[2];
      coref = cols[3];
    } else if (cols.size() >= 12) {
      word = cols[3];
      speaker = cols[9];
      coref = cols.back();
    } else {
      throw ParseError(line_msg(
          line_no, "expected 4 or >=12 columns, got " + std::to_string(cols.size())));
    }

    const std::size_t token_index = doc.tokens.size();
    if (at_sentence_start) {
      doc.sentence_starts.push_back(token_index);
      at_sentence_start = false;
    }
    doc.tokens.push_back(
        {word, doc.sentence_starts.size() - 1, token_index});
    doc.speakers.push_back(speaker);
    apply_coref_field(coref, token_index, line_no, &open, &doc.chains);
  }
  if (in_doc) {
    throw ParseError("unexpected end of input: missing #end document");
  }
  return docs;
}

std::vector<Document> parse_conll_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_conll(in);
}

namespace {

std::string coref_field_for_token(const Document& doc, std::size_t t) {
  // Gather span events at this token. Multi-token opens go longest-first so
  // the per-cluster stack pops in the right order; closes go innermost-first.
  struct Event {
    enum Kind { kOpen, kSingle, kClose } kind;
    const MentionSpan* span;
  };
  std::vector<Event> events;
  for (const auto& [cluster, mentions] : doc.chains) {
    for (const auto& m : mentions) {
      if (m.start == t && m.end == t) events.push_back({Event::kSingle, &m});
      else if (m.start == t) events.push_back({Event::kOpen, &m});
      else if (m.end == t) events.push_back({Event::kClose, &m});
    }
  }
  std::vector<std::string> units;
  std::vector<const MentionSpan*> opens, closes, singles;
  for (const auto& e : events) {
    if (e.kind == Event::kOpen) opens.push_back(e.span);
    else if (e.kind == Event::kClose) closes.push_back(e.span);
    else singles.push_back(e.span);
  }
  std::sort(opens.begin(), opens.end(), [](const MentionSpan* a, const MentionSpan* b) {
    return a->end != b->end ? a->end > b->end : *a->cluster_id < *b->cluster_id;
  });
  std::sort(closes.begin(), closes.end(), [](const MentionSpan* a, const MentionSpan* b) {
    return a->start != b->start ? a->start > b->start : *a->cluster_id < *b->cluster_id;
  });
  for (const auto* m : opens) units.push_back("(" + std::to_string(*m->cluster_id));
  for (const auto* m : singles) units.push_back("(" + std::to_string(*m->cluster_id) + ")");
  for (const auto* m : closes) units.push_back(std::to_string(*m->cluster_id) + ")");
  if (units.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i) out += '|';
    out += units[i];
  }
  return out;
}

}  // namespace

std::string write_conll(const Document& doc) {
  std::string out = "#begin document (" + doc.doc_id + ")";
  if (doc.conll_part) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%03d", *doc.conll_part);
    out += "; part ";
    out += buf;
  }
  out += '\n';
  for (std::size_t s = 0; s < doc.sentence_count(); ++s) {
    const auto [begin, end] = doc.sentence_range(s);
    for (std::size_t t = begin; t < end; ++t) {
      const std::string speaker =
          t < doc.speakers.size() && !doc.speakers[t].empty() ? doc.speakers[t]
                                                              : "-";
      out += std::to_string(t - begin);
      out += '\t';
      out += doc.tokens[t].text;
      out += '\t';
      out += speaker;
      out += '\t';
      out += coref_field_for_token(doc, t);
      out += '\n';
    }
    out += '\n';
  }
  out += "#end document\n";
  return out;
}

std::string write_conll(const std::vector<Document>& docs) {
  std::string out;
  for (const auto& d : docs) out += write_conll(d);
  return out;
}

}  // namespace pcr
