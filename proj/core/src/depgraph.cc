// Copyright 2026 The Clausekit Authors.
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

#include "clausekit/depgraph.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "text_util.h"

namespace clausekit {

using internal::ParseInt;
using internal::Split;

ConllError::ConllError(std::string source, std::size_t line,
                       std::string sent_id, const std::string& message)
    : FormatError(source + ":" + std::to_string(line) + ": sentence " +
                  (sent_id.empty() ? std::string("?") : sent_id) + ": " +
                  message),
      source_(std::move(source)),
      line_(line),
      sent_id_(std::move(sent_id)) {}

DependencyGraph DependencyGraph::Create(std::string sent_id, std::string text,
                                        std::vector<Token> tokens) {
  const int n = static_cast<int>(tokens.size());
  if (n == 0) throw GraphError(0, "sentence has no tokens");

  DependencyGraph g;
  g.children_.assign(n + 1, {});
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = tokens[i];
    if (t.id != i + 1) {
      throw GraphError(t.id, "token id " + std::to_string(t.id) +
                                 " out of sequence (expected " +
                                 std::to_string(i + 1) + ")");
    }
    if (t.head < 0 || t.head > n) {
      throw GraphError(t.id, "head " + std::to_string(t.head) +
                                 " does not name a token");
    }
    if (t.head == t.id) throw GraphError(t.id, "token is its own head");
    if (t.head == 0) {
      ++roots;
      g.root_ = t.id;
    }
    g.children_[t.head].push_back(t.id);
  }
  if (roots == 0) throw GraphError(0, "no root token (head 0)");
  if (roots > 1) {
    TokenId second = g.children_[0][1];
    throw GraphError(second, "multiple root tokens (" +
                                 std::to_string(roots) + " with head 0)");
  }
  // Every token must reach the root within n steps.
  for (const Token& t : tokens) {
    TokenId cur = t.id;
    for (int steps = 0; cur != 0; ++steps) {
      if (steps > n) {
        throw GraphError(t.id, "cyclic head chain through token " +
                                   std::to_string(t.id));
      }
      cur = tokens[cur - 1].head;
    }
  }

  if (text.empty()) {
    std::vector<std::string> forms;
    forms.reserve(tokens.size());
    for (const Token& t : tokens) forms.push_back(t.form);
    text = internal::JoinWords(forms);
  }
  g.sent_id_ = std::move(sent_id);
  g.text_ = std::move(text);
  g.tokens_ = std::move(tokens);
  return g;
}

std::vector<TokenId> DependencyGraph::Subtree(TokenId id) const {
  std::vector<TokenId> out;
  std::vector<TokenId> stack{id};
  while (!stack.empty()) {
    TokenId cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    for (TokenId c : children_[cur]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DependencyGraph::Dominates(TokenId ancestor, TokenId descendant) const {
  for (TokenId cur = descendant; cur != 0; cur = token(cur).head) {
    if (cur == ancestor) return true;
  }
  return false;
}

namespace {

std::string FieldOrEmpty(std::string_view f) {
  return f == "_" ? std::string() : std::string(f);
}

std::string EmptyAsUnderscore(const std::string& s) {
  return s.empty() ? std::string("_") : s;
}

struct PendingSentence {
  std::string sent_id;
  std::string text;
  std::size_t first_line = 0;
  std::vector<Token> tokens;
  std::map<TokenId, std::size_t> token_lines;
  bool has_content = false;
};

}  // namespace

std::vector<DependencyGraph> ParseConllu(std::string_view input,
                                         std::string_view source,
                                         int first_ordinal) {
  std::vector<DependencyGraph> graphs;
  PendingSentence pending;
  int ordinal = first_ordinal;
  const std::string src(source);

  auto flush = [&](std::size_t line_no) {
    if (pending.tokens.empty()) {
      pending = PendingSentence{};
      return;
    }
    std::string id = pending.sent_id.empty() ? std::to_string(ordinal)
                                             : pending.sent_id;
    ++ordinal;
    try {
      graphs.push_back(DependencyGraph::Create(id, std::move(pending.text),
                                               std::move(pending.tokens)));
    } catch (const GraphError& e) {
      auto it = pending.token_lines.find(e.token());
      std::size_t line = it != pending.token_lines.end() ? it->second
                                                         : pending.first_line;
      if (line == 0) line = line_no;
      throw ConllError(src, line, id, e.what());
    }
    pending = PendingSentence{};
  };

  std::size_t line_no = 0;
  for (std::string_view line : Split(input, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (internal::Trim(line).empty()) {
      flush(line_no);
      continue;
    }
    if (!pending.has_content) {
      pending.first_line = line_no;
      pending.has_content = true;
    }
    if (line.front() == '#') {
      std::string_view body = internal::Trim(line.substr(1));
      auto take = [&](std::string_view key, std::string& dest) {
        if (body.substr(0, key.size()) != key) return;
        std::string_view rest = internal::Trim(body.substr(key.size()));
        if (rest.empty() || rest.front() != '=') return;
        dest = std::string(internal::Trim(rest.substr(1)));
      };
      take("sent_id", pending.sent_id);
      take("text", pending.text);
      continue;
    }

    std::vector<std::string_view> cols = Split(line, '\t');
    const std::string& sid = pending.sent_id;
    if (cols.size() != 10) {
      throw ConllError(src, line_no, sid,
                       "expected 10 tab-separated columns, found " +
                           std::to_string(cols.size()));
    }
    if (cols[0].find('-') != std::string_view::npos ||
        cols[0].find('.') != std::string_view::npos) {
      continue;  // multiword range or empty node
    }
    auto id = ParseInt(cols[0]);
    if (!id || *id < 1) {
      throw ConllError(src, line_no, sid,
                       "non-numeric token id '" + std::string(cols[0]) + "'");
    }
    auto head = ParseInt(cols[6]);
    if (!head || *head < 0) {
      throw ConllError(src, line_no, sid,
                       "non-numeric head '" + std::string(cols[6]) + "'");
    }
    Token t;
    t.id = *id;
    t.form = std::string(cols[1]);
    t.lemma = FieldOrEmpty(cols[2]);
    if (t.lemma.empty()) t.lemma = t.form;
    t.upos = FieldOrEmpty(cols[3]);
    t.xpos = FieldOrEmpty(cols[4]);
    t.feats = FieldOrEmpty(cols[5]);
    t.head = *head;
    t.deprel = FieldOrEmpty(cols[7]);
    t.deps = FieldOrEmpty(cols[8]);
    t.misc = FieldOrEmpty(cols[9]);
    pending.token_lines[t.id] = line_no;
    pending.tokens.push_back(std::move(t));
  }
  flush(line_no);
  return graphs;
}

std::string WriteConllu(std::span<const DependencyGraph> graphs) {
  std::ostringstream out;
  for (const DependencyGraph& g : graphs) {
    out << "# sent_id = " << g.sent_id() << "\n";
    out << "# text = " << g.text() << "\n";
    for (const Token& t : g.tokens()) {
      out << t.id << '\t' << EmptyAsUnderscore(t.form) << '\t'
          << EmptyAsUnderscore(t.lemma) << '\t' << EmptyAsUnderscore(t.upos)
          << '\t' << EmptyAsUnderscore(t.xpos) << '\t'
          << EmptyAsUnderscore(t.feats) << '\t' << t.head << '\t'
          << EmptyAsUnderscore(t.deprel) << '\t' << EmptyAsUnderscore(t.deps)
          << '\t' << EmptyAsUnderscore(t.misc) << '\n';
    }
    out << '\n';
  }
  return out.str();
}

std::vector<Token> YieldSpan(const DependencyGraph& g, TokenId node,
                             const std::set<TokenId>& excluded) {
  std::vector<Token> out;
  std::vector<TokenId> stack{node};
  std::vector<TokenId> ids;
  while (!stack.empty()) {
    TokenId cur = stack.back();
    stack.pop_back();
    if (cur != node && excluded.contains(cur)) continue;
    ids.push_back(cur);
    for (TokenId c : g.children(cur)) stack.push_back(c);
  }
  std::sort(ids.begin(), ids.end());
  out.reserve(ids.size());
  for (TokenId id : ids) out.push_back(g.token(id));
  return out;
}

bool IsPunctuation(const Token& t) {
  if (t.upos == "PUNCT") return true;
  if (!t.upos.empty()) return false;
  static const std::set<std::string> kPtb = {",", ".", ":", "``", "''",
                                             "-LRB-", "-RRB-", "#", "$"};
  return kPtb.contains(t.xpos);
}

bool IsPronoun(const Token& t) {
  return t.upos == "PRON" || t.xpos == "PRP" || t.xpos == "PRP$" ||
         t.xpos == "WP" || t.xpos == "WP$";
}

bool IsPossessivePronoun(const Token& t) {
  if (t.xpos == "PRP$" || t.xpos == "WP$") return true;
  return IsPronoun(t) && t.feats.find("Poss=Yes") != std::string::npos;
}

bool IsProperNoun(const Token& t) {
  return t.upos == "PROPN" || t.xpos == "NNP" || t.xpos == "NNPS";
}

bool IsVerbal(const Token& t) {
  return t.upos == "VERB" || t.upos == "AUX" || t.xpos.starts_with("VB") ||
         t.xpos == "MD";
}

bool IsCardinal(const Token& t) { return t.upos == "NUM" || t.xpos == "CD"; }

}  // namespace clausekit
