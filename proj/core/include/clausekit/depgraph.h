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

// Dependency-parsed sentences: CoNLL-U ingestion and tree traversal.

#ifndef CLAUSEKIT_DEPGRAPH_H_
#define CLAUSEKIT_DEPGRAPH_H_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clausekit/error.h"

namespace clausekit {

// 1-based sentence-local token index. 0 denotes the artificial root.
using TokenId = int;

struct Token {
  TokenId id = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos;
  std::string feats;
  TokenId head = 0;
  std::string deprel;
  std::string deps;
  std::string misc;

  bool operator==(const Token&) const = default;
};

// Raised while building a graph; names the offending token.
class GraphError : public InvariantError {
 public:
  GraphError(TokenId token, const std::string& message)
      : InvariantError(message), token_(token) {}
  TokenId token() const { return token_; }

 private:
  TokenId token_;
};

// A CoNLL-U parse failure with its source position.
class ConllError : public FormatError {
 public:
  ConllError(std::string source, std::size_t line, std::string sent_id,
             const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  const std::string& sent_id() const { return sent_id_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string sent_id_;
};

// One parsed sentence as a rooted labeled tree. Immutable once created.
class DependencyGraph {
 public:
  // Validates ids (1..n in order), heads (in range, acyclic) and the single
  // root. Throws GraphError.
  static DependencyGraph Create(std::string sent_id, std::string text,
                                std::vector<Token> tokens);

  const std::string& sent_id() const { return sent_id_; }
  const std::string& text() const { return text_; }
  std::span<const Token> tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }

  bool contains(TokenId id) const {
    return id >= 1 && static_cast<std::size_t>(id) <= tokens_.size();
  }
  // Precondition: contains(id).
  const Token& token(TokenId id) const { return tokens_[id - 1]; }
  TokenId root() const { return root_; }

  // Direct dependents in surface order.
  std::span<const TokenId> children(TokenId id) const {
    return children_[id];
  }

  // All tokens dominated by `id`, including itself, in surface order.
  std::vector<TokenId> Subtree(TokenId id) const;

  bool Dominates(TokenId ancestor, TokenId descendant) const;

 private:
  DependencyGraph() = default;

  std::string sent_id_;
  std::string text_;
  std::vector<Token> tokens_;
  // Indexed by token id; slot 0 holds the root's children.
  std::vector<std::vector<TokenId>> children_;
  TokenId root_ = 0;
};

// Parses 10-column CoNLL-U. Multiword range lines and empty nodes are
// skipped. Sentences without a `# sent_id` comment are numbered by their
// position in the stream starting at `first_ordinal`. `source` names the
// input in diagnostics.
std::vector<DependencyGraph> ParseConllu(std::string_view input,
                                         std::string_view source = "<input>",
                                         int first_ordinal = 1);

// Re-emits CoNLL-U with `# sent_id` and `# text` comments.
std::string WriteConllu(std::span<const DependencyGraph> graphs);

// Tokens of the subtree under `node` minus the subtrees rooted at any id in
// `excluded`, in surface order.
std::vector<Token> YieldSpan(const DependencyGraph& g, TokenId node,
                             const std::set<TokenId>& excluded = {});

// POS predicates shared by the extraction modules. They accept both UD and
// Penn Treebank tags.
bool IsPunctuation(const Token& t);
bool IsPronoun(const Token& t);
bool IsPossessivePronoun(const Token& t);
bool IsProperNoun(const Token& t);
bool IsVerbal(const Token& t);
bool IsCardinal(const Token& t);

}  // namespace clausekit

#endif  // CLAUSEKIT_DEPGRAPH_H_
