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

#ifndef CLAUSEKIT_CODIAGRAM_H_
#define CLAUSEKIT_CODIAGRAM_H_

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "clausekit/clause_table.h"

namespace clausekit {

struct CoBox {
  std::string id;  // "{doc}/s{sentence}/r{row}", both 1-based
  Modality modality = Modality::kDeclaration;
  std::string agent;
  std::string action_verb;
  std::string action_object;
  std::vector<std::string> time_guards;
  std::vector<std::string> conditions;
  std::vector<std::string> annotations;

  bool operator==(const CoBox&) const = default;
};

struct CoRefinement;

// A leaf box or a refinement node.
using CoNode = std::variant<CoBox, std::unique_ptr<CoRefinement>>;

struct CoRefinement {
  Refinement op = Refinement::kAnd;  // never kNone
  std::vector<CoNode> children;      // at least two
};

struct CoModel {
  std::string doc_id;
  std::vector<CoNode> roots;  // one per sentence
};

// Rows of a sentence fold left to right: the NONE row opens the group and
// each later row joins with its own operator, so mixed chains nest as
// ((a AND b) OR c). Throws InvariantError on a table ValidateTable rejects.
CoModel BuildModel(const ClauseTable& table);

// Deterministic JSON, newline-terminated.
std::string ExportModel(const CoModel& model);

std::size_t LeafCount(const CoNode& node);
std::size_t LeafCount(const CoModel& model);

}  // namespace clausekit

#endif  // CLAUSEKIT_CODIAGRAM_H_
