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

#ifndef CLAUSEKIT_LEXICON_H_
#define CLAUSEKIT_LEXICON_H_

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "clausekit/error.h"

namespace clausekit {

// Keyword lists driving the heuristic layer. All entries are lower-case
// lemmas (prepositions may be multiword, "prior to").
struct LexiconConfig {
  std::set<std::string> permission_aux;
  std::set<std::string> obligation_aux;
  std::set<std::string> prohibition_markers;
  std::set<std::string> obligation_predicates;
  std::set<std::string> temporal_prepositions;
  std::set<std::string> ambiguous_prepositions;
  std::set<std::string> temporal_nouns;
  std::set<std::string> temporal_markers;
  std::set<std::string> condition_markers;
  std::set<std::string> temporal_adverbs;
  std::set<std::string> irrelevant_adverbs;
  // Pronoun lemma -> canonical tag such as "<we>".
  std::map<std::string, std::string> anaphora_map;
  // Lexicon-free heuristics: numeric-attribute conditions and the
  // prepositional-object fallback.
  bool structural_heuristics = true;

  // The shipped keyword lists.
  static LexiconConfig Defaults();
  // Everything empty and structural heuristics off: rules only.
  static LexiconConfig RulesOnly();

  bool operator==(const LexiconConfig&) const = default;
};

// permission_aux and obligation_aux must be disjoint; anaphora tags must be
// wrapped in angle brackets. Throws InvariantError.
void ValidateLexicon(const LexiconConfig& cfg);

// Reads a lexicon JSON document. Keys are the LexiconConfig member names;
// lists are string arrays, anaphora_map an object. Omitted keys keep their
// defaults. An empty object `{}` selects RulesOnly(). Throws FormatError
// on malformed input and InvariantError on invalid content.
LexiconConfig ParseLexicon(std::string_view json);

}  // namespace clausekit

#endif  // CLAUSEKIT_LEXICON_H_
