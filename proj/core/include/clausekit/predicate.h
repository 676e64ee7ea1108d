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

// Intermediate records passed between the rule, heuristic and rendering
// stages of extraction.

#ifndef CLAUSEKIT_PREDICATE_H_
#define CLAUSEKIT_PREDICATE_H_

#include <optional>
#include <string>
#include <vector>

#include "clausekit/clause_table.h"
#include "clausekit/depgraph.h"
#include "clausekit/label_profile.h"

namespace clausekit {

enum class Voice { kActive, kPassive };

// One predicate candidate, i.e. one future table row.
struct PredicateSite {
  TokenId verb_head = 0;
  std::optional<TokenId> subject_head;
  std::optional<TokenId> object_head;
  Voice voice = Voice::kActive;
  std::vector<TokenId> aux_tokens;
  bool negated = false;
  std::vector<TokenId> negation_tokens;
  Refinement refinement_from_coordination = Refinement::kNone;

  // For a conjunct verb: the first conjunct, whose left- and right-peripheral
  // modifiers (and, if missing, subject, auxiliaries and object) it shares.
  std::optional<TokenId> coordination_head;
  // Predicate is an adjective or noun with a copula.
  bool copular = false;
  // No verbal or copular root; the sentence becomes a notes-only row.
  bool notes_only = false;
  // object_head came from an indirect object.
  bool indirect_object = false;
  // Passive subject stayed in place and no agent was found.
  bool passive_rendering = false;
  // By-phrase consumed by passive-to-active conversion.
  std::optional<TokenId> agent_root;
  // PP promoted to prepositional object; its preposition joins the verb.
  std::optional<PrepPhrase> promoted_pp;
  // Surplus subject/object candidates (parser noise); routed to Notes.
  std::vector<TokenId> extra_subjects;
  std::vector<TokenId> extra_objects;

  bool operator==(const PredicateSite&) const = default;
};

enum class ModifierKind {
  kAdverb,
  kPrepositional,
  kAdverbialClause,
  kRelativeClause,
  kVerbalModifier,
};

// What a modifier hangs off.
enum class Attachment { kVerb, kSubject, kObject };

// A detached modifier before routing.
struct ModifierRecord {
  ModifierKind kind = ModifierKind::kAdverb;
  TokenId root = 0;
  Attachment attachment = Attachment::kVerb;
  // Preposition of a PP or marker of an adverbial clause, lower-cased.
  std::string marker;
  // Lemma of the PP's noun head, or of the adverb itself.
  std::string head_lemma;
  // Present for PPs.
  std::optional<PrepPhrase> pp;
  // Borrowed from the coordination head rather than owned by the verb.
  bool inherited = false;

  bool operator==(const ModifierRecord&) const = default;
};

enum class Destination {
  kTime,
  kAdverbials,
  kConditions,
  kNotes,
  kObjectPromotion,
  kDrop,
};

struct RoutedModifier {
  Destination destination = Destination::kAdverbials;
  Anchor anchor = Anchor::kVerb;
  ModifierRecord record;
};

}  // namespace clausekit

#endif  // CLAUSEKIT_PREDICATE_H_
