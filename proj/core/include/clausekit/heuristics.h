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

// Lexicon-driven refinements layered on top of the structural rules.
//
// Every function here degrades to the plain rule behaviour when given
// LexiconConfig::RulesOnly(): empty keyword lists never fire, and the
// structural heuristics are switched off by flag.

#ifndef CLAUSEKIT_HEURISTICS_H_
#define CLAUSEKIT_HEURISTICS_H_

#include <optional>
#include <string>

#include "clausekit/clause_table.h"
#include "clausekit/depgraph.h"
#include "clausekit/label_profile.h"
#include "clausekit/lexicon.h"
#include "clausekit/predicate.h"

namespace clausekit {

// Folds keyword signals into `base`: auxiliaries against the permission /
// obligation lists, prohibition markers among the verb's adverbs and the
// subject's determiners, and the predicate lemma against
// obligation_predicates. The strongest signal wins (F > O > P > D).
Modality RefineModality(Modality base, const PredicateSite& site,
                        const DependencyGraph& g, const LexiconConfig& cfg,
                        const LabelProfile& profile);

// PPs with a temporal preposition, or an ambiguous preposition over a
// temporal head noun, go to Time anchored on the verb even when the parser
// attached them to the object. Others stay with their attachment:
// verb -> Adverbials, object/subject -> Notes.
RoutedModifier RoutePp(const ModifierRecord& record, const LexiconConfig& cfg);

// Adverbial clauses by marker: temporal -> Time, conditional -> Conditions,
// anything else -> Adverbials.
RoutedModifier RouteAdvcl(const ModifierRecord& record,
                          const LexiconConfig& cfg);

// Temporal adverbs -> Time, emphasis and gluing words -> Drop, the rest ->
// Adverbials.
RoutedModifier FilterAdverb(const ModifierRecord& record,
                            const LexiconConfig& cfg);

// Dispatches on record.kind. Relative clauses and verbal modifiers of noun
// phrases always land in Notes.
RoutedModifier RouteModifier(const ModifierRecord& record,
                             const LexiconConfig& cfg);

struct NumericCondition {
  // Root of the numeric modifier's subtree, removed from the core phrase.
  TokenId token = 0;
  AnnotatedPhrase phrase;
};

// A cardinal-number dependent of a subject or object head becomes a
// condition anchored on that field ("one person" -> S: one).
std::optional<NumericCondition> FindNumericCondition(TokenId np_head,
                                                     Anchor anchor,
                                                     const DependencyGraph& g);

// With no direct object (and, for passives, no agent) the leftmost PP the
// verb itself governs is taken as a prepositional object. PPs that RoutePp
// sends to Time are skipped. Returns nothing when structural heuristics are
// disabled.
std::optional<PrepPhrase> PrepositionalObjectFallback(
    const PredicateSite& site, const DependencyGraph& g,
    const LabelProfile& profile, const LexiconConfig& cfg);

// Canonical tag for a pronoun ("us" -> "<we>"); unmapped pronouns come back
// as their lemma. Idempotent on its own output.
std::string ResolveAnaphora(const Token& token, const LexiconConfig& cfg);

}  // namespace clausekit

#endif  // CLAUSEKIT_HEURISTICS_H_
