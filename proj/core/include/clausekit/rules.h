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

// Structural extraction: predicates and their coordination, core fields,
// auxiliary-driven modality, passive conversion and modifier detachment.
// ExtractSentence runs the whole per-sentence pipeline, including the
// heuristic and normalization stages.

#ifndef CLAUSEKIT_RULES_H_
#define CLAUSEKIT_RULES_H_

#include <set>
#include <span>
#include <string>
#include <vector>

#include "clausekit/clause_table.h"
#include "clausekit/depgraph.h"
#include "clausekit/label_profile.h"
#include "clausekit/lexicon.h"
#include "clausekit/normalize.h"
#include "clausekit/predicate.h"

namespace clausekit {

// One site per row to be emitted. The root predicate and each predicate
// conjunct of it contribute a site; coordinated subjects and objects expand
// each of those by Cartesian product (verb, then subject, then object
// order). A later site's refinement comes from the innermost coordination
// that distinguishes it from the previous one: "or" gives OR, any other
// coordinator or a bare comma gives AND. The first site is always NONE.
// A sentence without a verbal or copular root yields a single notes-only
// site.
std::vector<PredicateSite> FindPredicates(const DependencyGraph& g,
                                          const LabelProfile& profile);

// Auxiliary-only classification: "may" -> P, "must" -> O, negation -> F,
// strongest wins, D without any signal.
Modality ClassifyModalityCore(const PredicateSite& site,
                              const DependencyGraph& g);

// With a by-agent the site is turned active: agent becomes subject, the
// passive subject becomes object. Without one the site is returned with
// passive_rendering set. Precondition: site.voice == Voice::kPassive.
PredicateSite PassiveToActive(const PredicateSite& site,
                              const DependencyGraph& g,
                              const LabelProfile& profile);

struct NpDetachment {
  // Subtree roots removed from the core phrase.
  std::set<TokenId> excluded;
  // Relative clauses, verbal modifiers and PPs of the head, for Notes.
  std::vector<ModifierRecord> modifiers;
};

NpDetachment DetachNpModifiers(TokenId np_head, Attachment attachment,
                               const DependencyGraph& g,
                               const LabelProfile& profile);

// Adverbs, PPs and adverbial clauses of the verb, plus the peripheral ones
// a conjunct shares with its coordination head. The agent and a promoted
// prepositional object are left out.
std::vector<ModifierRecord> DetachVerbModifiers(const PredicateSite& site,
                                                const DependencyGraph& g,
                                                const LabelProfile& profile);

using ExtractOptions = RenderOptions;

std::vector<ClauseRow> ExtractSentence(const DependencyGraph& g,
                                       const LexiconConfig& cfg,
                                       const LabelProfile& profile,
                                       const ExtractOptions& opts = {});

// A row together with the tokens each of its fields was rendered from.
struct RowTrace {
  ClauseRow row;
  PredicateSite site;
  std::vector<TokenId> subject_tokens;
  std::vector<TokenId> verb_tokens;
  std::vector<TokenId> object_tokens;
  std::vector<std::vector<TokenId>> phrase_tokens;
};

std::vector<RowTrace> TraceSentence(const DependencyGraph& g,
                                    const LexiconConfig& cfg,
                                    const LabelProfile& profile,
                                    const ExtractOptions& opts = {});

// Extracts every sentence in order.
ClauseTable ExtractDocument(std::string doc_id,
                            std::span<const DependencyGraph> graphs,
                            const LexiconConfig& cfg,
                            const LabelProfile& profile,
                            const ExtractOptions& opts = {});

}  // namespace clausekit

#endif  // CLAUSEKIT_RULES_H_
