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

// Surface rendering of field values: lemmatised heads, article removal,
// "X's Y" -> "Y of X", and the bracketed "[is]" / "[to]" insertions in the
// verb field.

#ifndef CLAUSEKIT_NORMALIZE_H_
#define CLAUSEKIT_NORMALIZE_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "clausekit/clause_table.h"
#include "clausekit/depgraph.h"
#include "clausekit/label_profile.h"
#include "clausekit/lexicon.h"
#include "clausekit/predicate.h"

namespace clausekit {

enum class AnaphoraStyle {
  // Canonical tags: "<user>", "login of <user>".
  kTagged,
  // Display form: "User", "login of User", "User's jurisdiction".
  kDisplay,
};

struct RenderOptions {
  AnaphoraStyle anaphora_style = AnaphoraStyle::kTagged;
};

// "<user>" -> "User". Strings that are not tags pass through.
std::string DisplayTag(std::string_view tag);

// Tokens a core noun phrase renders from: the subtree of `head` minus
// `excluded` subtrees, coordination, punctuation, case markers, articles and
// determiners. Includes a converted possessor.
std::vector<TokenId> CoreNpTokens(const DependencyGraph& g, TokenId head,
                                  const std::set<TokenId>& excluded,
                                  const LabelProfile& profile);

// Concise subject/object value. The head is lemmatised (or replaced by its
// anaphora tag), dependents keep their surface form, and a pronoun or
// proper-noun possessor is moved behind the head as "of X".
std::string RenderNp(const DependencyGraph& g, TokenId head,
                     const std::set<TokenId>& excluded,
                     const LexiconConfig& cfg, const LabelProfile& profile,
                     const RenderOptions& opts = {});

// Verb field: the lemma for active predicates, "[is] participle" for
// unconverted passives, "[is] predicate" for copular ones. A folded
// preposition is appended verbatim, except that "to" after a passive or an
// indirect object is written "[to]".
std::string RenderVerb(const PredicateSite& site,
                       const std::optional<std::string>& folded_preposition,
                       const DependencyGraph& g, const LabelProfile& profile);

// Tokens the verb field is built from (verb, particles, folded preposition).
std::vector<TokenId> VerbTokens(const PredicateSite& site,
                                const DependencyGraph& g,
                                const LabelProfile& profile);

// Surface phrase for the subtree under `root` with pronouns replaced by
// their anaphora tags. Edge punctuation is trimmed.
std::string RenderPhrase(const DependencyGraph& g, TokenId root,
                         const LexiconConfig& cfg,
                         const RenderOptions& opts = {});

AnnotatedPhrase RenderModifier(const RoutedModifier& routed,
                               const DependencyGraph& g,
                               const LexiconConfig& cfg,
                               const RenderOptions& opts = {});

}  // namespace clausekit

#endif  // CLAUSEKIT_NORMALIZE_H_
