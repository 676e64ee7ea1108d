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

#include "clausekit/heuristics.h"

#include <algorithm>
#include <vector>

#include "text_util.h"

namespace clausekit {

using internal::Lower;

Modality RefineModality(Modality base, const PredicateSite& site,
                        const DependencyGraph& g, const LexiconConfig& cfg,
                        const LabelProfile& profile) {
  if (site.notes_only) return base;
  Modality result = base;
  auto signal = [&](Modality m) { result = std::max(result, m); };

  for (TokenId aux : site.aux_tokens) {
    std::string lemma = Lower(g.token(aux).lemma);
    if (cfg.permission_aux.contains(lemma)) signal(Modality::kPermission);
    if (cfg.obligation_aux.contains(lemma)) signal(Modality::kObligation);
    if (cfg.prohibition_markers.contains(lemma)) signal(Modality::kProhibition);
  }
  if (site.negated) signal(Modality::kProhibition);

  for (TokenId adv :
       Dependents(g, site.verb_head, Role::kAdverbialModifier, profile)) {
    if (cfg.prohibition_markers.contains(Lower(g.token(adv).lemma))) {
      signal(Modality::kProhibition);
    }
  }
  if (site.subject_head) {
    for (TokenId det :
         Dependents(g, *site.subject_head, Role::kDeterminer, profile)) {
      if (cfg.prohibition_markers.contains(Lower(g.token(det).lemma))) {
        signal(Modality::kProhibition);
      }
    }
  }

  if (cfg.obligation_predicates.contains(Lower(g.token(site.verb_head).lemma))) {
    signal(Modality::kObligation);
  }
  return result;
}

namespace {

bool IsTemporalPp(const ModifierRecord& r, const LexiconConfig& cfg) {
  if (cfg.temporal_prepositions.contains(r.marker)) return true;
  return cfg.ambiguous_prepositions.contains(r.marker) &&
         cfg.temporal_nouns.contains(Lower(r.head_lemma));
}

Anchor AnchorFor(Attachment a) {
  switch (a) {
    case Attachment::kSubject: return Anchor::kSubject;
    case Attachment::kObject: return Anchor::kObject;
    case Attachment::kVerb: return Anchor::kVerb;
  }
  return Anchor::kVerb;
}

}  // namespace

RoutedModifier RoutePp(const ModifierRecord& record, const LexiconConfig& cfg) {
  RoutedModifier out{Destination::kAdverbials, Anchor::kVerb, record};
  if (record.attachment != Attachment::kSubject && IsTemporalPp(record, cfg)) {
    out.destination = Destination::kTime;
    return out;
  }
  if (record.attachment != Attachment::kVerb) {
    out.destination = Destination::kNotes;
    out.anchor = AnchorFor(record.attachment);
  }
  return out;
}

RoutedModifier RouteAdvcl(const ModifierRecord& record,
                          const LexiconConfig& cfg) {
  RoutedModifier out{Destination::kAdverbials, Anchor::kVerb, record};
  if (cfg.temporal_markers.contains(record.marker)) {
    out.destination = Destination::kTime;
  } else if (cfg.condition_markers.contains(record.marker)) {
    out.destination = Destination::kConditions;
  }
  return out;
}

RoutedModifier FilterAdverb(const ModifierRecord& record,
                            const LexiconConfig& cfg) {
  RoutedModifier out{Destination::kAdverbials, Anchor::kVerb, record};
  std::string lemma = Lower(record.head_lemma);
  if (cfg.temporal_adverbs.contains(lemma)) {
    out.destination = Destination::kTime;
  } else if (cfg.irrelevant_adverbs.contains(lemma)) {
    out.destination = Destination::kDrop;
  }
  return out;
}

RoutedModifier RouteModifier(const ModifierRecord& record,
                             const LexiconConfig& cfg) {
  switch (record.kind) {
    case ModifierKind::kAdverb:
      return FilterAdverb(record, cfg);
    case ModifierKind::kPrepositional:
      return RoutePp(record, cfg);
    case ModifierKind::kAdverbialClause:
      return RouteAdvcl(record, cfg);
    case ModifierKind::kRelativeClause:
    case ModifierKind::kVerbalModifier:
      break;
  }
  return RoutedModifier{Destination::kNotes, AnchorFor(record.attachment),
                        record};
}

std::optional<NumericCondition> FindNumericCondition(TokenId np_head,
                                                     Anchor anchor,
                                                     const DependencyGraph& g) {
  for (TokenId c : g.children(np_head)) {
    if (!IsCardinal(g.token(c))) continue;
    std::vector<std::string> words;
    for (const Token& t : YieldSpan(g, c)) words.push_back(t.form);
    return NumericCondition{c, AnnotatedPhrase{anchor, internal::JoinWords(words)}};
  }
  return std::nullopt;
}

std::optional<PrepPhrase> PrepositionalObjectFallback(
    const PredicateSite& site, const DependencyGraph& g,
    const LabelProfile& profile, const LexiconConfig& cfg) {
  if (!cfg.structural_heuristics) return std::nullopt;
  if (site.notes_only || site.object_head) return std::nullopt;
  if (site.voice == Voice::kPassive && site.agent_root) return std::nullopt;
  for (const PrepPhrase& pp :
       PrepositionalModifiers(g, site.verb_head, profile)) {
    if (!pp.object || pp.preposition.empty() || pp.root == site.agent_root) {
      continue;
    }
    ModifierRecord probe;
    probe.kind = ModifierKind::kPrepositional;
    probe.marker = pp.preposition;
    probe.head_lemma = g.token(*pp.object).lemma;
    if (IsTemporalPp(probe, cfg)) continue;
    return pp;
  }
  return std::nullopt;
}

std::string ResolveAnaphora(const Token& token, const LexiconConfig& cfg) {
  if (auto it = cfg.anaphora_map.find(Lower(token.lemma));
      it != cfg.anaphora_map.end()) {
    return it->second;
  }
  if (auto it = cfg.anaphora_map.find(Lower(token.form));
      it != cfg.anaphora_map.end()) {
    return it->second;
  }
  return token.lemma;
}

}  // namespace clausekit
