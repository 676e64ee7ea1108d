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

#include "clausekit/rules.h"

#include <algorithm>
#include <optional>
#include <utility>

#include "clausekit/heuristics.h"
#include "text_util.h"

namespace clausekit {

using internal::Lower;

namespace {

bool HasAny(const DependencyGraph& g, TokenId node, Role role,
            const LabelProfile& profile) {
  return FirstDependent(g, node, role, profile).has_value();
}

std::vector<TokenId> Concat(std::vector<TokenId> a,
                            const std::vector<TokenId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

bool IsPredicateLike(const DependencyGraph& g, TokenId id,
                     const LabelProfile& profile) {
  return IsVerbal(g.token(id)) || HasAny(g, id, Role::kCopula, profile) ||
         HasAny(g, id, Role::kSubject, profile) ||
         HasAny(g, id, Role::kPassiveSubject, profile);
}

Refinement FromCoordinator(const Token& cc) {
  std::string lemma = Lower(cc.lemma);
  if (lemma == "or" || lemma == "and/or") return Refinement::kOr;
  return Refinement::kAnd;
}

// Coordinator joining `conjunct` to the coordination headed by `first`.
// UD hangs "cc" on the following conjunct, classic Stanford on the first.
Refinement CoordinatorFor(const DependencyGraph& g, TokenId first,
                          TokenId conjunct, const LabelProfile& profile) {
  for (TokenId cc : Dependents(g, conjunct, Role::kCoordination, profile)) {
    if (cc < conjunct) return FromCoordinator(g.token(cc));
  }
  std::vector<TokenId> conjuncts =
      Dependents(g, first, Role::kConjunct, profile);
  TokenId prev = first;
  for (TokenId c : conjuncts) {
    if (c == conjunct) break;
    prev = c;
  }
  std::vector<TokenId> ccs = Dependents(g, first, Role::kCoordination, profile);
  for (TokenId cc : ccs) {
    if (cc > prev && cc < conjunct) return FromCoordinator(g.token(cc));
  }
  // "A, B or C": B takes the coordination's overall coordinator.
  for (TokenId c : conjuncts) {
    auto more = Dependents(g, c, Role::kCoordination, profile);
    ccs.insert(ccs.end(), more.begin(), more.end());
  }
  if (!ccs.empty()) {
    return FromCoordinator(g.token(*std::max_element(ccs.begin(), ccs.end())));
  }
  return Refinement::kAnd;
}

// A head followed by its conjuncts, each with its coordinator.
struct Alternative {
  TokenId head;
  Refinement refinement;
};

std::vector<Alternative> WithConjuncts(const DependencyGraph& g, TokenId head,
                                       const LabelProfile& profile) {
  std::vector<Alternative> out{{head, Refinement::kNone}};
  for (TokenId c : Dependents(g, head, Role::kConjunct, profile)) {
    out.push_back({c, CoordinatorFor(g, head, c, profile)});
  }
  return out;
}

std::optional<TokenId> LastConjunct(const DependencyGraph& g, TokenId head,
                                    const LabelProfile& profile) {
  auto conjuncts = Dependents(g, head, Role::kConjunct, profile);
  if (conjuncts.empty()) return std::nullopt;
  return conjuncts.back();
}

// Dependents of the site's verb, plus those of its coordination head lying
// outside the coordinated span. The flag marks borrowed ones.
std::vector<std::pair<TokenId, bool>> ModifierCandidates(
    const PredicateSite& site, const DependencyGraph& g,
    const LabelProfile& profile) {
  std::vector<std::pair<TokenId, bool>> out;
  for (TokenId c : g.children(site.verb_head)) out.emplace_back(c, false);
  if (site.coordination_head) {
    TokenId head = *site.coordination_head;
    TokenId last = LastConjunct(g, head, profile).value_or(head);
    for (TokenId c : g.children(head)) {
      if (c < head || c > last) out.emplace_back(c, true);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ClauseMarker(const DependencyGraph& g, TokenId clause,
                         const LabelProfile& profile) {
  if (auto mark = FirstDependent(g, clause, Role::kClauseMarker, profile)) {
    std::string out = Lower(g.token(*mark).form);
    for (TokenId f : Dependents(g, *mark, Role::kFixed, profile)) {
      out += " " + Lower(g.token(f).form);
    }
    return out;
  }
  // Stanford and older UD attach "when"/"while" as advmod of the clause.
  for (TokenId c : g.children(clause)) {
    if (c > clause) break;
    const Token& t = g.token(c);
    if (profile.Matches(Role::kAdverbialModifier, t) &&
        (t.xpos == "WRB" || t.upos == "SCONJ")) {
      return Lower(t.form);
    }
  }
  return "";
}

}  // namespace

std::vector<PredicateSite> FindPredicates(const DependencyGraph& g,
                                          const LabelProfile& profile) {
  const TokenId root = g.root();
  if (!IsPredicateLike(g, root, profile)) {
    PredicateSite site;
    site.verb_head = root;
    site.notes_only = true;
    return {site};
  }

  std::vector<TokenId> verbs{root};
  for (TokenId c : Dependents(g, root, Role::kConjunct, profile)) {
    if (IsPredicateLike(g, c, profile)) verbs.push_back(c);
  }

  // Head-verb facts that conjuncts may inherit.
  std::vector<TokenId> head_subjects =
      Concat(Dependents(g, root, Role::kSubject, profile),
             Dependents(g, root, Role::kPassiveSubject, profile));
  std::vector<TokenId> head_objects =
      Dependents(g, root, Role::kDirectObject, profile);
  bool head_passive = HasAny(g, root, Role::kPassiveSubject, profile) ||
                      HasAny(g, root, Role::kPassiveAuxiliary, profile);

  std::vector<PredicateSite> sites;
  for (std::size_t vi = 0; vi < verbs.size(); ++vi) {
    const TokenId v = verbs[vi];
    PredicateSite base;
    base.verb_head = v;
    base.copular = HasAny(g, v, Role::kCopula, profile);
    if (vi > 0) {
      base.coordination_head = root;
      base.refinement_from_coordination = CoordinatorFor(g, root, v, profile);
    }

    std::vector<TokenId> subjects =
        Concat(Dependents(g, v, Role::kSubject, profile),
               Dependents(g, v, Role::kPassiveSubject, profile));
    std::vector<TokenId> aux = Dependents(g, v, Role::kAuxiliary, profile);
    std::vector<TokenId> neg = Dependents(g, v, Role::kNegation, profile);
    const bool own_subject = !subjects.empty();
    const bool own_aux = !aux.empty();

    if (HasAny(g, v, Role::kPassiveSubject, profile) ||
        HasAny(g, v, Role::kPassiveAuxiliary, profile)) {
      base.voice = Voice::kPassive;
    } else if (vi > 0 && !own_subject && !own_aux && head_passive) {
      base.voice = Voice::kPassive;
    }
    if (vi > 0 && !own_subject) {
      subjects = head_subjects;
      if (!own_aux) {
        aux = Dependents(g, root, Role::kAuxiliary, profile);
        neg = Concat(neg, Dependents(g, root, Role::kNegation, profile));
      }
    }
    base.aux_tokens = aux;
    base.negation_tokens = neg;
    base.negated = !neg.empty();

    std::vector<TokenId> objects =
        Dependents(g, v, Role::kDirectObject, profile);
    if (objects.empty()) {
      objects = Dependents(g, v, Role::kIndirectObject, profile);
      base.indirect_object = !objects.empty();
    }
    if (objects.empty() && vi > 0 && !head_objects.empty() &&
        head_objects.front() > v) {
      objects = head_objects;  // "copy and distribute the software"
    }

    if (subjects.size() > 1) {
      base.extra_subjects.assign(subjects.begin() + 1, subjects.end());
    }
    if (objects.size() > 1) {
      base.extra_objects.assign(objects.begin() + 1, objects.end());
    }

    std::vector<Alternative> subject_alts =
        subjects.empty() ? std::vector<Alternative>{}
                         : WithConjuncts(g, subjects.front(), profile);
    std::vector<Alternative> object_alts =
        objects.empty() ? std::vector<Alternative>{}
                        : WithConjuncts(g, objects.front(), profile);
    const std::size_t ns = std::max<std::size_t>(1, subject_alts.size());
    const std::size_t no = std::max<std::size_t>(1, object_alts.size());
    for (std::size_t si = 0; si < ns; ++si) {
      for (std::size_t oi = 0; oi < no; ++oi) {
        PredicateSite site = base;
        if (!subject_alts.empty()) site.subject_head = subject_alts[si].head;
        if (!object_alts.empty()) site.object_head = object_alts[oi].head;
        if (oi > 0) {
          site.refinement_from_coordination = object_alts[oi].refinement;
        } else if (si > 0) {
          site.refinement_from_coordination = subject_alts[si].refinement;
        }
        sites.push_back(std::move(site));
      }
    }
  }
  sites.front().refinement_from_coordination = Refinement::kNone;
  return sites;
}

Modality ClassifyModalityCore(const PredicateSite& site,
                              const DependencyGraph& g) {
  Modality m = Modality::kDeclaration;
  if (site.notes_only) return m;
  for (TokenId aux : site.aux_tokens) {
    std::string lemma = Lower(g.token(aux).lemma);
    if (lemma == "may") m = std::max(m, Modality::kPermission);
    if (lemma == "must") m = std::max(m, Modality::kObligation);
  }
  if (site.negated) m = Modality::kProhibition;
  return m;
}

PredicateSite PassiveToActive(const PredicateSite& site,
                              const DependencyGraph& g,
                              const LabelProfile& profile) {
  PredicateSite out = site;
  for (const auto& [dep, inherited] : ModifierCandidates(site, g, profile)) {
    const Token& t = g.token(dep);
    std::optional<PrepPhrase> pp;
    if (profile.Matches(Role::kAgent, t)) {
      pp = MakePrepPhrase(g, dep, Role::kAgent, profile);
    } else if (profile.Matches(Role::kPrepositionalModifier, t)) {
      PrepPhrase cand =
          MakePrepPhrase(g, dep, Role::kPrepositionalModifier, profile);
      if (cand.preposition == "by") pp = cand;
    }
    if (!pp || !pp->object) continue;
    out.voice = Voice::kActive;
    out.object_head = site.subject_head;
    out.subject_head = pp->object;
    out.agent_root = pp->root;
    out.indirect_object = false;
    std::swap(out.extra_subjects, out.extra_objects);
    return out;
  }
  out.passive_rendering = true;
  return out;
}

NpDetachment DetachNpModifiers(TokenId np_head, Attachment attachment,
                               const DependencyGraph& g,
                               const LabelProfile& profile) {
  NpDetachment out;
  for (TokenId c : g.children(np_head)) {
    const Token& t = g.token(c);
    ModifierRecord rec;
    rec.root = c;
    rec.attachment = attachment;
    if (profile.Matches(Role::kRelativeClause, t)) {
      rec.kind = ModifierKind::kRelativeClause;
    } else if (profile.Matches(Role::kVerbalModifier, t)) {
      rec.kind = ModifierKind::kVerbalModifier;
    } else if (profile.Matches(Role::kPrepositionalModifier, t)) {
      rec.kind = ModifierKind::kPrepositional;
      rec.pp = MakePrepPhrase(g, c, Role::kPrepositionalModifier, profile);
      rec.marker = rec.pp->preposition;
      if (rec.pp->object) rec.head_lemma = Lower(g.token(*rec.pp->object).lemma);
    } else {
      continue;
    }
    out.excluded.insert(c);
    out.modifiers.push_back(std::move(rec));
  }
  return out;
}

std::vector<ModifierRecord> DetachVerbModifiers(const PredicateSite& site,
                                                const DependencyGraph& g,
                                                const LabelProfile& profile) {
  std::vector<ModifierRecord> out;
  if (site.notes_only) return out;
  for (const auto& [dep, inherited] : ModifierCandidates(site, g, profile)) {
    if (dep == site.agent_root) continue;
    if (site.promoted_pp && dep == site.promoted_pp->root) continue;
    const Token& t = g.token(dep);
    ModifierRecord rec;
    rec.root = dep;
    rec.attachment = Attachment::kVerb;
    rec.inherited = inherited;
    if (profile.Matches(Role::kAdverbialModifier, t)) {
      rec.kind = ModifierKind::kAdverb;
      rec.head_lemma = Lower(t.lemma);
    } else if (profile.Matches(Role::kPrepositionalModifier, t) ||
               profile.Matches(Role::kAgent, t)) {
      Role role = profile.Matches(Role::kAgent, t)
                      ? Role::kAgent
                      : Role::kPrepositionalModifier;
      rec.kind = ModifierKind::kPrepositional;
      rec.pp = MakePrepPhrase(g, dep, role, profile);
      rec.marker = rec.pp->preposition;
      if (rec.pp->object) rec.head_lemma = Lower(g.token(*rec.pp->object).lemma);
    } else if (profile.Matches(Role::kAdverbialClause, t)) {
      rec.kind = ModifierKind::kAdverbialClause;
      rec.marker = ClauseMarker(g, dep, profile);
    } else {
      continue;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

struct Entry {
  TokenId key;
  Destination destination;
  AnnotatedPhrase phrase;
  std::vector<TokenId> tokens;
};

void AddRouted(const RoutedModifier& routed, const DependencyGraph& g,
               const LexiconConfig& cfg, const ExtractOptions& opts,
               std::vector<Entry>& entries) {
  if (routed.destination == Destination::kDrop) return;
  entries.push_back({routed.record.root, routed.destination,
                     RenderModifier(routed, g, cfg, opts),
                     g.Subtree(routed.record.root)});
}

// Renders one core noun phrase, pushing its detached modifiers and numeric
// condition into `entries`.
std::string RenderCore(TokenId head, Attachment attachment, Anchor anchor,
                       const DependencyGraph& g, const LexiconConfig& cfg,
                       const LabelProfile& profile,
                       const ExtractOptions& opts, std::vector<Entry>& entries,
                       std::vector<TokenId>& tokens) {
  NpDetachment det = DetachNpModifiers(head, attachment, g, profile);
  for (const ModifierRecord& rec : det.modifiers) {
    AddRouted(RouteModifier(rec, cfg), g, cfg, opts, entries);
  }
  std::set<TokenId> excluded = det.excluded;
  if (cfg.structural_heuristics) {
    if (auto nc = FindNumericCondition(head, anchor, g)) {
      entries.push_back({nc->token, Destination::kConditions, nc->phrase,
                         g.Subtree(nc->token)});
      excluded.insert(nc->token);
    }
  }
  tokens = CoreNpTokens(g, head, excluded, profile);
  return RenderNp(g, head, excluded, cfg, profile, opts);
}

RowTrace NotesOnlyRow(const DependencyGraph& g) {
  RowTrace trace;
  trace.row.sent_id = g.sent_id();
  trace.row.modality = Modality::kDeclaration;
  trace.row.notes.push_back({Anchor::kVerb, g.text()});
  trace.site.verb_head = g.root();
  trace.site.notes_only = true;
  std::vector<TokenId> all;
  for (const Token& t : g.tokens()) all.push_back(t.id);
  trace.phrase_tokens.push_back(std::move(all));
  return trace;
}

}  // namespace

std::vector<RowTrace> TraceSentence(const DependencyGraph& g,
                                    const LexiconConfig& cfg,
                                    const LabelProfile& profile,
                                    const ExtractOptions& opts) {
  std::vector<PredicateSite> sites = FindPredicates(g, profile);
  if (sites.front().notes_only) return {NotesOnlyRow(g)};

  std::vector<RowTrace> traces;
  for (PredicateSite site : sites) {
    if (site.voice == Voice::kPassive) site = PassiveToActive(site, g, profile);
    if (!site.object_head) {
      if (auto pp = PrepositionalObjectFallback(site, g, profile, cfg)) {
        site.object_head = pp->object;
        site.promoted_pp = std::move(pp);
      }
    }

    RowTrace trace;
    ClauseRow& row = trace.row;
    row.sent_id = g.sent_id();
    row.refinement = site.refinement_from_coordination;
    row.modality = RefineModality(ClassifyModalityCore(site, g), site, g, cfg,
                                  profile);

    std::vector<Entry> entries;
    for (const ModifierRecord& rec : DetachVerbModifiers(site, g, profile)) {
      AddRouted(RouteModifier(rec, cfg), g, cfg, opts, entries);
    }
    if (site.object_head && !site.indirect_object) {
      for (TokenId iobj :
           Dependents(g, site.verb_head, Role::kIndirectObject, profile)) {
        entries.push_back({iobj, Destination::kAdverbials,
                           {Anchor::kVerb, "to " + RenderPhrase(g, iobj, cfg, opts)},
                           g.Subtree(iobj)});
      }
    }
    if (site.subject_head) {
      row.subject = RenderCore(*site.subject_head, Attachment::kSubject,
                               Anchor::kSubject, g, cfg, profile, opts, entries,
                               trace.subject_tokens);
    }
    if (site.object_head) {
      row.object = RenderCore(*site.object_head, Attachment::kObject,
                              Anchor::kObject, g, cfg, profile, opts, entries,
                              trace.object_tokens);
    }
    for (TokenId extra : site.extra_subjects) {
      entries.push_back({extra, Destination::kNotes,
                         {Anchor::kSubject, RenderPhrase(g, extra, cfg, opts)},
                         g.Subtree(extra)});
    }
    for (TokenId extra : site.extra_objects) {
      entries.push_back({extra, Destination::kNotes,
                         {Anchor::kObject, RenderPhrase(g, extra, cfg, opts)},
                         g.Subtree(extra)});
    }

    std::optional<std::string> folded;
    if (site.promoted_pp) folded = site.promoted_pp->preposition;
    row.verb = RenderVerb(site, folded, g, profile);
    trace.verb_tokens = VerbTokens(site, g, profile);

    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.key < b.key; });
    for (Entry& e : entries) {
      if (e.phrase.text.empty()) continue;
      switch (e.destination) {
        case Destination::kTime: row.time.push_back(e.phrase); break;
        case Destination::kAdverbials: row.adverbials.push_back(e.phrase); break;
        case Destination::kConditions: row.conditions.push_back(e.phrase); break;
        case Destination::kNotes: row.notes.push_back(e.phrase); break;
        case Destination::kObjectPromotion:
        case Destination::kDrop:
          continue;
      }
      trace.phrase_tokens.push_back(std::move(e.tokens));
    }
    trace.site = std::move(site);
    traces.push_back(std::move(trace));
  }
  return traces;
}

std::vector<ClauseRow> ExtractSentence(const DependencyGraph& g,
                                       const LexiconConfig& cfg,
                                       const LabelProfile& profile,
                                       const ExtractOptions& opts) {
  std::vector<ClauseRow> rows;
  for (RowTrace& t : TraceSentence(g, cfg, profile, opts)) {
    rows.push_back(std::move(t.row));
  }
  return rows;
}

ClauseTable ExtractDocument(std::string doc_id,
                            std::span<const DependencyGraph> graphs,
                            const LexiconConfig& cfg,
                            const LabelProfile& profile,
                            const ExtractOptions& opts) {
  ClauseTable table;
  table.doc_id = std::move(doc_id);
  for (const DependencyGraph& g : graphs) {
    for (ClauseRow& r : ExtractSentence(g, cfg, profile, opts)) {
      table.rows.push_back(std::move(r));
    }
  }
  return table;
}

}  // namespace clausekit
