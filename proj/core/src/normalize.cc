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

#include "clausekit/normalize.h"

#include <algorithm>
#include <cctype>

#include "clausekit/heuristics.h"
#include "text_util.h"

namespace clausekit {

using internal::JoinWords;
using internal::Lower;

namespace {

bool IsArticle(const Token& t) {
  std::string lemma = Lower(t.lemma);
  return lemma == "a" || lemma == "an" || lemma == "the";
}

bool IsGenitiveMarker(const Token& t) {
  return t.form == "'s" || t.form == "'" || t.form == "’s" || t.xpos == "POS";
}

bool IsTag(std::string_view s) {
  return s.size() >= 3 && s.front() == '<' && s.back() == '>';
}

std::string Styled(const std::string& resolved, const RenderOptions& opts) {
  if (opts.anaphora_style == AnaphoraStyle::kDisplay && IsTag(resolved)) {
    return DisplayTag(resolved);
  }
  return resolved;
}

// Pronoun inside a phrase: mapped ones become tags, possessives keep "'s".
std::string PronounInPhrase(const Token& t, const LexiconConfig& cfg,
                            const RenderOptions& opts) {
  std::string resolved = ResolveAnaphora(t, cfg);
  if (!IsTag(resolved)) return t.form;
  std::string out = Styled(resolved, opts);
  if (IsPossessivePronoun(t)) out += "'s";
  return out;
}

std::optional<TokenId> ConvertiblePossessor(const DependencyGraph& g,
                                            TokenId head,
                                            const LabelProfile& profile) {
  auto poss = FirstDependent(g, head, Role::kPossessive, profile);
  if (!poss) return std::nullopt;
  const Token& t = g.token(*poss);
  if (IsPronoun(t) || IsProperNoun(t)) return poss;
  return std::nullopt;
}

std::set<TokenId> NpExclusions(const DependencyGraph& g, TokenId head,
                               const std::set<TokenId>& excluded,
                               const LabelProfile& profile) {
  std::set<TokenId> excl = excluded;
  for (TokenId c : g.children(head)) {
    const Token& t = g.token(c);
    if (profile.Matches(Role::kCoordination, t) ||
        profile.Matches(Role::kConjunct, t) ||
        profile.Matches(Role::kPunctuation, t) ||
        profile.Matches(Role::kDeterminer, t) ||
        (profile.shape() == PrepositionShape::kCaseMarked &&
         profile.Matches(Role::kCase, t))) {
      excl.insert(c);
    }
  }
  return excl;
}

// Drops leading/trailing punctuation.
std::vector<Token> TrimPunctuation(std::vector<Token> tokens) {
  auto first = std::find_if(tokens.begin(), tokens.end(),
                            [](const Token& t) { return !IsPunctuation(t); });
  tokens.erase(tokens.begin(), first);
  while (!tokens.empty() && IsPunctuation(tokens.back())) tokens.pop_back();
  return tokens;
}

}  // namespace

std::string DisplayTag(std::string_view tag) {
  if (!IsTag(tag)) return std::string(tag);
  std::string out(tag.substr(1, tag.size() - 2));
  if (!out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

std::vector<TokenId> CoreNpTokens(const DependencyGraph& g, TokenId head,
                                  const std::set<TokenId>& excluded,
                                  const LabelProfile& profile) {
  std::set<TokenId> excl = NpExclusions(g, head, excluded, profile);
  std::vector<TokenId> out;
  for (const Token& t : TrimPunctuation(YieldSpan(g, head, excl))) {
    if (t.id != head && IsArticle(t)) continue;
    out.push_back(t.id);
  }
  return out;
}

std::string RenderNp(const DependencyGraph& g, TokenId head,
                     const std::set<TokenId>& excluded,
                     const LexiconConfig& cfg, const LabelProfile& profile,
                     const RenderOptions& opts) {
  std::set<TokenId> excl = NpExclusions(g, head, excluded, profile);
  auto possessor = ConvertiblePossessor(g, head, profile);
  if (possessor) excl.insert(*possessor);

  std::vector<std::string> words;
  for (const Token& t : TrimPunctuation(YieldSpan(g, head, excl))) {
    if (t.id != head && IsArticle(t)) continue;
    if (t.id == head) {
      words.push_back(IsPronoun(t) ? Styled(ResolveAnaphora(t, cfg), opts)
                                   : t.lemma);
    } else if (IsPronoun(t)) {
      words.push_back(PronounInPhrase(t, cfg, opts));
    } else {
      words.push_back(t.form);
    }
  }

  if (possessor) {
    const Token& p = g.token(*possessor);
    words.push_back("of");
    if (IsPronoun(p)) {
      words.push_back(Styled(ResolveAnaphora(p, cfg), opts));
    } else {
      for (const Token& t : TrimPunctuation(YieldSpan(g, *possessor))) {
        if (IsArticle(t) || IsGenitiveMarker(t)) continue;
        words.push_back(t.form);
      }
    }
  }
  return JoinWords(words);
}

std::string RenderVerb(const PredicateSite& site,
                       const std::optional<std::string>& folded_preposition,
                       const DependencyGraph& g, const LabelProfile& profile) {
  if (site.notes_only) return "";
  const Token& v = g.token(site.verb_head);
  std::vector<std::string> words;
  bool passive = site.voice == Voice::kPassive;
  if (site.copular) {
    words = {"[is]", v.lemma};
  } else if (passive) {
    words = {"[is]", v.form};
  } else {
    words.push_back(v.lemma);
    for (TokenId prt : Dependents(g, site.verb_head, Role::kParticle, profile)) {
      words.push_back(Lower(g.token(prt).form));
    }
  }
  if (folded_preposition && !folded_preposition->empty()) {
    bool bracket = *folded_preposition == "to" &&
                   (passive || site.indirect_object);
    words.push_back(bracket ? "[to]" : *folded_preposition);
  } else if (site.indirect_object) {
    words.push_back("[to]");
  }
  return JoinWords(words);
}

std::vector<TokenId> VerbTokens(const PredicateSite& site,
                                const DependencyGraph& g,
                                const LabelProfile& profile) {
  if (site.notes_only) return {};
  std::vector<TokenId> out{site.verb_head};
  if (!site.copular && site.voice == Voice::kActive) {
    for (TokenId prt : Dependents(g, site.verb_head, Role::kParticle, profile)) {
      out.push_back(prt);
    }
  }
  if (site.promoted_pp) {
    for (TokenId m : site.promoted_pp->marker_tokens) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string RenderPhrase(const DependencyGraph& g, TokenId root,
                         const LexiconConfig& cfg, const RenderOptions& opts) {
  std::vector<std::string> words;
  for (const Token& t : TrimPunctuation(YieldSpan(g, root))) {
    words.push_back(IsPronoun(t) ? PronounInPhrase(t, cfg, opts) : t.form);
  }
  return JoinWords(words);
}

AnnotatedPhrase RenderModifier(const RoutedModifier& routed,
                               const DependencyGraph& g,
                               const LexiconConfig& cfg,
                               const RenderOptions& opts) {
  return AnnotatedPhrase{routed.anchor,
                         RenderPhrase(g, routed.record.root, cfg, opts)};
}

}  // namespace clausekit
