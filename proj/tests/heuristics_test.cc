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

#include <gtest/gtest.h>

#include <random>

#include "clausekit/rules.h"
#include "test_support.h"

namespace clausekit {
namespace {

using testing::ReadData;
using testing::SentenceBuilder;

const LabelProfile& Classic() { return LabelProfile::StanfordClassic(); }

// "<subject> <aux...> [not] <verb> it ." with the given auxiliaries.
DependencyGraph Clause(const std::vector<std::string>& aux, bool negated,
                       const std::string& verb = "use") {
  SentenceBuilder b;
  b.Add("You", "you", "PRON", "PRP", 0, "nsubj");
  std::vector<TokenId> pending{1};
  for (const std::string& a : aux) {
    pending.push_back(b.Add(a, a, "AUX", "MD", 0, "aux"));
  }
  if (negated) pending.push_back(b.Add("not", "not", "PART", "RB", 0, "neg"));
  TokenId v = b.Add(verb, verb, "VERB", "VB", 0, "root");
  for (TokenId t : pending) b.SetHead(t, v);
  b.Add("it", "it", "PRON", "PRP", v, "dobj");
  return b.Build("c");
}

PredicateSite SiteOf(const DependencyGraph& g) {
  return FindPredicates(g, Classic()).front();
}

Modality Refined(const DependencyGraph& g, const LexiconConfig& cfg) {
  PredicateSite site = SiteOf(g);
  return RefineModality(ClassifyModalityCore(site, g), site, g, cfg, Classic());
}

TEST(RefineModality, ExtendedAuxiliaries) {
  LexiconConfig cfg = LexiconConfig::Defaults();
  EXPECT_EQ(Refined(Clause({"shall"}, false), cfg), Modality::kObligation);
  EXPECT_EQ(Refined(Clause({"will"}, true), cfg), Modality::kProhibition);
  EXPECT_EQ(Refined(Clause({"can"}, false), cfg), Modality::kPermission);
  EXPECT_EQ(Refined(Clause({}, false), cfg), Modality::kDeclaration);
  // Rules only: "shall" carries no signal.
  EXPECT_EQ(Refined(Clause({"shall"}, false), LexiconConfig::RulesOnly()),
            Modality::kDeclaration);
}

TEST(RefineModality, CopularObligationPredicate) {
  auto g = ParseConllu(ReadData("constructions_classic.conllu"));
  ASSERT_EQ(g[0].sent_id(), "copular");
  EXPECT_EQ(Refined(g[0], LexiconConfig::Defaults()), Modality::kObligation);
  EXPECT_EQ(Refined(g[0], LexiconConfig::RulesOnly()), Modality::kDeclaration);
}

TEST(RefineModality, ProhibitionMarkers) {
  auto g = ParseConllu(ReadData("constructions_classic.conllu"));
  const DependencyGraph& no_user = g[6];
  ASSERT_EQ(no_user.sent_id(), "no-user");
  EXPECT_EQ(Refined(no_user, LexiconConfig::Defaults()), Modality::kProhibition);
  EXPECT_EQ(Refined(no_user, LexiconConfig::RulesOnly()), Modality::kDeclaration);
}

RoutedModifier Pp(std::string prep, std::string head, Attachment a,
                  const LexiconConfig& cfg = LexiconConfig::Defaults()) {
  ModifierRecord r;
  r.kind = ModifierKind::kPrepositional;
  r.marker = std::move(prep);
  r.head_lemma = std::move(head);
  r.attachment = a;
  return RoutePp(r, cfg);
}

TEST(RoutePp, TemporalAndDefaultDestinations) {
  EXPECT_EQ(Pp("during", "term", Attachment::kVerb).destination,
            Destination::kTime);
  RoutedModifier in = Pp("in", "jurisdiction", Attachment::kVerb);
  EXPECT_EQ(in.destination, Destination::kAdverbials);
  EXPECT_EQ(in.anchor, Anchor::kVerb);
  RoutedModifier within = Pp("within", "day", Attachment::kObject);
  EXPECT_EQ(within.destination, Destination::kTime);
  EXPECT_EQ(within.anchor, Anchor::kVerb);
  RoutedModifier on = Pp("on", "facebook", Attachment::kObject);
  EXPECT_EQ(on.destination, Destination::kNotes);
  EXPECT_EQ(on.anchor, Anchor::kObject);
  // An ambiguous preposition needs a temporal head noun.
  EXPECT_EQ(Pp("within", "budget", Attachment::kVerb).destination,
            Destination::kAdverbials);
}

TEST(RoutePp, AddingAnotherPrepositionDoesNotChangeDestination) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    ModifierRecord r = testing::RandomRecord(rng);
    r.kind = ModifierKind::kPrepositional;
    LexiconConfig cfg = testing::RandomLexicon(rng);
    LexiconConfig more = cfg;
    more.temporal_prepositions.insert(r.marker + "x");
    EXPECT_EQ(RoutePp(r, cfg).destination, RoutePp(r, more).destination);
  }
}

RoutedModifier Advcl(std::string marker) {
  ModifierRecord r;
  r.kind = ModifierKind::kAdverbialClause;
  r.marker = std::move(marker);
  return RouteAdvcl(r, LexiconConfig::Defaults());
}

TEST(RouteAdvcl, Markers) {
  EXPECT_EQ(Advcl("if").destination, Destination::kConditions);
  EXPECT_EQ(Advcl("when").destination, Destination::kTime);
  EXPECT_EQ(Advcl("because").destination, Destination::kAdverbials);
}

RoutedModifier Adverb(std::string lemma) {
  ModifierRecord r;
  r.kind = ModifierKind::kAdverb;
  r.head_lemma = std::move(lemma);
  return FilterAdverb(r, LexiconConfig::Defaults());
}

TEST(FilterAdverb, Lists) {
  EXPECT_EQ(Adverb("immediately").destination, Destination::kTime);
  EXPECT_EQ(Adverb("however").destination, Destination::kDrop);
  EXPECT_EQ(Adverb("publicly").destination, Destination::kAdverbials);
}

TEST(RouteModifier, TotalAndExclusiveOverRandomLexicons) {
  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    ModifierRecord r = testing::RandomRecord(rng);
    LexiconConfig cfg = testing::RandomLexicon(rng);
    RoutedModifier routed = RouteModifier(r, cfg);
    EXPECT_EQ(routed.destination, testing::ExpectedDestination(r, cfg)) << i;
    EXPECT_EQ(routed.record, r);
  }
}

TEST(RouteModifier, RulesOnlyKeepsEverything) {
  std::mt19937 rng(99);
  LexiconConfig empty = LexiconConfig::RulesOnly();
  for (int i = 0; i < 200; ++i) {
    ModifierRecord r = testing::RandomRecord(rng);
    RoutedModifier routed = RouteModifier(r, empty);
    EXPECT_NE(routed.destination, Destination::kDrop);
    EXPECT_NE(routed.destination, Destination::kTime);
    EXPECT_NE(routed.destination, Destination::kConditions);
    bool verb_level = r.kind == ModifierKind::kAdverbialClause ||
                      r.kind == ModifierKind::kAdverb ||
                      (r.kind == ModifierKind::kPrepositional &&
                       r.attachment == Attachment::kVerb);
    if (verb_level) EXPECT_EQ(routed.destination, Destination::kAdverbials);
  }
}

TEST(NumericCondition, OnlyCardinalModifiers) {
  auto g = ParseConllu(ReadData("table1_classic.conllu"));
  auto nc = FindNumericCondition(9, Anchor::kSubject, g[3]);
  ASSERT_TRUE(nc.has_value());
  EXPECT_EQ(nc->token, 8);
  EXPECT_EQ(nc->phrase, (AnnotatedPhrase{Anchor::kSubject, "one"}));
  EXPECT_FALSE(FindNumericCondition(2, Anchor::kSubject, g[3]).has_value());
}

TEST(PrepositionalObjectFallback, PromotesFirstNonTemporalPp) {
  auto g = ParseConllu(ReadData("constructions_classic.conllu"));
  const DependencyGraph& comply = g[1];
  ASSERT_EQ(comply.sent_id(), "comply");
  PredicateSite site = SiteOf(comply);
  auto pp = PrepositionalObjectFallback(site, comply, Classic(),
                                        LexiconConfig::Defaults());
  ASSERT_TRUE(pp.has_value());
  EXPECT_EQ(pp->preposition, "with");
  EXPECT_EQ(pp->object, 6);
  EXPECT_FALSE(PrepositionalObjectFallback(site, comply, Classic(),
                                           LexiconConfig::RulesOnly()));
  // A direct object blocks the fallback.
  PredicateSite with_object = site;
  with_object.object_head = 6;
  EXPECT_FALSE(PrepositionalObjectFallback(with_object, comply, Classic(),
                                           LexiconConfig::Defaults()));
}

TEST(PrepositionalObjectFallback, NoPpLeavesObjectBlank) {
  SentenceBuilder b;
  b.Add("You", "you", "PRON", "PRP", 2, "nsubj");
  b.Add("leave", "leave", "VERB", "VB", 0, "root");
  auto g = b.Build("x");
  EXPECT_FALSE(PrepositionalObjectFallback(SiteOf(g), g, Classic(),
                                           LexiconConfig::Defaults()));
}

TEST(ResolveAnaphora, MapsAndIsIdempotent) {
  LexiconConfig cfg = LexiconConfig::Defaults();
  Token us;
  us.form = "us";
  us.lemma = "we";
  EXPECT_EQ(ResolveAnaphora(us, cfg), "<we>");
  Token you;
  you.form = "You";
  you.lemma = "you";
  EXPECT_EQ(ResolveAnaphora(you, cfg), "<user>");
  Token it;
  it.form = "It";
  it.lemma = "it";
  EXPECT_EQ(ResolveAnaphora(it, cfg), "it");
  for (const Token& t : {us, you, it}) {
    Token again;
    again.form = again.lemma = ResolveAnaphora(t, cfg);
    EXPECT_EQ(ResolveAnaphora(again, cfg), again.lemma);
  }
}

}  // namespace
}  // namespace clausekit
