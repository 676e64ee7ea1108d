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

#include "test_support.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace clausekit::testing {

namespace {

template <typename T>
const T& Pick(std::mt19937& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(
      rng)];
}

bool Coin(std::mt19937& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

// Words chosen to stress CSV quoting and the phrase-list escapes.
const std::vector<std::string>& Vocabulary() {
  static const std::vector<std::string> words = {
      "renter", "owner",  "<user>", "pay",     "[is] delivered [to]",
      "fee",    "a,b",    "say \"hi\"", "x|y", "back\\slash",
      "line\nbreak", "ünïcode", "'quoted'", "30", "A: colon", "semi;colon"};
  return words;
}

std::string RandomText(std::mt19937& rng, int max_words) {
  int n = std::uniform_int_distribution<int>(1, max_words)(rng);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += Pick(rng, Vocabulary());
  }
  return out;
}

std::vector<AnnotatedPhrase> RandomPhrases(std::mt19937& rng) {
  std::vector<AnnotatedPhrase> out;
  int n = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < n; ++i) {
    Anchor a = Pick(rng, std::vector<Anchor>{Anchor::kSubject, Anchor::kVerb,
                                             Anchor::kObject});
    out.push_back({a, RandomText(rng, 4)});
  }
  return out;
}

const std::vector<std::string> kVerbs = {"copy", "modify", "distribute",
                                         "sell", "publish"};
const std::vector<std::string> kNouns = {"software", "manual", "logo",
                                         "database", "image"};

}  // namespace

std::string DataPath(std::string_view name) {
  return std::string(CLAUSEKIT_TEST_DATA_DIR) + "/" + std::string(name);
}

std::string ReadData(std::string_view name) {
  std::ifstream in(DataPath(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing test data " + std::string(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ClauseTable ReadTableData(std::string_view name) {
  std::string n(name);
  TableFormat f = n.ends_with(".json") ? TableFormat::kJson : TableFormat::kCsv;
  return Deserialize(ReadData(name), f, n.substr(0, n.rfind('.')));
}

TokenId SentenceBuilder::Add(std::string form, std::string lemma,
                             std::string upos, std::string xpos, TokenId head,
                             std::string deprel) {
  Token t;
  t.id = next_id();
  t.form = std::move(form);
  t.lemma = std::move(lemma);
  t.upos = std::move(upos);
  t.xpos = std::move(xpos);
  t.head = head;
  t.deprel = std::move(deprel);
  tokens_.push_back(std::move(t));
  return tokens_.back().id;
}

DependencyGraph SentenceBuilder::Build(std::string sent_id) const {
  return DependencyGraph::Create(std::move(sent_id), "", tokens_);
}

DependencyGraph CoordinatedVerbs(int n, std::string_view coordinator,
                                 const LabelProfile& profile) {
  const bool ud = profile.shape() == PrepositionShape::kCaseMarked;
  SentenceBuilder b;
  TokenId you = b.Add("You", "you", "PRON", "PRP", 0, "nsubj");
  TokenId may = b.Add("may", "may", "AUX", "MD", 0, "aux");
  TokenId first = 0;
  std::vector<TokenId> pending;  // commas and coordinator awaiting a head
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      bool last = i == n - 1;
      TokenId sep = last ? b.Add(std::string(coordinator),
                                 std::string(coordinator), "CCONJ", "CC", first,
                                 "cc")
                         : b.Add(",", ",", "PUNCT", ",", first, "punct");
      pending.push_back(sep);
    }
    const std::string& v = kVerbs[i % kVerbs.size()];
    TokenId id = b.Add(v, v, "VERB", "VB", first, i == 0 ? "root" : "conj");
    if (i == 0) {
      first = id;
      continue;
    }
    // UD hangs separators on the following conjunct.
    if (ud) {
      for (TokenId s : pending) b.SetHead(s, id);
    } else {
      for (TokenId s : pending) b.SetHead(s, first);
    }
    pending.clear();
  }
  b.SetHead(you, first);
  b.SetHead(may, first);
  TokenId the = b.Add("the", "the", "DET", "DT", 0, "det");
  TokenId obj = b.Add("software", "software", "NOUN", "NN", first,
                      ud ? "obj" : "dobj");
  b.SetHead(the, obj);
  b.Add(".", ".", "PUNCT", ".", first, "punct");
  return b.Build("verbs" + std::to_string(n));
}

DependencyGraph CoordinatedObjects(int n, std::string_view coordinator,
                                   const LabelProfile& profile) {
  const bool ud = profile.shape() == PrepositionShape::kCaseMarked;
  SentenceBuilder b;
  b.Add("You", "you", "PRON", "PRP", 3, "nsubj");
  b.Add("may", "may", "AUX", "MD", 3, "aux");
  TokenId verb = b.Add("copy", "copy", "VERB", "VB", 0, "root");
  TokenId first = 0;
  std::vector<TokenId> pending;
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      bool last = i == n - 1;
      pending.push_back(
          last ? b.Add(std::string(coordinator), std::string(coordinator),
                       "CCONJ", "CC", first, "cc")
               : b.Add(",", ",", "PUNCT", ",", first, "punct"));
    }
    const std::string& noun = kNouns[i % kNouns.size()];
    TokenId id = b.Add(noun, noun, "NOUN", "NN", i == 0 ? verb : first,
                       i == 0 ? (ud ? "obj" : "dobj") : "conj");
    if (i == 0) {
      first = id;
      continue;
    }
    for (TokenId s : pending) b.SetHead(s, ud ? id : first);
    pending.clear();
  }
  b.Add(".", ".", "PUNCT", ".", verb, "punct");
  return b.Build("objects" + std::to_string(n));
}

ClauseTable RandomTable(std::mt19937& rng) {
  ClauseTable t;
  int sentences = std::uniform_int_distribution<int>(0, 6)(rng);
  for (int s = 0; s < sentences; ++s) {
    std::string id = Coin(rng) ? std::to_string(s + 1) : "s," + std::to_string(s);
    int rows = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int r = 0; r < rows; ++r) {
      ClauseRow row;
      row.sent_id = id;
      row.refinement =
          r == 0 ? Refinement::kNone
                 : Pick(rng, std::vector<Refinement>{Refinement::kAnd,
                                                     Refinement::kOr,
                                                     Refinement::kSeq});
      row.modality = Pick(
          rng, std::vector<Modality>{Modality::kDeclaration,
                                     Modality::kPermission,
                                     Modality::kObligation,
                                     Modality::kProhibition});
      if (Coin(rng, 0.8)) row.subject = RandomText(rng, 3);
      if (Coin(rng, 0.9)) row.verb = RandomText(rng, 2);
      if (Coin(rng, 0.7)) row.object = RandomText(rng, 3);
      row.time = RandomPhrases(rng);
      row.adverbials = RandomPhrases(rng);
      row.conditions = RandomPhrases(rng);
      row.notes = RandomPhrases(rng);
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

LexiconConfig RandomLexicon(std::mt19937& rng) {
  static const std::vector<std::string> pool = {
      "in", "on", "at", "within", "after", "before", "during", "for", "by",
      "day", "week", "term", "account", "when", "if", "while", "because",
      "always", "very", "however", "publicly", "immediately"};
  auto subset = [&] {
    std::set<std::string> s;
    for (const std::string& w : pool) {
      if (Coin(rng, 0.2)) s.insert(w);
    }
    return s;
  };
  LexiconConfig cfg = LexiconConfig::RulesOnly();
  cfg.temporal_prepositions = subset();
  cfg.ambiguous_prepositions = subset();
  cfg.temporal_nouns = subset();
  cfg.temporal_markers = subset();
  cfg.condition_markers = subset();
  cfg.temporal_adverbs = subset();
  cfg.irrelevant_adverbs = subset();
  cfg.structural_heuristics = Coin(rng);
  return cfg;
}

ModifierRecord RandomRecord(std::mt19937& rng) {
  static const std::vector<std::string> markers = {
      "in", "on", "at", "within", "after", "before", "during", "for", "by",
      "when", "if", "while", "because", ""};
  static const std::vector<std::string> lemmas = {
      "day", "week", "term", "account", "always", "very", "however",
      "publicly", "immediately", "jurisdiction"};
  ModifierRecord r;
  r.kind = Pick(rng, std::vector<ModifierKind>{
                         ModifierKind::kAdverb, ModifierKind::kPrepositional,
                         ModifierKind::kAdverbialClause,
                         ModifierKind::kRelativeClause,
                         ModifierKind::kVerbalModifier});
  r.attachment = Pick(rng, std::vector<Attachment>{
                               Attachment::kVerb, Attachment::kSubject,
                               Attachment::kObject});
  r.root = std::uniform_int_distribution<int>(1, 30)(rng);
  r.marker = Pick(rng, markers);
  r.head_lemma = Pick(rng, lemmas);
  r.inherited = Coin(rng);
  return r;
}

DependencyGraph SignalSentence(unsigned mask) {
  auto on = [&](Signal s) { return (mask >> s) & 1u; };
  SentenceBuilder b;
  std::vector<TokenId> to_verb;
  TokenId det = on(kNoSubject) ? b.Add("No", "no", "DET", "DT", 0, "det") : 0;
  TokenId subj = b.Add("user", "user", "NOUN", "NN", 0, "nsubj");
  if (det) b.SetHead(det, subj);
  to_verb.push_back(subj);
  for (Signal s : {kMay, kCan, kMust, kShall}) {
    static const char* words[] = {"may", "can", "must", "shall"};
    if (on(s)) to_verb.push_back(b.Add(words[s], words[s], "AUX", "MD", 0, "aux"));
  }
  if (on(kNot)) to_verb.push_back(b.Add("not", "not", "PART", "RB", 0, "neg"));
  if (on(kNever)) {
    to_verb.push_back(b.Add("never", "never", "ADV", "RB", 0, "advmod"));
  }
  std::string lemma = on(kRequire) ? "require" : "access";
  TokenId v = b.Add(lemma, lemma, "VERB", "VB", 0, "root");
  for (TokenId t : to_verb) b.SetHead(t, v);
  b.Add("data", "data", "NOUN", "NN", v, "dobj");
  return b.Build("m" + std::to_string(mask));
}

Modality ExpectedModality(unsigned mask) {
  auto on = [&](Signal s) { return (mask >> s) & 1u; };
  if (on(kNot) || on(kNever) || on(kNoSubject)) return Modality::kProhibition;
  if (on(kMust) || on(kShall) || on(kRequire)) return Modality::kObligation;
  if (on(kMay) || on(kCan)) return Modality::kPermission;
  return Modality::kDeclaration;
}

Destination ExpectedDestination(const ModifierRecord& r,
                                const LexiconConfig& cfg) {
  switch (r.kind) {
    case ModifierKind::kPrepositional: {
      bool temporal = cfg.temporal_prepositions.count(r.marker) ||
                      (cfg.ambiguous_prepositions.count(r.marker) &&
                       cfg.temporal_nouns.count(r.head_lemma));
      if (temporal && r.attachment != Attachment::kSubject) {
        return Destination::kTime;
      }
      return r.attachment == Attachment::kVerb ? Destination::kAdverbials
                                               : Destination::kNotes;
    }
    case ModifierKind::kAdverbialClause:
      if (cfg.temporal_markers.count(r.marker)) return Destination::kTime;
      if (cfg.condition_markers.count(r.marker)) return Destination::kConditions;
      return Destination::kAdverbials;
    case ModifierKind::kAdverb:
      if (cfg.temporal_adverbs.count(r.head_lemma)) return Destination::kTime;
      if (cfg.irrelevant_adverbs.count(r.head_lemma)) return Destination::kDrop;
      return Destination::kAdverbials;
    default:
      return Destination::kNotes;
  }
}

}  // namespace clausekit::testing
