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

#ifndef CLAUSEKIT_TESTS_TEST_SUPPORT_H_
#define CLAUSEKIT_TESTS_TEST_SUPPORT_H_

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "clausekit/clause_table.h"
#include "clausekit/depgraph.h"
#include "clausekit/label_profile.h"
#include "clausekit/lexicon.h"
#include "clausekit/predicate.h"

namespace clausekit::testing {

std::string DataPath(std::string_view name);
std::string ReadData(std::string_view name);
ClauseTable ReadTableData(std::string_view name);

// Builds a sentence token by token. Heads may refer forward.
class SentenceBuilder {
 public:
  TokenId Add(std::string form, std::string lemma, std::string upos,
              std::string xpos, TokenId head, std::string deprel);
  // Fills in heads of tokens added before their head was known.
  void SetHead(TokenId id, TokenId head) { tokens_[id - 1].head = head; }
  TokenId next_id() const { return static_cast<TokenId>(tokens_.size()) + 1; }
  DependencyGraph Build(std::string sent_id) const;

 private:
  std::vector<Token> tokens_;
};

// "You may v1, v2 ... <coordinator> vn the software." with n verb conjuncts,
// attached the way `profile` attaches coordinators.
DependencyGraph CoordinatedVerbs(int n, std::string_view coordinator,
                                 const LabelProfile& profile);

// Same shape, coordinating the object nouns instead.
DependencyGraph CoordinatedObjects(int n, std::string_view coordinator,
                                   const LabelProfile& profile);

ClauseTable RandomTable(std::mt19937& rng);

LexiconConfig RandomLexicon(std::mt19937& rng);

ModifierRecord RandomRecord(std::mt19937& rng);

// Deontic signals toggled independently by SignalSentence.
enum Signal {
  kMay,        // core permission auxiliary
  kCan,        // extended permission auxiliary
  kMust,       // core obligation auxiliary
  kShall,      // extended obligation auxiliary
  kRequire,    // obligation predicate lemma
  kNot,        // core negation
  kNever,      // extended prohibition adverb
  kNoSubject,  // extended prohibition determiner
  kSignalCount,
};
inline constexpr unsigned kSignalSubsets = 1u << kSignalCount;

// "[No] user [may] [can] [must] [shall] [not] [never] access|require data".
DependencyGraph SignalSentence(unsigned mask);

// Strongest signal wins: F over O over P over D.
Modality ExpectedModality(unsigned mask);

// Independent statement of the routing table.
Destination ExpectedDestination(const ModifierRecord& r,
                                const LexiconConfig& cfg);

}  // namespace clausekit::testing

#endif  // CLAUSEKIT_TESTS_TEST_SUPPORT_H_
