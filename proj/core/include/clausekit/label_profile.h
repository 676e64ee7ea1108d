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

// Abstract relation roles and the concrete label schemes that realize them.
//
// Extraction code never inspects deprel strings directly. It asks for the
// dependents of a node in some Role, and the active LabelProfile decides
// which labels (and, for overloaded labels such as UD `advmod` negation,
// which lemmas) fill that role.

#ifndef CLAUSEKIT_LABEL_PROFILE_H_
#define CLAUSEKIT_LABEL_PROFILE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "clausekit/depgraph.h"

namespace clausekit {

enum class Role {
  kSubject,
  kPassiveSubject,
  kDirectObject,
  kIndirectObject,
  kAuxiliary,
  kPassiveAuxiliary,
  kNegation,
  kRelativeClause,
  kVerbalModifier,
  kPrepositionalModifier,
  kAdverbialModifier,
  kAdverbialClause,
  kClauseMarker,
  kCoordination,
  kConjunct,
  kAgent,
  kCopula,
  kCase,
  kDeterminer,
  kPossessive,
  kParticle,
  kFixed,
  kPunctuation,
};

inline constexpr Role kAllRoles[] = {
    Role::kSubject,          Role::kPassiveSubject,
    Role::kDirectObject,     Role::kIndirectObject,
    Role::kAuxiliary,        Role::kPassiveAuxiliary,
    Role::kNegation,         Role::kRelativeClause,
    Role::kVerbalModifier,   Role::kPrepositionalModifier,
    Role::kAdverbialModifier, Role::kAdverbialClause,
    Role::kClauseMarker,     Role::kCoordination,
    Role::kConjunct,         Role::kAgent,
    Role::kCopula,           Role::kCase,
    Role::kDeterminer,       Role::kPossessive,
    Role::kParticle,         Role::kFixed,
    Role::kPunctuation,
};

// Upper-case role name, e.g. "PASSIVE_SUBJECT".
std::string_view RoleName(Role role);
// Throws Error for unknown names.
Role RoleFromName(std::string_view name);

// How prepositional phrases are shaped in the scheme.
enum class PrepositionShape {
  // prep(head, P), pobj(P, N): the preposition heads the phrase.
  kPrepositionHeaded,
  // obl/nmod(head, N), case(N, P): the nominal heads the phrase.
  kCaseMarked,
};

struct RoleSpec {
  std::set<std::string> labels;
  // When non-empty the dependent's lemma (lower-cased) must be listed, and
  // tokens matched this way are withheld from other roles sharing a label.
  std::set<std::string> lemmas;
};

class LabelProfile {
 public:
  // Throws InvariantError unless every Role has a non-empty label set.
  LabelProfile(std::string name, PrepositionShape shape,
               std::map<Role, RoleSpec> mapping);

  // Classic Stanford typed dependencies (nsubj, dobj, prep/pobj, rcmod, ...).
  static const LabelProfile& StanfordClassic();
  // Universal Dependencies v2 (obj, obl/nmod + case, acl:relcl, ...).
  static const LabelProfile& UniversalDependencies();
  // "stanford-classic" or "ud". Throws Error otherwise.
  static const LabelProfile& ByName(std::string_view name);

  const std::string& name() const { return name_; }
  PrepositionShape shape() const { return shape_; }
  // Throws Error for a role the profile does not define.
  const RoleSpec& spec(Role role) const;

  bool Matches(Role role, const Token& t) const;

 private:
  bool ClaimedByLemmaRole(Role except, const Token& t) const;

  std::string name_;
  PrepositionShape shape_;
  std::map<Role, RoleSpec> mapping_;
};

// Dependents of `node` filling `role`, in surface order.
std::vector<TokenId> Dependents(const DependencyGraph& g, TokenId node,
                                Role role, const LabelProfile& profile);

std::optional<TokenId> FirstDependent(const DependencyGraph& g, TokenId node,
                                      Role role, const LabelProfile& profile);

// Scheme-neutral view of a prepositional phrase attached to some head.
struct PrepPhrase {
  // Subtree holding the whole phrase (preposition token or case-marked
  // nominal depending on the scheme).
  TokenId root = 0;
  // Lower-cased preposition, multiword expressions space-joined ("such as").
  // Empty for bare nominal modifiers.
  std::string preposition;
  // Tokens spelling the preposition.
  std::vector<TokenId> marker_tokens;
  // Head of the governed noun phrase; absent for a stranded preposition.
  std::optional<TokenId> object;

  bool operator==(const PrepPhrase&) const = default;
};

// Builds the PrepPhrase view of a dependent in the given role
// (PREPOSITIONAL_MODIFIER or AGENT).
PrepPhrase MakePrepPhrase(const DependencyGraph& g, TokenId dependent,
                          Role role, const LabelProfile& profile);

// Prepositional-modifier and agent dependents of `node`, in surface order.
std::vector<PrepPhrase> PrepositionalModifiers(const DependencyGraph& g,
                                               TokenId node,
                                               const LabelProfile& profile);

}  // namespace clausekit

#endif  // CLAUSEKIT_LABEL_PROFILE_H_
