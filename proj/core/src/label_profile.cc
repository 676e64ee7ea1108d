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

#include "clausekit/label_profile.h"

#include <algorithm>
#include <utility>

#include "text_util.h"

namespace clausekit {

using internal::Lower;

namespace {

struct RoleEntry {
  Role role;
  std::string_view name;
};

constexpr RoleEntry kRoleNames[] = {
    {Role::kSubject, "SUBJECT"},
    {Role::kPassiveSubject, "PASSIVE_SUBJECT"},
    {Role::kDirectObject, "DIRECT_OBJECT"},
    {Role::kIndirectObject, "INDIRECT_OBJECT"},
    {Role::kAuxiliary, "AUXILIARY"},
    {Role::kPassiveAuxiliary, "PASSIVE_AUXILIARY"},
    {Role::kNegation, "NEGATION"},
    {Role::kRelativeClause, "RELATIVE_CLAUSE"},
    {Role::kVerbalModifier, "VERBAL_MODIFIER"},
    {Role::kPrepositionalModifier, "PREPOSITIONAL_MODIFIER"},
    {Role::kAdverbialModifier, "ADVERBIAL_MODIFIER"},
    {Role::kAdverbialClause, "ADVERBIAL_CLAUSE"},
    {Role::kClauseMarker, "CLAUSE_MARKER"},
    {Role::kCoordination, "COORDINATION"},
    {Role::kConjunct, "CONJUNCT"},
    {Role::kAgent, "AGENT"},
    {Role::kCopula, "COPULA"},
    {Role::kCase, "CASE"},
    {Role::kDeterminer, "DETERMINER"},
    {Role::kPossessive, "POSSESSIVE"},
    {Role::kParticle, "PARTICLE"},
    {Role::kFixed, "FIXED"},
    {Role::kPunctuation, "PUNCTUATION"},
};

RoleSpec Labels(std::initializer_list<std::string> labels) {
  return RoleSpec{std::set<std::string>(labels), {}};
}

}  // namespace

std::string_view RoleName(Role role) {
  for (const RoleEntry& e : kRoleNames) {
    if (e.role == role) return e.name;
  }
  throw Error("unknown relation role #" +
              std::to_string(static_cast<int>(role)));
}

Role RoleFromName(std::string_view name) {
  for (const RoleEntry& e : kRoleNames) {
    if (e.name == name) return e.role;
  }
  throw Error("unknown relation role '" + std::string(name) + "'");
}

LabelProfile::LabelProfile(std::string name, PrepositionShape shape,
                           std::map<Role, RoleSpec> mapping)
    : name_(std::move(name)), shape_(shape), mapping_(std::move(mapping)) {
  for (Role role : kAllRoles) {
    auto it = mapping_.find(role);
    if (it == mapping_.end() || it->second.labels.empty()) {
      throw InvariantError("label profile '" + name_ + "' maps role " +
                           std::string(RoleName(role)) + " to no labels");
    }
  }
}

const LabelProfile& LabelProfile::StanfordClassic() {
  static const LabelProfile* profile = new LabelProfile(
      "stanford-classic", PrepositionShape::kPrepositionHeaded,
      {
          {Role::kSubject, Labels({"nsubj", "csubj"})},
          {Role::kPassiveSubject, Labels({"nsubjpass", "csubjpass"})},
          {Role::kDirectObject, Labels({"dobj"})},
          {Role::kIndirectObject, Labels({"iobj"})},
          {Role::kAuxiliary, Labels({"aux"})},
          {Role::kPassiveAuxiliary, Labels({"auxpass"})},
          {Role::kNegation, Labels({"neg"})},
          {Role::kRelativeClause, Labels({"rcmod"})},
          {Role::kVerbalModifier, Labels({"vmod", "partmod", "infmod"})},
          {Role::kPrepositionalModifier, Labels({"prep"})},
          {Role::kAdverbialModifier, Labels({"advmod"})},
          {Role::kAdverbialClause, Labels({"advcl"})},
          {Role::kClauseMarker, Labels({"mark", "complm"})},
          {Role::kCoordination, Labels({"cc"})},
          {Role::kConjunct, Labels({"conj"})},
          {Role::kAgent, Labels({"agent"})},
          {Role::kCopula, Labels({"cop"})},
          {Role::kCase, Labels({"pobj", "pcomp"})},
          {Role::kDeterminer, Labels({"det", "predet"})},
          {Role::kPossessive, Labels({"poss"})},
          {Role::kParticle, Labels({"prt"})},
          {Role::kFixed, Labels({"mwe"})},
          {Role::kPunctuation, Labels({"punct"})},
      });
  return *profile;
}

const LabelProfile& LabelProfile::UniversalDependencies() {
  static const LabelProfile* profile = new LabelProfile(
      "ud", PrepositionShape::kCaseMarked,
      {
          {Role::kSubject, Labels({"nsubj", "csubj"})},
          {Role::kPassiveSubject, Labels({"nsubj:pass", "csubj:pass"})},
          {Role::kDirectObject, Labels({"obj"})},
          {Role::kIndirectObject, Labels({"iobj"})},
          {Role::kAuxiliary, Labels({"aux"})},
          {Role::kPassiveAuxiliary, Labels({"aux:pass"})},
          {Role::kNegation, RoleSpec{{"advmod"}, {"not", "n't", "never"}}},
          {Role::kRelativeClause, Labels({"acl:relcl"})},
          {Role::kVerbalModifier, Labels({"acl"})},
          {Role::kPrepositionalModifier,
           Labels({"obl", "nmod", "obl:tmod", "obl:npmod", "nmod:tmod",
                   "nmod:npmod"})},
          {Role::kAdverbialModifier, Labels({"advmod"})},
          {Role::kAdverbialClause, Labels({"advcl"})},
          {Role::kClauseMarker, Labels({"mark"})},
          {Role::kCoordination, Labels({"cc"})},
          {Role::kConjunct, Labels({"conj"})},
          {Role::kAgent, Labels({"obl:agent"})},
          {Role::kCopula, Labels({"cop"})},
          {Role::kCase, Labels({"case"})},
          {Role::kDeterminer, Labels({"det", "det:predet"})},
          {Role::kPossessive, Labels({"nmod:poss"})},
          {Role::kParticle, Labels({"compound:prt"})},
          {Role::kFixed, Labels({"fixed"})},
          {Role::kPunctuation, Labels({"punct"})},
      });
  return *profile;
}

const LabelProfile& LabelProfile::ByName(std::string_view name) {
  if (name == "stanford-classic") return StanfordClassic();
  if (name == "ud") return UniversalDependencies();
  throw Error("unknown label profile '" + std::string(name) +
              "' (expected stanford-classic or ud)");
}

const RoleSpec& LabelProfile::spec(Role role) const {
  auto it = mapping_.find(role);
  if (it == mapping_.end()) {
    throw Error("label profile '" + name_ + "' has no role #" +
                std::to_string(static_cast<int>(role)));
  }
  return it->second;
}

bool LabelProfile::ClaimedByLemmaRole(Role except, const Token& t) const {
  for (const auto& [role, spec] : mapping_) {
    if (role == except || spec.lemmas.empty()) continue;
    if (spec.labels.contains(t.deprel) && spec.lemmas.contains(Lower(t.lemma))) {
      return true;
    }
  }
  return false;
}

bool LabelProfile::Matches(Role role, const Token& t) const {
  const RoleSpec& s = spec(role);
  if (!s.labels.contains(t.deprel)) return false;
  if (!s.lemmas.empty()) return s.lemmas.contains(Lower(t.lemma));
  return !ClaimedByLemmaRole(role, t);
}

std::vector<TokenId> Dependents(const DependencyGraph& g, TokenId node,
                                Role role, const LabelProfile& profile) {
  profile.spec(role);  // reject roles the profile does not define
  std::vector<TokenId> out;
  for (TokenId c : g.children(node)) {
    if (profile.Matches(role, g.token(c))) out.push_back(c);
  }
  return out;
}

std::optional<TokenId> FirstDependent(const DependencyGraph& g, TokenId node,
                                      Role role, const LabelProfile& profile) {
  for (TokenId c : g.children(node)) {
    if (profile.Matches(role, g.token(c))) return c;
  }
  return std::nullopt;
}

namespace {

bool IsPrepositionTag(const Token& t) {
  return t.upos == "ADP" || t.xpos == "IN" || t.xpos == "TO";
}

void AppendMarker(const DependencyGraph& g, TokenId marker,
                  const LabelProfile& profile, std::vector<TokenId>& out) {
  out.push_back(marker);
  for (TokenId f : Dependents(g, marker, Role::kFixed, profile)) {
    out.push_back(f);
  }
}

std::string SpellMarkers(const DependencyGraph& g,
                         const std::vector<TokenId>& markers) {
  std::string out;
  for (TokenId m : markers) {
    if (!out.empty()) out.push_back(' ');
    out += Lower(g.token(m).form);
  }
  return out;
}

}  // namespace

PrepPhrase MakePrepPhrase(const DependencyGraph& g, TokenId dependent,
                          Role role, const LabelProfile& profile) {
  PrepPhrase pp;
  pp.root = dependent;
  if (profile.shape() == PrepositionShape::kPrepositionHeaded) {
    auto object = FirstDependent(g, dependent, Role::kCase, profile);
    if (object || IsPrepositionTag(g.token(dependent))) {
      AppendMarker(g, dependent, profile, pp.marker_tokens);
      pp.object = object;
    } else {
      pp.object = dependent;  // collapsed form: agent(V, N)
    }
  } else {
    for (TokenId c : Dependents(g, dependent, Role::kCase, profile)) {
      if (c < dependent) AppendMarker(g, c, profile, pp.marker_tokens);
    }
    pp.object = dependent;
  }
  std::sort(pp.marker_tokens.begin(), pp.marker_tokens.end());
  pp.preposition = SpellMarkers(g, pp.marker_tokens);
  if (pp.preposition.empty() && role == Role::kAgent) pp.preposition = "by";
  return pp;
}

std::vector<PrepPhrase> PrepositionalModifiers(const DependencyGraph& g,
                                               TokenId node,
                                               const LabelProfile& profile) {
  std::vector<PrepPhrase> out;
  for (TokenId c : g.children(node)) {
    const Token& t = g.token(c);
    if (profile.Matches(Role::kPrepositionalModifier, t)) {
      out.push_back(MakePrepPhrase(g, c, Role::kPrepositionalModifier, profile));
    } else if (profile.Matches(Role::kAgent, t)) {
      out.push_back(MakePrepPhrase(g, c, Role::kAgent, profile));
    }
  }
  return out;
}

}  // namespace clausekit
