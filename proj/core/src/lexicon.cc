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

#include "clausekit/lexicon.h"

#include <utility>

#include "json.hpp"
#include "text_util.h"

namespace clausekit {

LexiconConfig LexiconConfig::Defaults() {
  LexiconConfig c;
  c.permission_aux = {"may", "can", "could", "might"};
  c.obligation_aux = {"must", "shall", "will", "should"};
  c.prohibition_markers = {"never", "no"};
  c.obligation_predicates = {"responsible", "require", "oblige", "obligate",
                             "liable"};
  c.temporal_prepositions = {"after", "before", "during", "until", "till",
                             "prior to"};
  c.ambiguous_prepositions = {"in", "within", "for", "at", "on", "over"};
  c.temporal_nouns = {"day",  "week", "month",  "year", "hour",
                      "minute", "time", "period", "date"};
  c.temporal_markers = {"while", "when", "whenever", "before", "after",
                        "until", "once"};
  c.condition_markers = {"if"};
  c.temporal_adverbs = {"always", "immediately", "before", "promptly",
                        "forthwith", "afterwards"};
  c.irrelevant_adverbs = {"very", "however", "also", "further", "furthermore",
                          "moreover", "therefore"};
  c.anaphora_map = {{"we", "<we>"},    {"our", "<we>"},    {"us", "<we>"},
                    {"ours", "<we>"},  {"you", "<user>"},  {"your", "<user>"},
                    {"yours", "<user>"}};
  c.structural_heuristics = true;
  return c;
}

LexiconConfig LexiconConfig::RulesOnly() {
  LexiconConfig c;
  c.structural_heuristics = false;
  return c;
}

void ValidateLexicon(const LexiconConfig& cfg) {
  for (const std::string& w : cfg.permission_aux) {
    if (cfg.obligation_aux.contains(w)) {
      throw InvariantError("'" + w +
                           "' is listed as both permission and obligation "
                           "auxiliary");
    }
  }
  for (const auto& [pronoun, tag] : cfg.anaphora_map) {
    if (tag.size() < 3 || tag.front() != '<' || tag.back() != '>') {
      throw InvariantError("anaphora tag '" + tag + "' for '" + pronoun +
                           "' must be wrapped in angle brackets");
    }
  }
}

namespace {

using Json = nlohmann::json;

void ReadList(const Json& doc, const char* key, std::set<std::string>& dest) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  if (!it->is_array()) {
    throw FormatError(std::string("lexicon key '") + key +
                      "' must be an array of strings");
  }
  dest.clear();
  for (const Json& v : *it) {
    if (!v.is_string()) {
      throw FormatError(std::string("lexicon key '") + key +
                        "' must be an array of strings");
    }
    dest.insert(internal::Lower(internal::Trim(v.get<std::string>())));
  }
}

}  // namespace

LexiconConfig ParseLexicon(std::string_view json) {
  Json doc;
  try {
    doc = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid lexicon JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("lexicon must be a JSON object");
  if (doc.empty()) return LexiconConfig::RulesOnly();

  static const std::set<std::string> kKnown = {
      "permission_aux",        "obligation_aux",        "prohibition_markers",
      "obligation_predicates", "temporal_prepositions", "ambiguous_prepositions",
      "temporal_nouns",        "temporal_markers",      "condition_markers",
      "temporal_adverbs",      "irrelevant_adverbs",    "anaphora_map",
      "structural_heuristics"};
  for (const auto& item : doc.items()) {
    if (!kKnown.contains(item.key())) {
      throw FormatError("unknown lexicon key '" + item.key() + "'");
    }
  }

  LexiconConfig c = LexiconConfig::Defaults();
  ReadList(doc, "permission_aux", c.permission_aux);
  ReadList(doc, "obligation_aux", c.obligation_aux);
  ReadList(doc, "prohibition_markers", c.prohibition_markers);
  ReadList(doc, "obligation_predicates", c.obligation_predicates);
  ReadList(doc, "temporal_prepositions", c.temporal_prepositions);
  ReadList(doc, "ambiguous_prepositions", c.ambiguous_prepositions);
  ReadList(doc, "temporal_nouns", c.temporal_nouns);
  ReadList(doc, "temporal_markers", c.temporal_markers);
  ReadList(doc, "condition_markers", c.condition_markers);
  ReadList(doc, "temporal_adverbs", c.temporal_adverbs);
  ReadList(doc, "irrelevant_adverbs", c.irrelevant_adverbs);
  if (auto it = doc.find("anaphora_map"); it != doc.end()) {
    if (!it->is_object()) {
      throw FormatError("lexicon key 'anaphora_map' must be an object");
    }
    c.anaphora_map.clear();
    for (const auto& entry : it->items()) {
      if (!entry.value().is_string()) {
        throw FormatError("anaphora_map values must be strings");
      }
      c.anaphora_map[internal::Lower(entry.key())] =
          entry.value().get<std::string>();
    }
  }
  if (auto it = doc.find("structural_heuristics"); it != doc.end()) {
    if (!it->is_boolean()) {
      throw FormatError("lexicon key 'structural_heuristics' must be boolean");
    }
    c.structural_heuristics = it->get<bool>();
  }
  try {
    ValidateLexicon(c);
  } catch (const InvariantError& e) {
    throw FormatError(e.what());
  }
  return c;
}

}  // namespace clausekit
