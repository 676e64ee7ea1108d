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

#include "clausekit/codiagram.h"

#include <utility>

#include "json.hpp"

namespace clausekit {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> Texts(const std::vector<AnnotatedPhrase>& phrases) {
  std::vector<std::string> out;
  for (const AnnotatedPhrase& p : phrases) out.push_back(p.text);
  return out;
}

CoBox MakeBox(const ClauseRow& row, std::string id) {
  CoBox box;
  box.id = std::move(id);
  box.modality = row.modality;
  box.agent = row.subject;
  box.action_verb = row.verb;
  box.action_object = row.object;
  box.time_guards = Texts(row.time);
  box.conditions = Texts(row.conditions);
  for (const AnnotatedPhrase& p : row.notes) {
    box.annotations.push_back(FormatPhrase(p));
  }
  for (const AnnotatedPhrase& p : row.adverbials) {
    box.annotations.push_back(FormatPhrase(p));
  }
  return box;
}

Json ToJson(const CoNode& node) {
  if (const CoBox* box = std::get_if<CoBox>(&node)) {
    Json j;
    j["kind"] = "box";
    j["id"] = box->id;
    j["modality"] = ModalityCode(box->modality);
    j["agent"] = box->agent;
    j["action_verb"] = box->action_verb;
    j["action_object"] = box->action_object;
    j["time_guards"] = box->time_guards;
    j["conditions"] = box->conditions;
    j["annotations"] = box->annotations;
    return j;
  }
  const CoRefinement& ref = *std::get<std::unique_ptr<CoRefinement>>(node);
  Json j;
  j["kind"] = "refinement";
  j["operator"] = RefinementCode(ref.op);
  Json children = Json::array();
  for (const CoNode& c : ref.children) children.push_back(ToJson(c));
  j["children"] = std::move(children);
  return j;
}

}  // namespace

CoModel BuildModel(const ClauseTable& table) {
  try {
    ValidateTable(table);
  } catch (const TableFormatError& e) {
    throw InvariantError(e.what());
  }
  CoModel model;
  model.doc_id = table.doc_id;
  std::size_t sentence = 0;
  std::size_t row_in_sentence = 0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const ClauseRow& row = table.rows[i];
    bool starts = i == 0 || row.sent_id != table.rows[i - 1].sent_id;
    if (starts) {
      ++sentence;
      row_in_sentence = 0;
    }
    ++row_in_sentence;
    std::string id = table.doc_id + "/s" + std::to_string(sentence) + "/r" +
                     std::to_string(row_in_sentence);
    CoBox box = MakeBox(row, std::move(id));
    if (starts) {
      model.roots.emplace_back(std::move(box));
      continue;
    }
    CoNode& current = model.roots.back();
    auto* ref = std::get_if<std::unique_ptr<CoRefinement>>(&current);
    if (ref && (*ref)->op == row.refinement) {
      (*ref)->children.emplace_back(std::move(box));
      continue;
    }
    auto wrapped = std::make_unique<CoRefinement>();
    wrapped->op = row.refinement;
    wrapped->children.push_back(std::move(current));
    wrapped->children.emplace_back(std::move(box));
    current = std::move(wrapped);
  }
  return model;
}

std::string ExportModel(const CoModel& model) {
  Json j;
  j["doc_id"] = model.doc_id;
  Json roots = Json::array();
  for (const CoNode& n : model.roots) roots.push_back(ToJson(n));
  j["roots"] = std::move(roots);
  return j.dump(2) + "\n";
}

std::size_t LeafCount(const CoNode& node) {
  if (std::holds_alternative<CoBox>(node)) return 1;
  std::size_t n = 0;
  for (const CoNode& c : std::get<std::unique_ptr<CoRefinement>>(node)->children) {
    n += LeafCount(c);
  }
  return n;
}

std::size_t LeafCount(const CoModel& model) {
  std::size_t n = 0;
  for (const CoNode& r : model.roots) n += LeafCount(r);
  return n;
}

}  // namespace clausekit
