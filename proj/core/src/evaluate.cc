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

#include "clausekit/evaluate.h"

#include <cstdio>
#include <map>
#include <set>

#include "json.hpp"
#include "text_util.h"

namespace clausekit {

namespace {

double Ratio(std::size_t num, std::size_t den, std::size_t other) {
  if (den == 0) return other == 0 ? 1.0 : 0.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

struct Group {
  std::string sent_id;
  std::vector<ClauseRow> rows;
};

std::vector<Group> GroupRows(const ClauseTable& table, std::string_view side) {
  std::vector<Group> groups;
  std::set<std::string> seen;
  for (const ClauseRow& row : table.rows) {
    if (!groups.empty() && groups.back().sent_id == row.sent_id) {
      groups.back().rows.push_back(row);
      continue;
    }
    if (!seen.insert(row.sent_id).second) {
      throw FormatError(std::string(side) + " table '" + table.doc_id +
                        "': sentence " + row.sent_id +
                        " appears in two separate runs of rows");
    }
    groups.push_back({row.sent_id, {row}});
  }
  return groups;
}

int Agreement(const ClauseRow& a, const ClauseRow& b) {
  int n = 0;
  for (ScoredField f : kScoredFields) {
    std::string va = ScoredValue(a, f);
    if (!va.empty() && va == ScoredValue(b, f)) ++n;
  }
  return n;
}

void CountRow(const ClauseRow& row, bool predicted,
              std::array<Counts, 4>& per_field) {
  for (ScoredField f : kScoredFields) {
    if (ScoredValue(row, f).empty()) continue;
    Counts& c = per_field[static_cast<int>(f)];
    (predicted ? c.predicted : c.gold)++;
  }
}

Counts Sum(const std::array<Counts, 4>& per_field) {
  Counts total;
  for (const Counts& c : per_field) total += c;
  return total;
}

nlohmann::ordered_json ToJson(const Counts& c) {
  nlohmann::ordered_json j;
  j["precision"] = c.precision();
  j["recall"] = c.recall();
  j["f1"] = c.f1();
  j["matched_fields"] = c.matched;
  j["predicted_fields"] = c.predicted;
  j["gold_fields"] = c.gold;
  return j;
}

std::string Line(std::string_view name, const Counts& c) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-24.24s %6.2f %6.2f %6.2f %6zu %6zu %6zu\n",
                std::string(name).c_str(), c.precision(), c.recall(), c.f1(),
                c.matched, c.predicted, c.gold);
  return buf;
}

}  // namespace

double F1(double precision, double recall) {
  if (precision + recall <= 0) return 0;
  return 2 * precision * recall / (precision + recall);
}

std::string_view FieldName(ScoredField f) {
  switch (f) {
    case ScoredField::kSubject: return "Subject";
    case ScoredField::kVerb: return "Verb";
    case ScoredField::kObject: return "Object";
    case ScoredField::kModality: return "Modality";
  }
  return "";
}

std::string ScoredValue(const ClauseRow& row, ScoredField f) {
  switch (f) {
    case ScoredField::kSubject:
      return internal::Lower(internal::CollapseWhitespace(row.subject));
    case ScoredField::kVerb:
      return internal::Lower(internal::CollapseWhitespace(row.verb));
    case ScoredField::kObject:
      return internal::Lower(internal::CollapseWhitespace(row.object));
    case ScoredField::kModality:
      return std::string(ModalityCode(row.modality));
  }
  return "";
}

double Counts::precision() const { return Ratio(matched, predicted, gold); }
double Counts::recall() const { return Ratio(matched, gold, predicted); }

Counts& Counts::operator+=(const Counts& o) {
  matched += o.matched;
  predicted += o.predicted;
  gold += o.gold;
  return *this;
}

Alignment AlignRows(std::span<const ClauseRow> pred,
                    std::span<const ClauseRow> gold) {
  Alignment out;
  std::vector<bool> pred_used(pred.size()), gold_used(gold.size());
  const std::size_t n = std::min(pred.size(), gold.size());
  for (std::size_t k = 0; k < n; ++k) {
    int best = -1;
    std::size_t bp = 0, bg = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
      if (pred_used[i]) continue;
      for (std::size_t j = 0; j < gold.size(); ++j) {
        if (gold_used[j]) continue;
        int s = Agreement(pred[i], gold[j]);
        if (s > best) {
          best = s;
          bp = i;
          bg = j;
        }
      }
    }
    pred_used[bp] = gold_used[bg] = true;
    out.pairs.emplace_back(bp, bg);
  }
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (!pred_used[i]) out.unmatched_pred.push_back(i);
  }
  for (std::size_t j = 0; j < gold.size(); ++j) {
    if (!gold_used[j]) out.unmatched_gold.push_back(j);
  }
  return out;
}

DocumentScore ScoreDocument(const ClauseTable& pred, const ClauseTable& gold) {
  DocumentScore doc;
  doc.doc_id = gold.doc_id.empty() ? pred.doc_id : gold.doc_id;
  std::vector<Group> pred_groups = GroupRows(pred, "predicted");
  std::vector<Group> gold_groups = GroupRows(gold, "gold");
  std::map<std::string, const Group*> gold_by_id;
  for (const Group& g : gold_groups) gold_by_id[g.sent_id] = &g;

  for (const Group& g : gold_groups) {
    for (const ClauseRow& row : g.rows) CountRow(row, false, doc.per_field);
  }
  for (const Group& p : pred_groups) {
    for (const ClauseRow& row : p.rows) CountRow(row, true, doc.per_field);
    auto it = gold_by_id.find(p.sent_id);
    if (it == gold_by_id.end()) continue;
    const std::vector<ClauseRow>& gold_rows = it->second->rows;
    for (auto [i, j] : AlignRows(p.rows, gold_rows).pairs) {
      for (ScoredField f : kScoredFields) {
        std::string v = ScoredValue(p.rows[i], f);
        if (!v.empty() && v == ScoredValue(gold_rows[j], f)) {
          doc.per_field[static_cast<int>(f)].matched++;
        }
      }
    }
  }
  doc.total = Sum(doc.per_field);
  return doc;
}

EvalReport Score(const ClauseTable& pred, const ClauseTable& gold) {
  std::pair<ClauseTable, ClauseTable> one{pred, gold};
  return Score(std::span(&one, 1));
}

EvalReport Score(
    std::span<const std::pair<ClauseTable, ClauseTable>> pred_gold) {
  EvalReport report;
  for (const auto& [pred, gold] : pred_gold) {
    DocumentScore doc = ScoreDocument(pred, gold);
    for (std::size_t f = 0; f < report.per_field.size(); ++f) {
      report.per_field[f] += doc.per_field[f];
    }
    report.aggregate += doc.total;
    report.per_document.push_back(std::move(doc));
  }
  return report;
}

std::string ReportJson(const EvalReport& report) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json docs = nlohmann::ordered_json::array();
  for (const DocumentScore& d : report.per_document) {
    nlohmann::ordered_json dj;
    dj["doc_id"] = d.doc_id;
    dj.update(ToJson(d.total));
    docs.push_back(std::move(dj));
  }
  j["per_document"] = std::move(docs);
  nlohmann::ordered_json fields;
  for (ScoredField f : kScoredFields) {
    fields[std::string(FieldName(f))] =
        ToJson(report.per_field[static_cast<int>(f)]);
  }
  j["per_field"] = std::move(fields);
  j["aggregate"] = ToJson(report.aggregate);
  return j.dump(2) + "\n";
}

std::string ReportText(const EvalReport& report) {
  char header[160];
  std::snprintf(header, sizeof header, "%-24s %6s %6s %6s %6s %6s %6s\n",
                "document", "P", "R", "F1", "match", "pred", "gold");
  std::string out = header;
  for (const DocumentScore& d : report.per_document) out += Line(d.doc_id, d.total);
  out += "\nfield\n";
  for (ScoredField f : kScoredFields) {
    out += Line(FieldName(f), report.per_field[static_cast<int>(f)]);
  }
  out += "\n" + Line("aggregate", report.aggregate);
  return out;
}

}  // namespace clausekit
