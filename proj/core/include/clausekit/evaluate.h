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

#ifndef CLAUSEKIT_EVALUATE_H_
#define CLAUSEKIT_EVALUATE_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clausekit/clause_table.h"

namespace clausekit {

// 2pr/(p+r), or 0 when p + r == 0.
double F1(double precision, double recall);

enum class ScoredField { kSubject, kVerb, kObject, kModality };

inline constexpr std::array<ScoredField, 4> kScoredFields = {
    ScoredField::kSubject, ScoredField::kVerb, ScoredField::kObject,
    ScoredField::kModality};

std::string_view FieldName(ScoredField f);  // "Subject", "Verb", ...

// Lower-cased, whitespace-collapsed value; "" for a blank field.
std::string ScoredValue(const ClauseRow& row, ScoredField f);

struct Counts {
  std::size_t matched = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;

  // An empty denominator scores 1 if the other side is empty too.
  double precision() const;
  double recall() const;
  double f1() const { return F1(precision(), recall()); }

  Counts& operator+=(const Counts& o);
  bool operator==(const Counts&) const = default;
};

struct Alignment {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (pred, gold)
  std::vector<std::size_t> unmatched_pred;
  std::vector<std::size_t> unmatched_gold;
};

// Greedy: repeatedly pair the unmatched rows agreeing on the most scored
// fields, lowest (pred, gold) index first on ties.
Alignment AlignRows(std::span<const ClauseRow> pred,
                    std::span<const ClauseRow> gold);

struct DocumentScore {
  std::string doc_id;
  Counts total;
  std::array<Counts, 4> per_field;
};

struct EvalReport {
  std::vector<DocumentScore> per_document;
  std::array<Counts, 4> per_field;  // indexed by ScoredField
  Counts aggregate;                 // micro-averaged over documents
};

// Throws FormatError if a sent_id appears in two separate runs of rows.
DocumentScore ScoreDocument(const ClauseTable& pred, const ClauseTable& gold);

EvalReport Score(const ClauseTable& pred, const ClauseTable& gold);

EvalReport Score(
    std::span<const std::pair<ClauseTable, ClauseTable>> pred_gold);

std::string ReportJson(const EvalReport& report);
std::string ReportText(const EvalReport& report);

}  // namespace clausekit

#endif  // CLAUSEKIT_EVALUATE_H_
