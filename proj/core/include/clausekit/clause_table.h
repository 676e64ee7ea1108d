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

// The extraction output model: one row per clause box, with CSV and JSON
// serializations. The same files serve as gold annotations.

#ifndef CLAUSEKIT_CLAUSE_TABLE_H_
#define CLAUSEKIT_CLAUSE_TABLE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "clausekit/error.h"

namespace clausekit {

// Deontic modality, declared in ascending precedence so that the stronger
// of two signals is std::max of them.
enum class Modality { kDeclaration, kPermission, kObligation, kProhibition };

// How a row attaches to the preceding row of the same sentence.
enum class Refinement { kNone, kAnd, kOr, kSeq };

// Which core field a phrase modifies.
enum class Anchor { kSubject, kVerb, kObject };

std::string_view ModalityCode(Modality m);  // "O", "P", "F", "D"
std::string_view RefinementCode(Refinement r);  // "NONE", "AND", ...
char AnchorCode(Anchor a);  // 'S', 'V', 'O'

// Parsers throw Error for unknown codes. An empty refinement code reads as
// NONE.
Modality ParseModality(std::string_view code);
Refinement ParseRefinement(std::string_view code);
Anchor ParseAnchor(std::string_view code);

struct AnnotatedPhrase {
  Anchor anchor = Anchor::kVerb;
  std::string text;

  bool operator==(const AnnotatedPhrase&) const = default;
};

// "V: in User's jurisdiction"
std::string FormatPhrase(const AnnotatedPhrase& p);

struct ClauseRow {
  std::string sent_id;
  Refinement refinement = Refinement::kNone;
  Modality modality = Modality::kDeclaration;
  std::string subject;
  std::string verb;
  std::string object;
  std::vector<AnnotatedPhrase> time;
  std::vector<AnnotatedPhrase> adverbials;
  std::vector<AnnotatedPhrase> conditions;
  std::vector<AnnotatedPhrase> notes;

  bool operator==(const ClauseRow&) const = default;
};

struct ClauseTable {
  std::string doc_id;
  std::vector<ClauseRow> rows;

  bool operator==(const ClauseTable&) const = default;
};

// A table that fails validation, with the 1-based data row at fault.
class TableFormatError : public FormatError {
 public:
  TableFormatError(std::size_t row, const std::string& message);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// Checks that each sentence's rows are contiguous, that only a sentence's
// first row has refinement NONE, and that annotated phrases are non-empty.
void ValidateTable(const ClauseTable& table);

enum class TableFormat { kCsv, kJson };

inline constexpr std::string_view kCsvHeader =
    "sent_id,refinement,modality,subject,verb,object,time,adverbials,"
    "conditions,notes";

// CSV: header row then one line per row; list fields hold '|'-joined
// "anchor: text" items with '|' and '\' backslash-escaped.
// JSON: an array with one object per row.
std::string Serialize(const ClauseTable& table, TableFormat format);

// Neither format carries the document id; the caller supplies it.
ClauseTable Deserialize(std::string_view bytes, TableFormat format,
                        std::string doc_id = "");

}  // namespace clausekit

#endif  // CLAUSEKIT_CLAUSE_TABLE_H_
