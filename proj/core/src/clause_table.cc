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

#include "clausekit/clause_table.h"

#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "text_util.h"

namespace clausekit {

using internal::Trim;

std::string_view ModalityCode(Modality m) {
  switch (m) {
    case Modality::kObligation: return "O";
    case Modality::kPermission: return "P";
    case Modality::kProhibition: return "F";
    case Modality::kDeclaration: return "D";
  }
  return "D";
}

std::string_view RefinementCode(Refinement r) {
  switch (r) {
    case Refinement::kNone: return "NONE";
    case Refinement::kAnd: return "AND";
    case Refinement::kOr: return "OR";
    case Refinement::kSeq: return "SEQ";
  }
  return "NONE";
}

char AnchorCode(Anchor a) {
  switch (a) {
    case Anchor::kSubject: return 'S';
    case Anchor::kVerb: return 'V';
    case Anchor::kObject: return 'O';
  }
  return 'V';
}

Modality ParseModality(std::string_view code) {
  code = Trim(code);
  if (code == "O") return Modality::kObligation;
  if (code == "P") return Modality::kPermission;
  if (code == "F") return Modality::kProhibition;
  if (code == "D") return Modality::kDeclaration;
  throw Error("unknown modality code '" + std::string(code) + "'");
}

Refinement ParseRefinement(std::string_view code) {
  code = Trim(code);
  if (code.empty() || code == "NONE") return Refinement::kNone;
  if (code == "AND") return Refinement::kAnd;
  if (code == "OR") return Refinement::kOr;
  if (code == "SEQ") return Refinement::kSeq;
  throw Error("unknown refinement code '" + std::string(code) + "'");
}

Anchor ParseAnchor(std::string_view code) {
  code = Trim(code);
  if (code == "S") return Anchor::kSubject;
  if (code == "V") return Anchor::kVerb;
  if (code == "O") return Anchor::kObject;
  throw Error("unknown anchor '" + std::string(code) + "'");
}

std::string FormatPhrase(const AnnotatedPhrase& p) {
  return std::string(1, AnchorCode(p.anchor)) + ": " + p.text;
}

TableFormatError::TableFormatError(std::size_t row, const std::string& message)
    : FormatError("row " + std::to_string(row) + ": " + message), row_(row) {}

void ValidateTable(const ClauseTable& table) {
  std::set<std::string> finished;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const ClauseRow& row = table.rows[i];
    const std::size_t n = i + 1;
    if (row.sent_id.empty()) throw TableFormatError(n, "empty sent_id");
    bool starts_group = i == 0 || table.rows[i - 1].sent_id != row.sent_id;
    if (starts_group) {
      if (i > 0) finished.insert(table.rows[i - 1].sent_id);
      if (finished.contains(row.sent_id)) {
        throw TableFormatError(n, "rows of sentence '" + row.sent_id +
                                      "' are not contiguous");
      }
      if (row.refinement != Refinement::kNone) {
        throw TableFormatError(
            n, "dangling refinement " +
                   std::string(RefinementCode(row.refinement)) +
                   ": no preceding row of sentence '" + row.sent_id + "'");
      }
    } else if (row.refinement == Refinement::kNone) {
      throw TableFormatError(n, "only the first row of sentence '" +
                                    row.sent_id + "' may have refinement NONE");
    }
    for (const auto* list :
         {&row.time, &row.adverbials, &row.conditions, &row.notes}) {
      for (const AnnotatedPhrase& p : *list) {
        if (Trim(p.text).empty()) {
          throw TableFormatError(n, "annotated phrase with empty text");
        }
      }
    }
  }
}

namespace {

// ---- CSV ----------------------------------------------------------------

std::string QuoteCsv(std::string_view field) {
  bool needs = field.find_first_of(",\"\r\n") != std::string_view::npos ||
               (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string EscapeItem(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string JoinPhrases(const std::vector<AnnotatedPhrase>& phrases) {
  std::string out;
  for (const AnnotatedPhrase& p : phrases) {
    if (!out.empty()) out.push_back('|');
    out += EscapeItem(FormatPhrase(p));
  }
  return out;
}

struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

std::vector<CsvRecord> ReadCsv(std::string_view in) {
  std::vector<CsvRecord> records;
  CsvRecord cur;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  cur.line = 1;

  auto end_field = [&] {
    cur.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    bool blank = cur.fields.size() == 1 && cur.fields[0].empty();
    if (!blank) records.push_back(std::move(cur));
    cur = CsvRecord{};
    cur.line = line;
  };

  for (std::size_t i = 0; i < in.size(); ++i) {
    char c = in[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < in.size() && in[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started && field.empty()) {
          in_quotes = true;
          field_started = true;
        } else {
          field.push_back(c);
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        field_started = true;
        field.push_back(c);
    }
  }
  if (in_quotes) throw TableFormatError(records.size(), "unterminated quote");
  if (!field.empty() || !cur.fields.empty()) end_record();
  return records;
}

std::vector<AnnotatedPhrase> ParsePhrases(std::string_view cell,
                                          std::size_t row) {
  std::vector<AnnotatedPhrase> out;
  if (Trim(cell).empty()) return out;
  std::vector<std::string> items(1);
  for (std::size_t i = 0; i < cell.size(); ++i) {
    char c = cell[i];
    if (c == '\\' && i + 1 < cell.size()) {
      items.back().push_back(cell[++i]);
    } else if (c == '|') {
      items.emplace_back();
    } else {
      items.back().push_back(c);
    }
  }
  for (const std::string& raw : items) {
    std::string_view item = Trim(raw);
    if (item.size() < 2 || item[1] != ':') {
      throw TableFormatError(row, "malformed annotated phrase '" +
                                      std::string(item) +
                                      "' (expected 'S|V|O: text')");
    }
    AnnotatedPhrase p;
    try {
      p.anchor = ParseAnchor(item.substr(0, 1));
    } catch (const Error& e) {
      throw TableFormatError(row, e.what());
    }
    p.text = std::string(Trim(item.substr(2)));
    if (p.text.empty()) throw TableFormatError(row, "annotated phrase is empty");
    out.push_back(std::move(p));
  }
  return out;
}

std::string SerializeCsv(const ClauseTable& table) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const ClauseRow& r : table.rows) {
    out << QuoteCsv(r.sent_id) << ',' << RefinementCode(r.refinement) << ','
        << ModalityCode(r.modality) << ',' << QuoteCsv(r.subject) << ','
        << QuoteCsv(r.verb) << ',' << QuoteCsv(r.object) << ','
        << QuoteCsv(JoinPhrases(r.time)) << ','
        << QuoteCsv(JoinPhrases(r.adverbials)) << ','
        << QuoteCsv(JoinPhrases(r.conditions)) << ','
        << QuoteCsv(JoinPhrases(r.notes)) << "\n";
  }
  return out.str();
}

ClauseTable DeserializeCsv(std::string_view bytes, std::string doc_id) {
  ClauseTable table;
  table.doc_id = std::move(doc_id);
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  std::vector<CsvRecord> records = ReadCsv(bytes);
  if (records.empty()) return table;

  std::string header;
  for (std::size_t i = 0; i < records[0].fields.size(); ++i) {
    if (i) header.push_back(',');
    header += Trim(records[0].fields[i]);
  }
  if (header != kCsvHeader) {
    throw TableFormatError(0, "header mismatch: expected '" +
                                  std::string(kCsvHeader) + "', found '" +
                                  header + "'");
  }
  for (std::size_t i = 1; i < records.size(); ++i) {
    const std::vector<std::string>& f = records[i].fields;
    const std::size_t row = i;
    if (f.size() != 10) {
      throw TableFormatError(row, "expected 10 fields, found " +
                                      std::to_string(f.size()));
    }
    ClauseRow r;
    r.sent_id = std::string(Trim(f[0]));
    try {
      r.refinement = ParseRefinement(f[1]);
      r.modality = ParseModality(f[2]);
    } catch (const TableFormatError&) {
      throw;
    } catch (const Error& e) {
      throw TableFormatError(row, e.what());
    }
    r.subject = std::string(Trim(f[3]));
    r.verb = std::string(Trim(f[4]));
    r.object = std::string(Trim(f[5]));
    r.time = ParsePhrases(f[6], row);
    r.adverbials = ParsePhrases(f[7], row);
    r.conditions = ParsePhrases(f[8], row);
    r.notes = ParsePhrases(f[9], row);
    table.rows.push_back(std::move(r));
  }
  ValidateTable(table);
  return table;
}

// ---- JSON ---------------------------------------------------------------

using Json = nlohmann::ordered_json;

Json PhrasesToJson(const std::vector<AnnotatedPhrase>& phrases) {
  Json arr = Json::array();
  for (const AnnotatedPhrase& p : phrases) {
    arr.push_back({{"anchor", std::string(1, AnchorCode(p.anchor))},
                   {"text", p.text}});
  }
  return arr;
}

std::string SerializeJson(const ClauseTable& table) {
  Json rows = Json::array();
  for (const ClauseRow& r : table.rows) {
    rows.push_back({
        {"sent_id", r.sent_id},
        {"refinement", RefinementCode(r.refinement)},
        {"modality", ModalityCode(r.modality)},
        {"subject", r.subject},
        {"verb", r.verb},
        {"object", r.object},
        {"time", PhrasesToJson(r.time)},
        {"adverbials", PhrasesToJson(r.adverbials)},
        {"conditions", PhrasesToJson(r.conditions)},
        {"notes", PhrasesToJson(r.notes)},
    });
  }
  return rows.dump(2) + "\n";
}

std::string RequireString(const Json& obj, const char* key, std::size_t row) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw TableFormatError(row, std::string("missing key '") + key + "'");
  }
  if (!it->is_string()) {
    throw TableFormatError(row, std::string("key '") + key +
                                    "' is not a string");
  }
  return it->get<std::string>();
}

std::vector<AnnotatedPhrase> PhrasesFromJson(const Json& obj, const char* key,
                                             std::size_t row) {
  std::vector<AnnotatedPhrase> out;
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw TableFormatError(row, std::string("key '") + key +
                                    "' is not an array");
  }
  for (const Json& item : *it) {
    if (!item.is_object()) {
      throw TableFormatError(row, std::string("entry of '") + key +
                                      "' is not an object");
    }
    AnnotatedPhrase p;
    try {
      p.anchor = ParseAnchor(RequireString(item, "anchor", row));
    } catch (const TableFormatError&) {
      throw;
    } catch (const Error& e) {
      throw TableFormatError(row, e.what());
    }
    p.text = std::string(Trim(RequireString(item, "text", row)));
    if (p.text.empty()) throw TableFormatError(row, "annotated phrase is empty");
    out.push_back(std::move(p));
  }
  return out;
}

ClauseTable DeserializeJson(std::string_view bytes, std::string doc_id) {
  ClauseTable table;
  table.doc_id = std::move(doc_id);
  Json doc;
  try {
    doc = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw TableFormatError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw TableFormatError(0, "expected a JSON array");
  std::size_t row = 0;
  for (const Json& obj : doc) {
    ++row;
    if (!obj.is_object()) throw TableFormatError(row, "row is not an object");
    ClauseRow r;
    r.sent_id = std::string(Trim(RequireString(obj, "sent_id", row)));
    try {
      r.refinement = ParseRefinement(RequireString(obj, "refinement", row));
      r.modality = ParseModality(RequireString(obj, "modality", row));
    } catch (const TableFormatError&) {
      throw;
    } catch (const Error& e) {
      throw TableFormatError(row, e.what());
    }
    r.subject = std::string(Trim(RequireString(obj, "subject", row)));
    r.verb = std::string(Trim(RequireString(obj, "verb", row)));
    r.object = std::string(Trim(RequireString(obj, "object", row)));
    r.time = PhrasesFromJson(obj, "time", row);
    r.adverbials = PhrasesFromJson(obj, "adverbials", row);
    r.conditions = PhrasesFromJson(obj, "conditions", row);
    r.notes = PhrasesFromJson(obj, "notes", row);
    table.rows.push_back(std::move(r));
  }
  ValidateTable(table);
  return table;
}

}  // namespace

std::string Serialize(const ClauseTable& table, TableFormat format) {
  return format == TableFormat::kCsv ? SerializeCsv(table)
                                     : SerializeJson(table);
}

ClauseTable Deserialize(std::string_view bytes, TableFormat format,
                        std::string doc_id) {
  return format == TableFormat::kCsv ? DeserializeCsv(bytes, std::move(doc_id))
                                     : DeserializeJson(bytes, std::move(doc_id));
}

}  // namespace clausekit
