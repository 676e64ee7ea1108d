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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "clausekit/clause_table.h"
#include "clausekit/codiagram.h"
#include "clausekit/depgraph.h"
#include "clausekit/error.h"
#include "clausekit/evaluate.h"
#include "clausekit/label_profile.h"
#include "clausekit/lexicon.h"
#include "clausekit/rules.h"

namespace clausekit::cli {

namespace {

namespace fs = std::filesystem;

// Bad command-line combination detected after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Unreadable or unwritable file.
class IoError : public Error {
 public:
  using Error::Error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path + ": read failed");
  return buf.str();
}

void Emit(const std::string& bytes, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << bytes;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError(out_path + ": cannot open for writing");
  f << bytes;
  f.close();
  if (!f) throw IoError(out_path + ": write failed");
}

TableFormat FormatOf(const std::string& path) {
  return fs::path(path).extension() == ".json" ? TableFormat::kJson
                                               : TableFormat::kCsv;
}

ClauseTable ReadTable(const std::string& path) {
  std::string bytes = ReadFile(path);
  try {
    return Deserialize(bytes, FormatOf(path), fs::path(path).stem().string());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

struct ExtractArgs {
  std::vector<std::string> inputs;
  std::string lexicon;
  std::string profile = "stanford-classic";
  bool rules_only = false;
  std::string format = "csv";
  std::string style = "tagged";
  std::string out;
};

int Extract(const ExtractArgs& a, std::ostream& out) {
  if (a.rules_only && !a.lexicon.empty()) {
    throw UsageError("--rules-only and --lexicon are mutually exclusive");
  }
  LexiconConfig cfg = LexiconConfig::Defaults();
  if (a.rules_only) {
    cfg = LexiconConfig::RulesOnly();
  } else if (!a.lexicon.empty()) {
    try {
      cfg = ParseLexicon(ReadFile(a.lexicon));
    } catch (const FormatError& e) {
      throw FormatError(a.lexicon + ": " + e.what());
    }
  }
  const LabelProfile& profile = LabelProfile::ByName(a.profile);
  ExtractOptions opts;
  opts.anaphora_style =
      a.style == "display" ? AnaphoraStyle::kDisplay : AnaphoraStyle::kTagged;

  std::vector<DependencyGraph> graphs;
  std::set<std::string> ids;
  int ordinal = 1;
  for (const std::string& path : a.inputs) {
    std::vector<DependencyGraph> parsed =
        ParseConllu(ReadFile(path), path, ordinal);
    ordinal += static_cast<int>(parsed.size());
    for (DependencyGraph& g : parsed) {
      if (!ids.insert(g.sent_id()).second) {
        throw FormatError(path + ": duplicate sentence id " + g.sent_id());
      }
      graphs.push_back(std::move(g));
    }
  }
  ClauseTable table =
      ExtractDocument(fs::path(a.inputs.front()).stem().string(), graphs, cfg,
                      profile, opts);
  Emit(Serialize(table, a.format == "json" ? TableFormat::kJson
                                           : TableFormat::kCsv),
       a.out, out);
  return kOk;
}

struct EvalArgs {
  std::vector<std::string> files;
  std::string out;
};

int Eval(const EvalArgs& a, std::ostream& out) {
  if (a.files.size() % 2 != 0) {
    throw UsageError("eval expects PRED GOLD pairs");
  }
  std::vector<std::pair<ClauseTable, ClauseTable>> pairs;
  for (std::size_t i = 0; i < a.files.size(); i += 2) {
    ClauseTable pred = ReadTable(a.files[i]);
    ClauseTable gold = ReadTable(a.files[i + 1]);
    // Predictions and gold for unrelated documents share no sentence.
    std::set<std::string> gold_ids;
    for (const ClauseRow& r : gold.rows) gold_ids.insert(r.sent_id);
    bool shared = false;
    for (const ClauseRow& r : pred.rows) shared |= gold_ids.count(r.sent_id) > 0;
    if (!shared && !pred.rows.empty() && !gold.rows.empty()) {
      throw FormatError(a.files[i] + " and " + a.files[i + 1] +
                        " have no sentence id in common");
    }
    pred.doc_id = gold.doc_id;
    pairs.emplace_back(std::move(pred), std::move(gold));
  }
  EvalReport report = Score(pairs);
  out << ReportText(report);
  if (!a.out.empty()) Emit(ReportJson(report), a.out, out);
  return kOk;
}

struct ExportArgs {
  std::string table;
  std::string out;
};

int Export(const ExportArgs& a, std::ostream& out) {
  CoModel model = BuildModel(ReadTable(a.table));
  Emit(ExportModel(model), a.out, out);
  return kOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Extract deontic clauses from dependency parses", "clausekit"};
  app.require_subcommand(1);

  ExtractArgs ea;
  CLI::App* extract = app.add_subcommand(
      "extract", "CoNLL-U sentences to a clause table");
  extract->add_option("input", ea.inputs, "CoNLL-U files, one document")
      ->required();
  extract->add_option("--lexicon", ea.lexicon, "Lexicon JSON");
  extract->add_option("--profile", ea.profile, "Dependency label scheme")
      ->check(CLI::IsMember({"stanford-classic", "ud"}));
  extract->add_flag("--rules-only", ea.rules_only,
                    "Disable all lexicon heuristics");
  extract->add_option("--format", ea.format)
      ->check(CLI::IsMember({"csv", "json"}));
  extract->add_option("--style", ea.style, "Pronoun rendering")
      ->check(CLI::IsMember({"tagged", "display"}));
  extract->add_option("--out", ea.out);

  EvalArgs va;
  CLI::App* eval = app.add_subcommand("eval", "Score predictions against gold");
  eval->add_option("files", va.files, "PRED GOLD [PRED GOLD ...]")->required();
  eval->add_option("--out", va.out, "JSON report path");

  ExportArgs xa;
  CLI::App* exp = app.add_subcommand("export", "Clause table to C-O model JSON");
  exp->add_option("table", xa.table)->required();
  exp->add_option("--out", xa.out);

  std::vector<const char*> argv;
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*extract) return Extract(ea, out);
    if (*eval) return Eval(va, out);
    return Export(xa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace clausekit::cli
