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

#ifndef CLAUSEKIT_TOOLS_CLI_H_
#define CLAUSEKIT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace clausekit::cli {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kInternal = 3,
};

// Runs the command line `args` (args[0] is the program name). Results go to
// `out` unless --out is given; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace clausekit::cli

#endif  // CLAUSEKIT_TOOLS_CLI_H_
