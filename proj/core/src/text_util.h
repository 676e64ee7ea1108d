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

#ifndef CLAUSEKIT_SRC_TEXT_UTIL_H_
#define CLAUSEKIT_SRC_TEXT_UTIL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clausekit::internal {

std::string Lower(std::string_view s);
std::string_view Trim(std::string_view s);
std::vector<std::string_view> Split(std::string_view s, char sep);

// Trims and collapses internal whitespace runs to single spaces.
std::string CollapseWhitespace(std::string_view s);

// Joins word forms with single spaces, attaching closing punctuation and
// clitics ("'s", "n't") to the preceding word and opening brackets to the
// following one.
std::string JoinWords(const std::vector<std::string>& words);

std::optional<int> ParseInt(std::string_view s);

}  // namespace clausekit::internal

#endif  // CLAUSEKIT_SRC_TEXT_UTIL_H_
