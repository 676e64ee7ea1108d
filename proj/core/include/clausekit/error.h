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

#ifndef CLAUSEKIT_ERROR_H_
#define CLAUSEKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace clausekit {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external input (CoNLL-U, clause tables, lexicon files).
class FormatError : public Error {
 public:
  using Error::Error;
};

// An in-memory value violates a structural invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace clausekit

#endif  // CLAUSEKIT_ERROR_H_
