// Copyright 2026 The steinerqc developers
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

#pragma once

#include <stdexcept>
#include <string>

namespace steinerqc {

/** Thrown when an operation requires an invertible matrix but rank < n. */
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Thrown when no legal routing exists under the given constraints. */
class RoutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Thrown when a synthesised circuit fails its soundness checks. */
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Syntax error in a QASM program or other text input, with position. */
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line(line),
        column(column) {}

  int line;
  int column;
};

}  // namespace steinerqc
