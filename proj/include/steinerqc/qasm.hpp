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

#include <string>
#include <string_view>

#include "steinerqc/circuit.hpp"

namespace steinerqc::circuit {

/**
 * OPENQASM 2.0 subset reader: one qreg, gates cx / rz(expr) / h, optional
 * qelib1 include and // comments. Angle expressions are decimal literals and
 * pi multiples such as pi/4 or 3*pi/2. creg, measure and everything else is
 * rejected with a ParseError carrying line and column.
 */
Circuit parse_qasm(std::string_view text);

/**
 * Canonical emitter: header, include line, single qreg named q, one gate per
 * line, lowercase names, comma-separated operands, angles with 17 significant
 * digits. parse_qasm(emit_qasm(c)) == c exactly.
 */
std::string emit_qasm(const Circuit& c);

}  // namespace steinerqc::circuit
