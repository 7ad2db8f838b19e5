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

#include <cstdint>
#include <utility>
#include <vector>

#include "steinerqc/architecture.hpp"
#include "steinerqc/gf2.hpp"

namespace steinerqc::circuit {

struct Gate {
  enum class Kind { Cnot, Rz, H };

  Kind kind = Kind::Cnot;
  int control = -1;  // Cnot only
  int target = -1;   // Cnot target, or the wire for Rz / H
  double angle = 0.0;  // Rz only, radians

  static Gate cnot(int control, int target) {
    return {Kind::Cnot, control, target, 0.0};
  }
  static Gate rz(double angle, int qubit) { return {Kind::Rz, -1, qubit, angle}; }
  static Gate h(int qubit) { return {Kind::H, -1, qubit, 0.0}; }

  bool operator==(const Gate&) const = default;
};

/** Ordered gate list over n wires; the compiler's input/output IR. */
struct Circuit {
  int n = 0;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
  void validate() const;  // throws std::invalid_argument
};

/**
 * Parity map of a CNOT-only circuit: fold row tgt ^= row ctrl over the gates,
 * starting from the identity. Throws std::invalid_argument on other gates.
 */
gf2::ParityMatrix from_circuit(const Circuit& c);

/**
 * Classical basis-state propagation with phase tracking: CNOT xors the
 * control bit into the target, Rz(a) on a wire holding 1 adds a to the
 * phase. Returns final bits and the phase reduced mod 2*pi. H is rejected.
 */
std::pair<gf2::BitVec, double> simulate(const Circuit& c, const gf2::BitVec& x);

/** Deterministic random CNOT circuit; pairs uniform over ordered pairs. */
Circuit random_cnot_circuit(int n, int count, std::uint64_t seed);

int count_cnots(const Circuit& c);

/** True iff every CNOT acts along an edge of the architecture. */
bool is_mapped(const Circuit& c, const arch::Architecture& a);

}  // namespace steinerqc::circuit
