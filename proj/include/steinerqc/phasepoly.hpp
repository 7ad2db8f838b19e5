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

#include <vector>

#include "steinerqc/architecture.hpp"
#include "steinerqc/circuit.hpp"
#include "steinerqc/gf2.hpp"

namespace steinerqc::phasepoly {

/** One phase term: the angle applied on inputs whose `parity` is odd. */
struct PhaseTerm {
  double angle = 0.0;       // radians, normalised into [0, 2*pi)
  gf2::BitVec parity;       // nonzero
  bool operator==(const PhaseTerm&) const = default;
};

/**
 * The (linear map, phase terms) pair representing a CNOT+Rz unitary: basis
 * state x maps to linear*x with phase sum_i angle_i * <parity_i, x>.
 * Normalised on construction: equal parities merged with angles summed mod
 * 2*pi, vanished terms dropped, term order by first appearance.
 */
class PhasePolynomial {
 public:
  PhasePolynomial(gf2::ParityMatrix linear, std::vector<PhaseTerm> terms);

  const gf2::ParityMatrix& linear() const { return linear_; }
  const std::vector<PhaseTerm>& terms() const { return terms_; }
  int size() const { return linear_.size(); }

 private:
  gf2::ParityMatrix linear_;
  std::vector<PhaseTerm> terms_;
};

/**
 * Reads a CNOT+Rz circuit into its phase polynomial by propagating parity
 * labels left to right: CNOT xors the control label into the target label,
 * and each Rz(a) contributes the term (a, current label of its wire).
 */
PhasePolynomial extract_phase_poly(const circuit::Circuit& c);

/**
 * Re-synthesises the phase polynomial as a CNOT+Rz circuit whose CNOTs all
 * lie on architecture edges. Terms are realised greedily (closest parity to
 * a current wire label first) by Steiner-constrained row operations that
 * steer the term's parity onto one wire, where the Rz is emitted; a final
 * constrained elimination fixes the linear map.
 */
circuit::Circuit synthesize_phase_poly(const PhasePolynomial& pp,
                                       const arch::Architecture& a);

}  // namespace steinerqc::phasepoly
