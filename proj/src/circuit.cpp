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

#include "steinerqc/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "steinerqc/rng.hpp"

namespace steinerqc::circuit {

void Circuit::validate() const {
  if (n < 0) throw std::invalid_argument("negative wire count");
  for (const Gate& g : gates) {
    switch (g.kind) {
      case Gate::Kind::Cnot:
        if (g.control < 0 || g.control >= n || g.target < 0 || g.target >= n)
          throw std::invalid_argument("gate wire out of range");
        if (g.control == g.target)
          throw std::invalid_argument("CNOT control equals target");
        break;
      case Gate::Kind::Rz:
        if (g.target < 0 || g.target >= n)
          throw std::invalid_argument("gate wire out of range");
        if (!std::isfinite(g.angle))
          throw std::invalid_argument("Rz angle must be finite");
        break;
      case Gate::Kind::H:
        if (g.target < 0 || g.target >= n)
          throw std::invalid_argument("gate wire out of range");
        break;
    }
  }
}

gf2::ParityMatrix from_circuit(const Circuit& c) {
  gf2::ParityMatrix m = gf2::ParityMatrix::identity(c.n);
  for (const Gate& g : c.gates) {
    if (g.kind != Gate::Kind::Cnot)
      throw std::invalid_argument("from_circuit requires a CNOT-only circuit");
    m.apply({g.control, g.target});
  }
  return m;
}

std::pair<gf2::BitVec, double> simulate(const Circuit& c, const gf2::BitVec& x) {
  if (x.size() != c.n) throw std::invalid_argument("basis state size mismatch");
  gf2::BitVec bits = x;
  double phase = 0.0;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::Cnot:
        if (bits.get(g.control)) bits.set(g.target, !bits.get(g.target));
        break;
      case Gate::Kind::Rz:
        if (bits.get(g.target)) phase += g.angle;
        break;
      case Gate::Kind::H:
        throw std::invalid_argument("H is not classically simulable here");
    }
  }
  phase = std::fmod(phase, 2 * std::numbers::pi);
  if (phase < 0) phase += 2 * std::numbers::pi;
  return {bits, phase};
}

Circuit random_cnot_circuit(int n, int count, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("negative gate count");
  if (n < 2 && count > 0)
    throw std::invalid_argument("need at least two wires for CNOT gates");
  Circuit c{n, {}};
  c.gates.reserve(count);
  rng::SplitMix64 g(rng::derive_seed(seed, "random-cnot-circuit", 0));
  for (int i = 0; i < count; ++i) {
    const int control = static_cast<int>(g.below(n));
    int target = static_cast<int>(g.below(n - 1));
    if (target >= control) ++target;
    c.gates.push_back(Gate::cnot(control, target));
  }
  return c;
}

int count_cnots(const Circuit& c) {
  int k = 0;
  for (const Gate& g : c.gates)
    if (g.kind == Gate::Kind::Cnot) ++k;
  return k;
}

bool is_mapped(const Circuit& c, const arch::Architecture& a) {
  if (c.n > a.size()) return false;
  for (const Gate& g : c.gates)
    if (g.kind == Gate::Kind::Cnot && !a.has_edge(g.control, g.target))
      return false;
  return true;
}

}  // namespace steinerqc::circuit
