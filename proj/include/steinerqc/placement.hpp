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
#include <functional>
#include <vector>

#include "steinerqc/architecture.hpp"
#include "steinerqc/gf2.hpp"

namespace steinerqc::placement {

/** Bijection logical qubit -> physical vertex. */
struct Placement {
  std::vector<int> perm;

  static Placement identity(int n);
  bool is_valid() const;
  Placement inverted() const;
};

/**
 * Genetic-search hyperparameters. Start from defaults_for(n) and override
 * fields as needed; population must be >= 2 and iterations >= 0.
 */
struct GAParams {
  int population = 30;
  int iterations = 15;
  double crossover_prob = 0.8;
  double mutation_prob = 0.2;
  std::uint64_t seed = 0;

  /** 9 qubits -> 30/15, 16 -> 50/100, larger -> 100/100. */
  static GAParams defaults_for(int n);
};

/** Simultaneous row and column permutation: out[pl(i)][pl(j)] = p[i][j]. */
gf2::ParityMatrix apply_placement(const gf2::ParityMatrix& p, const Placement& pl);

struct PlacementResult {
  Placement placement;
  std::vector<gf2::RowOp> trace;
  int gate_count = 0;
  std::vector<int> best_per_generation;  // non-increasing under elitism
};

using SynthFn = std::function<std::vector<gf2::RowOp>(const gf2::ParityMatrix&)>;

/**
 * Genetic search over placements minimising the synthesised gate count.
 * Tournament selection of size 3, order crossover, single-transposition
 * mutation, one elite individual per generation, identity placement seeded
 * into the initial population (so the result never loses to it), fitness
 * cached per permutation. Deterministic for a fixed seed: every random draw
 * comes from a per-(generation, slot) stream.
 */
PlacementResult optimize_placement(const gf2::ParityMatrix& p,
                                   const arch::Architecture& a,
                                   const GAParams& params, const SynthFn& synth);

/**
 * The same search for an arbitrary integer cost function over permutations,
 * used where the routed object is not a bare parity matrix.
 */
struct PermutationResult {
  std::vector<int> perm;
  int cost = 0;
  std::vector<int> best_per_generation;
};

PermutationResult optimize_permutation(
    int n, const GAParams& params,
    const std::function<int(const std::vector<int>&)>& cost);

}  // namespace steinerqc::placement
