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

namespace steinerqc::router {

/**
 * A parity matrix mid-elimination together with the recorded row-operation
 * trace. Every recorded operation runs along an architecture edge; replaying
 * the trace on the original matrix reproduces the current one. Single-owner:
 * mutate from one thread only.
 */
struct EliminationState {
  gf2::ParityMatrix matrix;
  const arch::Architecture* architecture;
  std::vector<gf2::RowOp> ops;

  EliminationState(gf2::ParityMatrix m, const arch::Architecture& a);

  /** Applies and records op; the op must lie on an architecture edge. */
  void apply(gf2::RowOp op);
};

/**
 * Clears column k below the diagonal on the rows in `allowed`, using only
 * row operations along edges of a Steiner tree over the rows that hold 1s.
 * Throws SingularMatrixError when column k has no 1 at or below the diagonal.
 */
void steiner_down(EliminationState& state, int k, const std::vector<char>& allowed);

/**
 * Clears column k above the diagonal on the rows in `allowed` using
 * decreasing row operations (src > tgt), except between rows that are both
 * in `nondesc`. Preserves upper-triangularity outside `nondesc`.
 */
void steiner_up(EliminationState& state, int k, const std::vector<char>& allowed,
                const std::vector<char>& nondesc);

/**
 * Gauss-Jordan elimination restricted to nearest-neighbour row operations,
 * for architectures with a declared Hamiltonian path: a descending pass of
 * steiner_down along the path order, then an ascending pass of steiner_up.
 * The returned trace replays p to the identity; the CNOT circuit realising p
 * is the reversed trace (see trace_to_circuit).
 */
std::vector<gf2::RowOp> steiner_gauss(const gf2::ParityMatrix& p,
                                      const arch::Architecture& a);

struct RecOptions {
  int bfs_root = 0;    // spanning tree grows from this vertex
  int dft_start = -1;  // leaf starting the post-order DFT; -1 = highest leaf
};

/**
 * Recursive variant for arbitrary connected architectures: vertices are
 * renumbered by post-order depth-first traversal of a spanning tree, and
 * upper elimination recurses on the shortest-path corridor W between the
 * current maximal leaf and maximal vertex, inside which non-descending
 * operations are permitted. Coincides with steiner_gauss on path graphs.
 */
std::vector<gf2::RowOp> steiner_gauss_rec(const gf2::ParityMatrix& p,
                                          const arch::Architecture& a,
                                          RecOptions options = {});

/** steiner_gauss when the architecture declares a Hamiltonian path, else
 *  steiner_gauss_rec. */
std::vector<gf2::RowOp> synthesize_constrained(const gf2::ParityMatrix& p,
                                               const arch::Architecture& a);

/**
 * The CNOT circuit realising the parity map that the trace eliminates:
 * the operations reversed, each becoming CNOT(control = src, target = tgt).
 */
circuit::Circuit trace_to_circuit(const std::vector<gf2::RowOp>& ops, int n);

}  // namespace steinerqc::router
