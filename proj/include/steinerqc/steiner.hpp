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

#include <functional>
#include <utility>
#include <vector>

#include "steinerqc/architecture.hpp"

namespace steinerqc::arch {

/**
 * Rooted tree subgraph spanning a terminal set. Vertices not in the terminal
 * set are Steiner points. Every leaf is a terminal.
 */
struct SteinerTree {
  int root = 0;
  std::vector<int> vertices;   // ascending
  std::vector<int> terminals;  // ascending, subset of vertices
  std::vector<int> parent;     // indexed by vertex; -1 for root, -2 outside
  std::vector<int> depth;      // indexed by vertex; -1 outside
  std::vector<std::vector<int>> children;  // indexed by vertex, each ascending

  bool contains(int v) const { return depth[v] >= 0; }
  bool is_terminal(int v) const;
  /** Tree edges as (parent, child) pairs, children ascending per BFS level. */
  std::vector<std::pair<int, int>> edges() const;
};

/**
 * Approximate Steiner tree over the subgraph induced by `allowed`:
 * minimum spanning tree of the terminals' metric closure, expanded to
 * concrete shortest paths, cycles broken by BFS from the root, non-terminal
 * leaves pruned. A classic 2-approximation; ties always resolve toward the
 * lower vertex index. Throws RoutingError when the terminals cannot be
 * connected inside `allowed`.
 */
SteinerTree steiner_tree(const Architecture& a, const std::vector<int>& terminals,
                         int root, const std::vector<char>& allowed);

/**
 * Steiner tree in which every parent is larger than its children under
 * `order`, except on edges whose two endpoints both lie in `nondesc`.
 * Built by greedy nearest-terminal attachment over the directed graph of
 * admissible steps; root must be the maximum terminal under `order`.
 */
SteinerTree decreasing_steiner_tree(const Architecture& a,
                                    const std::vector<int>& terminals, int root,
                                    const std::vector<int>& order,
                                    const std::vector<int>& nondesc,
                                    const std::vector<char>& allowed);

/**
 * Post-order depth-first numbering of a spanning tree, starting from a leaf.
 * order[v] is v's label; the DFT start receives label n-1 and the vertex
 * labelled 0 becomes the root. Removing vertices in ascending label order
 * never disconnects the remaining induced subgraph.
 */
struct RootedSpanningTree {
  int root = 0;              // the vertex labelled 0
  std::vector<int> parent;   // child -> parent after re-rooting; -1 at root
  std::vector<int> order;    // vertex -> label
};

RootedSpanningTree dft_postorder(const Architecture& a, int start_leaf,
                                 const std::vector<std::pair<int, int>>& spanning);

/**
 * The two tree passes shared by the elimination routines: `fill` propagates
 * 1s into every tree vertex whose bit is 0, in rounds that only consume
 * values present at the round start; `empty` then clears every non-root
 * vertex with one parent-to-child operation each, deepest level first
 * (terminals ascending, then filled Steiner points most-recent first).
 * emit(src, tgt) must realise bit[tgt] ^= bit[src]. With
 * parent_sources_only, fill steps run strictly parent to child.
 */
void fill_and_empty(const SteinerTree& tree, const std::function<bool(int)>& bit,
                    const std::function<void(int, int)>& emit,
                    bool parent_sources_only);

}  // namespace steinerqc::arch
