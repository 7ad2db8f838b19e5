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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace steinerqc::arch {

struct ApspTables {
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<int>> next_hop;
};

/**
 * All-pairs shortest hop counts by Floyd-Warshall, plus a deterministic path
 * reconstruction table: next_hop[u][v] is the lowest-indexed neighbour of u
 * on some shortest u-v path. Throws RoutingError when the graph is
 * disconnected.
 */
ApspTables floyd_warshall(int n, const std::vector<std::pair<int, int>>& edges);

/**
 * A device connectivity graph: undirected, simple, connected, no self-loops.
 * Immutable after construction, including the precomputed distance tables,
 * so instances are freely shareable across threads.
 */
class Architecture {
 public:
  Architecture(std::string name, int n, std::vector<std::pair<int, int>> edges,
               std::optional<std::vector<int>> hamiltonian_path);

  /**
   * Strict schema:
   *   { "name": str, "n": int, "edges": [[u,v],...],
   *     "hamiltonian_path": [v0,...,v_{n-1}] | null }
   * Unknown fields are rejected.
   */
  static Architecture from_json_text(const std::string& text);
  static Architecture from_json_file(const std::string& path);

  /**
   * Named benchmark devices: square-9, square-16, ibm-qx5,
   * rigetti-16q-aspen, ibm-q20-tokyo. All five declare a Hamiltonian path.
   */
  static Architecture builtin(std::string_view name);
  static const std::vector<std::string>& builtin_names();

  const std::string& name() const { return name_; }
  int size() const { return n_; }

  /** Canonical edge list: u < v, sorted lexicographically. */
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const { return adj_matrix_[u * n_ + v] != 0; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }

  int dist(int u, int v) const { return apsp_.dist[u][v]; }
  int next_hop(int u, int v) const { return apsp_.next_hop[u][v]; }

  /** One shortest path u..v inclusive, reconstructed through next_hop. */
  std::vector<int> shortest_path(int u, int v) const;

  const std::optional<std::vector<int>>& hamiltonian_path() const {
    return hamiltonian_path_;
  }

 private:
  std::string name_;
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> adj_matrix_;
  std::optional<std::vector<int>> hamiltonian_path_;
  ApspTables apsp_;
};

}  // namespace steinerqc::arch
