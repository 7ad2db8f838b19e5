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

#include "steinerqc/architecture.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "steinerqc/errors.hpp"

namespace steinerqc::arch {

namespace {
constexpr int kInf = 1 << 28;
}

ApspTables floyd_warshall(int n, const std::vector<std::pair<int, int>>& edges) {
  ApspTables t;
  t.dist.assign(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) t.dist[v][v] = 0;
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    t.dist[u][v] = t.dist[v][u] = 1;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());

  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (t.dist[i][k] + t.dist[k][j] < t.dist[i][j])
          t.dist[i][j] = t.dist[i][k] + t.dist[k][j];

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.dist[i][j] >= kInf) throw RoutingError("graph is disconnected");

  // Deterministic reconstruction: lowest neighbour on a shortest path.
  t.next_hop.assign(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      for (int w : adj[u]) {
        if (1 + t.dist[w][v] == t.dist[u][v]) {
          t.next_hop[u][v] = w;
          break;
        }
      }
    }
  }
  return t;
}

Architecture::Architecture(std::string name, int n,
                           std::vector<std::pair<int, int>> edges,
                           std::optional<std::vector<int>> hamiltonian_path)
    : name_(std::move(name)), n_(n), hamiltonian_path_(std::move(hamiltonian_path)) {
  if (n < 1) throw std::invalid_argument("architecture must have at least one vertex");
  std::set<std::pair<int, int>> canon;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    canon.emplace(std::min(u, v), std::max(u, v));
  }
  edges_.assign(canon.begin(), canon.end());

  adj_.resize(n);
  adj_matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    adj_matrix_[u * n_ + v] = adj_matrix_[v * n_ + u] = 1;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  apsp_ = floyd_warshall(n_, edges_);  // also validates connectivity

  if (hamiltonian_path_) {
    const auto& p = *hamiltonian_path_;
    if (static_cast<int>(p.size()) != n_)
      throw std::invalid_argument("hamiltonian path must visit every vertex");
    std::vector<char> seen(n_, 0);
    for (int v : p) {
      if (v < 0 || v >= n_ || seen[v])
        throw std::invalid_argument("hamiltonian path is not a permutation");
      seen[v] = 1;
    }
    for (int i = 0; i + 1 < n_; ++i)
      if (!has_edge(p[i], p[i + 1]))
        throw std::invalid_argument("hamiltonian path uses a missing edge");
  }
}

std::vector<int> Architecture::shortest_path(int u, int v) const {
  std::vector<int> path{u};
  while (u != v) {
    u = next_hop(u, v);
    path.push_back(u);
  }
  return path;
}

Architecture Architecture::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
  }
  static const std::set<std::string> allowed_keys = {"name", "n", "edges",
                                                     "hamiltonian_path"};
  for (const auto& [key, value] : j.items()) {
    if (!allowed_keys.count(key))
      throw std::invalid_argument("unknown field in architecture JSON: " + key);
  }
  for (const auto& key : allowed_keys) {
    if (!j.contains(key))
      throw std::invalid_argument("missing field in architecture JSON: " + key);
  }
  const std::string name = j.at("name").get<std::string>();
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("edges must be [u, v] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::optional<std::vector<int>> ham;
  if (!j.at("hamiltonian_path").is_null())
    ham = j.at("hamiltonian_path").get<std::vector<int>>();
  return Architecture(name, n, std::move(edges), std::move(ham));
}

Architecture Architecture::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open architecture file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

namespace {

// Square grid with boustrophedon labels, so [0..n-1] is a Hamiltonian path.
Architecture make_square_grid(const std::string& name, int side) {
  const int n = side * side;
  auto id = [side](int r, int c) {
    return r * side + (r % 2 == 0 ? c : side - 1 - c);
  };
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      if (c + 1 < side) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < side) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  std::vector<int> ham(n);
  for (int i = 0; i < n; ++i) ham[i] = i;
  return Architecture(name, n, std::move(edges), std::move(ham));
}

std::string data_directory() {
  if (const char* env = std::getenv("STEINERQC_DATA_DIR")) return env;
#ifdef STEINERQC_DATA_DIR
  return STEINERQC_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace

const std::vector<std::string>& Architecture::builtin_names() {
  static const std::vector<std::string> names = {
      "square-9", "square-16", "ibm-qx5", "rigetti-16q-aspen", "ibm-q20-tokyo"};
  return names;
}

Architecture Architecture::builtin(std::string_view name) {
  if (name == "square-9") return make_square_grid("square-9", 3);
  if (name == "square-16") return make_square_grid("square-16", 4);
  if (name == "ibm-qx5" || name == "rigetti-16q-aspen" || name == "ibm-q20-tokyo") {
    std::string file = std::string(name);
    std::replace(file.begin(), file.end(), '-', '_');
    return from_json_file(data_directory() + "/architectures/" + file + ".json");
  }
  throw std::invalid_argument("unknown architecture: " + std::string(name));
}

}  // namespace steinerqc::arch
