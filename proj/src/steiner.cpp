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

#include "steinerqc/steiner.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "steinerqc/errors.hpp"

namespace steinerqc::arch {

namespace {

constexpr int kOutside = -2;

// Breadth-first hop counts from src inside the induced subgraph on `allowed`,
// neighbours visited in ascending order. -1 marks unreachable vertices.
std::vector<int> restricted_bfs(const Architecture& a, int src,
                                const std::vector<char>& allowed) {
  std::vector<int> dist(a.size(), -1);
  dist[src] = 0;
  std::deque<int> queue{src};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : a.neighbours(u)) {
      if (allowed[w] && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Finalises a SteinerTree from a parent relation: computes depths, children
// and the sorted vertex list.
SteinerTree finish_tree(const Architecture& a, int root,
                        const std::vector<int>& parent,
                        const std::vector<int>& terminals) {
  SteinerTree t;
  t.root = root;
  t.parent = parent;
  t.terminals = terminals;
  std::sort(t.terminals.begin(), t.terminals.end());
  t.depth.assign(a.size(), -1);
  t.children.assign(a.size(), {});
  for (int v = 0; v < a.size(); ++v) {
    if (parent[v] == kOutside) continue;
    t.vertices.push_back(v);
    if (parent[v] >= 0) t.children[parent[v]].push_back(v);
  }
  t.depth[root] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int c : t.children[u]) {
      t.depth[c] = t.depth[u] + 1;
      queue.push_back(c);
    }
  }
  for (int v : t.vertices) {
    if (t.depth[v] < 0) throw std::logic_error("steiner tree is not connected");
  }
  return t;
}

}  // namespace

bool SteinerTree::is_terminal(int v) const {
  return std::binary_search(terminals.begin(), terminals.end(), v);
}

std::vector<std::pair<int, int>> SteinerTree::edges() const {
  std::vector<std::pair<int, int>> out;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int c : children[u]) {
      out.emplace_back(u, c);
      queue.push_back(c);
    }
  }
  return out;
}

SteinerTree steiner_tree(const Architecture& a, const std::vector<int>& terminals,
                         int root, const std::vector<char>& allowed) {
  std::vector<int> terms(terminals);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  if (terms.empty()) throw std::invalid_argument("terminal set is empty");
  if (!std::binary_search(terms.begin(), terms.end(), root))
    throw std::invalid_argument("root must be a terminal");
  for (int t : terms)
    if (!allowed[t]) throw std::invalid_argument("terminal outside allowed set");

  std::vector<int> parent(a.size(), kOutside);
  parent[root] = -1;
  if (terms.size() == 1) return finish_tree(a, root, parent, terms);

  // Metric closure distances, restricted to `allowed`.
  std::vector<std::vector<int>> dist_from(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    dist_from[i] = restricted_bfs(a, terms[i], allowed);
  auto term_index = [&](int t) {
    return std::lower_bound(terms.begin(), terms.end(), t) - terms.begin();
  };

  // Prim over the terminals, starting from the root.
  std::vector<int> in_tree{root};
  std::vector<int> remaining;
  for (int t : terms)
    if (t != root) remaining.push_back(t);
  std::set<std::pair<int, int>> union_edges;
  std::vector<char> in_union(a.size(), 0);
  in_union[root] = 1;

  while (!remaining.empty()) {
    int best_d = -1, best_u = -1, best_t = -1;
    for (int u : in_tree) {
      for (int t : remaining) {
        const int d = dist_from[term_index(t)][u];
        if (d < 0) continue;
        if (best_d < 0 || std::tie(d, u, t) < std::tie(best_d, best_u, best_t)) {
          best_d = d;
          best_u = u;
          best_t = t;
        }
      }
    }
    if (best_d < 0) throw RoutingError("terminals not connectable within allowed set");

    // Expand to a concrete shortest path: greedy lowest-neighbour descent on
    // the distance-to-terminal table (equals the next_hop path when the
    // allowed set is the whole graph).
    const auto& toward = dist_from[term_index(best_t)];
    int x = best_u;
    while (x != best_t) {
      int next = -1;
      for (int w : a.neighbours(x)) {
        if (allowed[w] && toward[w] >= 0 && 1 + toward[w] == toward[x]) {
          next = w;
          break;
        }
      }
      if (next < 0) throw std::logic_error("shortest-path descent failed");
      union_edges.insert({std::min(x, next), std::max(x, next)});
      in_union[x] = in_union[next] = 1;
      x = next;
    }
    in_tree.push_back(best_t);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best_t));
  }

  // The union of paths may contain cycles; keep the BFS tree from the root.
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : a.neighbours(u)) {
      if (in_union[w] && parent[w] == kOutside &&
          union_edges.count({std::min(u, w), std::max(u, w)})) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }

  // Prune non-terminal leaves until every leaf is a terminal.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> child_count(a.size(), 0);
    for (int v = 0; v < a.size(); ++v)
      if (parent[v] >= 0) ++child_count[parent[v]];
    for (int v = 0; v < a.size(); ++v) {
      if (parent[v] == kOutside || v == root) continue;
      if (child_count[v] == 0 && !std::binary_search(terms.begin(), terms.end(), v)) {
        parent[v] = kOutside;
        changed = true;
      }
    }
  }
  return finish_tree(a, root, parent, terms);
}

SteinerTree decreasing_steiner_tree(const Architecture& a,
                                    const std::vector<int>& terminals, int root,
                                    const std::vector<int>& order,
                                    const std::vector<int>& nondesc,
                                    const std::vector<char>& allowed) {
  std::vector<int> terms(terminals);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  if (terms.empty()) throw std::invalid_argument("terminal set is empty");
  for (int t : terms) {
    if (!allowed[t]) throw std::invalid_argument("terminal outside allowed set");
    if (t != root && order[t] >= order[root])
      throw std::invalid_argument("root must be maximal among terminals");
  }

  std::vector<char> in_nondesc(a.size(), 0);
  for (int v : nondesc) in_nondesc[v] = 1;
  auto admissible = [&](int u, int w) {
    return allowed[w] && (order[w] < order[u] || (in_nondesc[u] && in_nondesc[w]));
  };

  std::vector<int> parent(a.size(), kOutside);
  parent[root] = -1;
  std::vector<int> in_tree{root};
  std::vector<int> remaining;
  for (int t : terms)
    if (t != root) remaining.push_back(t);

  while (!remaining.empty()) {
    // Multi-source BFS from the current tree along admissible steps.
    std::vector<int> dist(a.size(), -1), pred(a.size(), -1);
    std::deque<int> queue;
    for (int v : in_tree) dist[v] = 0;
    for (int v : in_tree) queue.push_back(v);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : a.neighbours(u)) {
        if (dist[w] >= 0 || !admissible(u, w)) continue;
        dist[w] = dist[u] + 1;
        pred[w] = u;
        queue.push_back(w);
      }
    }
    int best_t = -1;
    for (int t : remaining) {
      if (dist[t] < 0) continue;
      if (best_t < 0 || std::tie(dist[t], t) < std::tie(dist[best_t], best_t))
        best_t = t;
    }
    if (best_t < 0) throw RoutingError("no decreasing steiner tree within constraints");

    std::vector<int> path{best_t};
    while (parent[path.back()] == kOutside) path.push_back(pred[path.back()]);
    std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (parent[path[i + 1]] == kOutside) {
        parent[path[i + 1]] = path[i];
        in_tree.push_back(path[i + 1]);
      }
    }
    remaining.erase(std::find(remaining.begin(), remaining.end(), best_t));
    std::sort(in_tree.begin(), in_tree.end());
  }
  return finish_tree(a, root, parent, terms);
}

RootedSpanningTree dft_postorder(const Architecture& a, int start_leaf,
                                 const std::vector<std::pair<int, int>>& spanning) {
  const int n = a.size();
  if (static_cast<int>(spanning.size()) != n - 1)
    throw std::invalid_argument("spanning set must have n-1 edges");
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : spanning) {
    if (!a.has_edge(u, v))
      throw std::invalid_argument("spanning edge missing from architecture");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  if (adj[start_leaf].size() != 1)
    throw std::invalid_argument("DFT start must be a leaf of the spanning tree");

  RootedSpanningTree out;
  out.order.assign(n, -1);
  int next_label = 0;
  // Iterative post-order from the start leaf, children ascending.
  std::vector<std::pair<int, int>> stack{{start_leaf, -1}};
  std::vector<char> expanded(n, 0);
  while (!stack.empty()) {
    auto [u, par] = stack.back();
    if (!expanded[u]) {
      expanded[u] = 1;
      for (auto it = adj[u].rbegin(); it != adj[u].rend(); ++it)
        if (*it != par) stack.push_back({*it, u});
    } else {
      out.order[u] = next_label++;
      stack.pop_back();
    }
  }
  if (next_label != n)
    throw std::invalid_argument("spanning set does not span the graph");

  // Re-root at the vertex labelled 0.
  int root = -1;
  for (int v = 0; v < n; ++v)
    if (out.order[v] == 0) root = v;
  out.root = root;
  out.parent.assign(n, -1);
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        out.parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  return out;
}

void fill_and_empty(const SteinerTree& tree, const std::function<bool(int)>& bit,
                    const std::function<void(int, int)>& emit,
                    bool parent_sources_only) {
  std::vector<int> fill_order;
  const int n = static_cast<int>(tree.parent.size());

  // FILL: rounds that only consume values present at the round start, which
  // lets independent operations of one round run in parallel on hardware.
  while (true) {
    std::vector<char> snapshot(n, 0);
    bool all_set = true;
    for (int v : tree.vertices) {
      snapshot[v] = bit(v) ? 1 : 0;
      if (!snapshot[v]) all_set = false;
    }
    if (all_set) break;
    bool progress = false;
    for (int v : tree.vertices) {  // ascending
      if (snapshot[v]) continue;
      int src = -1;
      if (parent_sources_only) {
        const int p = tree.parent[v];
        if (p >= 0 && snapshot[p]) src = p;
      } else {
        std::vector<int> cand = tree.children[v];
        if (tree.parent[v] >= 0) cand.push_back(tree.parent[v]);
        std::sort(cand.begin(), cand.end());
        for (int u : cand) {
          if (snapshot[u]) {
            src = u;
            break;
          }
        }
      }
      if (src >= 0) {
        emit(src, v);
        fill_order.push_back(v);
        progress = true;
      }
    }
    if (!progress) throw std::logic_error("fill phase cannot make progress");
  }

  // EMPTY: one parent-to-child operation per non-root vertex, deepest level
  // first; within a level the initially-set vertices go first in ascending
  // order, then the filled ones most-recently-filled first.
  std::vector<int> fill_pos(n, -1);
  for (std::size_t i = 0; i < fill_order.size(); ++i)
    fill_pos[fill_order[i]] = static_cast<int>(i);
  int max_depth = 0;
  for (int v : tree.vertices) max_depth = std::max(max_depth, tree.depth[v]);
  for (int d = max_depth; d >= 1; --d) {
    std::vector<int> originals, filled;
    for (int v : tree.vertices) {
      if (tree.depth[v] != d) continue;
      (fill_pos[v] < 0 ? originals : filled).push_back(v);
    }
    std::sort(filled.begin(), filled.end(),
              [&](int x, int y) { return fill_pos[x] > fill_pos[y]; });
    for (int v : originals) emit(tree.parent[v], v);
    for (int v : filled) emit(tree.parent[v], v);
  }
}

}  // namespace steinerqc::arch
