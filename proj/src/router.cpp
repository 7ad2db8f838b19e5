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

#include "steinerqc/router.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "steinerqc/errors.hpp"
#include "steinerqc/steiner.hpp"

namespace steinerqc::router {

namespace {

// Clears column k below (by `order`) the diagonal within `allowed`.
void steiner_down_ordered(EliminationState& state, int k,
                          const std::vector<char>& allowed,
                          const std::vector<int>& order) {
  const int n = state.matrix.size();
  std::vector<int> terminals{k};
  for (int j = 0; j < n; ++j)
    if (allowed[j] && order[j] > order[k] && state.matrix.get(j, k))
      terminals.push_back(j);
  if (terminals.size() == 1) {
    if (state.matrix.get(k, k)) return;
    throw SingularMatrixError("no pivot available in column " + std::to_string(k));
  }
  const arch::SteinerTree tree =
      arch::steiner_tree(*state.architecture, terminals, k, allowed);
  arch::fill_and_empty(
      tree, [&](int v) { return state.matrix.get(v, k); },
      [&](int src, int tgt) { state.apply({src, tgt}); },
      /*parent_sources_only=*/false);
}

void steiner_up_ordered(EliminationState& state, int k,
                        const std::vector<char>& allowed,
                        const std::vector<char>& nondesc,
                        const std::vector<int>& order) {
  const int n = state.matrix.size();
  std::vector<int> terminals{k};
  for (int j = 0; j < n; ++j)
    if (allowed[j] && order[j] < order[k] && state.matrix.get(j, k))
      terminals.push_back(j);
  if (terminals.size() == 1) return;
  std::vector<int> nondesc_list;
  for (int v = 0; v < n; ++v)
    if (nondesc[v]) nondesc_list.push_back(v);
  const arch::SteinerTree tree = arch::decreasing_steiner_tree(
      *state.architecture, terminals, k, order, nondesc_list, allowed);
  arch::fill_and_empty(
      tree, [&](int v) { return state.matrix.get(v, k); },
      [&](int src, int tgt) { state.apply({src, tgt}); },
      /*parent_sources_only=*/true);
}

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

// Conjugation by a relabelling: out[label[i]][label[j]] = p[i][j]. Row-op
// traces found in label space map back through the inverse label.
gf2::ParityMatrix relabel_matrix(const gf2::ParityMatrix& p,
                                 const std::vector<int>& label) {
  const int n = p.size();
  gf2::ParityMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.get(i, j)) out.set(label[i], label[j], true);
  return out;
}

arch::Architecture relabel_architecture(const arch::Architecture& a,
                                        const std::vector<int>& label) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(a.edges().size());
  for (auto [u, v] : a.edges()) edges.emplace_back(label[u], label[v]);
  return arch::Architecture(a.name() + "+relabelled", a.size(), std::move(edges),
                            std::nullopt);
}

std::vector<gf2::RowOp> core_steiner_gauss(const gf2::ParityMatrix& p,
                                           const arch::Architecture& a) {
  const int n = a.size();
  const std::vector<int> order = identity_order(n);
  EliminationState state(p, a);
  std::vector<char> active(n, 1);
  for (int k = 0; k < n; ++k) {
    steiner_down_ordered(state, k, active, order);
    active[k] = 0;
  }
  active.assign(n, 1);
  const std::vector<char> no_exceptions(n, 0);
  for (int k = n - 1; k >= 0; --k) {
    steiner_up_ordered(state, k, active, no_exceptions, order);
    active[k] = 0;
  }
  if (!state.matrix.is_identity())
    throw std::logic_error("elimination did not terminate at the identity");
  return state.ops;
}

// --- recursive variant ----------------------------------------------------

// BFS spanning tree of the induced subgraph; parent[root] = -1, -2 outside.
std::vector<int> bfs_spanning_tree(const arch::Architecture& a, int root,
                                   const std::vector<char>& allowed) {
  std::vector<int> parent(a.size(), -2);
  parent[root] = -1;
  std::deque<int> queue{root};
  int seen = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : a.neighbours(u)) {
      if (allowed[w] && parent[w] == -2) {
        parent[w] = u;
        ++seen;
        queue.push_back(w);
      }
    }
  }
  int expected = 0;
  for (char c : allowed) expected += c;
  if (seen != expected) throw RoutingError("graph is disconnected");
  return parent;
}

std::vector<int> tree_leaves(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<int> degree(n, 0);
  for (int v = 0; v < n; ++v) {
    if (parent[v] >= 0) {
      ++degree[v];
      ++degree[parent[v]];
    }
  }
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (parent[v] != -2 && degree[v] <= 1) leaves.push_back(v);
  return leaves;
}

// Post-order labels over an explicit tree, DFT from a leaf, children
// ascending. Only vertices of the tree receive labels; others stay -1.
std::vector<int> postorder_labels(const std::vector<int>& parent, int start,
                                  int n) {
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    if (parent[v] >= 0) {
      adj[v].push_back(parent[v]);
      adj[parent[v]].push_back(v);
    }
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<std::pair<int, int>> stack{{start, -1}};
  std::vector<char> expanded(n, 0);
  while (!stack.empty()) {
    auto [u, par] = stack.back();
    if (!expanded[u]) {
      expanded[u] = 1;
      for (auto it = adj[u].rbegin(); it != adj[u].rend(); ++it)
        if (*it != par) stack.push_back({*it, u});
    } else {
      label[u] = next++;
      stack.pop_back();
    }
  }
  return label;
}

// Shortest path s..t inside the active set, lowest-index tie-breaks.
std::vector<int> active_shortest_path(const arch::Architecture& a, int s, int t,
                                      const std::vector<char>& active) {
  if (s == t) return {s};
  std::vector<int> pred(a.size(), -1);
  std::vector<char> seen(a.size(), 0);
  seen[s] = 1;
  std::deque<int> queue{s};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : a.neighbours(u)) {
      if (!active[w] || seen[w]) continue;
      seen[w] = 1;
      pred[w] = u;
      if (w == t) {
        std::vector<int> path{t};
        while (path.back() != s) path.push_back(pred[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  throw RoutingError("graph is disconnected");
}

// One level of steiner-gauss-rec over `active`. The top level passes the
// already-postordered labels and its spanning tree; nested calls compute
// fresh ones for their induced subgraph.
void rec_run(EliminationState& state, const std::vector<char>& active_in,
             const std::vector<int>* top_labels,
             const std::vector<int>* top_tree_parent) {
  const arch::Architecture& a = *state.architecture;
  const int n = a.size();
  std::vector<int> active_list;
  for (int v = 0; v < n; ++v)
    if (active_in[v]) active_list.push_back(v);
  if (active_list.empty()) return;

  std::vector<int> label;
  std::vector<int> tree_parent;
  if (top_labels != nullptr) {
    label = *top_labels;
    tree_parent = *top_tree_parent;
  } else if (active_list.size() == 1) {
    label.assign(n, -1);
    label[active_list[0]] = 0;
    tree_parent.assign(n, -2);
    tree_parent[active_list[0]] = -1;
  } else {
    tree_parent = bfs_spanning_tree(a, active_list.front(), active_in);
    const std::vector<int> leaves = tree_leaves(tree_parent);
    label = postorder_labels(tree_parent, leaves.back(), n);
  }

  std::vector<int> by_label = active_list;
  std::sort(by_label.begin(), by_label.end(),
            [&](int x, int y) { return label[x] < label[y]; });

  // Step 1: descending pass, in ascending label order.
  std::vector<char> allowed(n, 0);
  for (int v : active_list) allowed[v] = 1;
  for (int k : by_label) {
    steiner_down_ordered(state, k, allowed, label);
    allowed[k] = 0;
  }

  // Steps 2-5: clear columns from the maximal leaf downward, recursing on
  // the corridor W where non-descending operations were permitted.
  std::vector<char> remaining(n, 0);
  for (int v : active_list) remaining[v] = 1;
  std::vector<int> r_parent = tree_parent;
  int r_count = static_cast<int>(active_list.size());
  while (r_count > 0) {
    int k = -1;
    for (int v = 0; v < n; ++v)
      if (remaining[v] && (k < 0 || label[v] > label[k])) k = v;
    const std::vector<int> leaves = tree_leaves(r_parent);
    int kp = -1;
    for (int v : leaves)
      if (kp < 0 || label[v] > label[kp]) kp = v;

    const std::vector<int> w_path = active_shortest_path(a, kp, k, remaining);
    std::vector<char> nondesc(n, 0);
    for (int v : w_path) nondesc[v] = 1;
    steiner_up_ordered(state, kp, remaining, nondesc, label);

    if (w_path.size() > 1) {
      if (static_cast<int>(w_path.size()) == r_count)
        throw std::logic_error("corridor covers the whole active set");
      rec_run(state, nondesc, nullptr, nullptr);
    }

    // Remove the leaf kp. If kp was the tree root its single child (a root
    // leaf has at most one) becomes the new root.
    remaining[kp] = 0;
    --r_count;
    for (int v = 0; v < n; ++v)
      if (v != kp && r_parent[v] == kp) r_parent[v] = -1;
    r_parent[kp] = -2;
  }
}

}  // namespace

EliminationState::EliminationState(gf2::ParityMatrix m, const arch::Architecture& a)
    : matrix(std::move(m)), architecture(&a) {
  if (matrix.size() != a.size())
    throw std::invalid_argument("matrix dimension does not match architecture");
}

void EliminationState::apply(gf2::RowOp op) {
  if (!architecture->has_edge(op.src, op.tgt))
    throw std::logic_error("row operation off the architecture edges");
  matrix.apply(op);
  ops.push_back(op);
}

void steiner_down(EliminationState& state, int k, const std::vector<char>& allowed) {
  steiner_down_ordered(state, k, allowed, identity_order(state.matrix.size()));
}

void steiner_up(EliminationState& state, int k, const std::vector<char>& allowed,
                const std::vector<char>& nondesc) {
  steiner_up_ordered(state, k, allowed, nondesc, identity_order(state.matrix.size()));
}

std::vector<gf2::RowOp> steiner_gauss(const gf2::ParityMatrix& p,
                                      const arch::Architecture& a) {
  if (!a.hamiltonian_path())
    throw RoutingError("architecture declares no hamiltonian path; use steiner_gauss_rec");
  if (p.size() != a.size())
    throw std::invalid_argument("matrix dimension does not match architecture");
  if (p.rank() != p.size()) throw SingularMatrixError("matrix is singular");

  const std::vector<int>& ham = *a.hamiltonian_path();
  bool is_iota = true;
  for (int i = 0; i < a.size(); ++i)
    if (ham[i] != i) is_iota = false;
  if (is_iota) return core_steiner_gauss(p, a);

  // Rows are ordered along the Hamiltonian path: relabel, run, map back.
  const int n = a.size();
  std::vector<int> label(n);
  for (int pos = 0; pos < n; ++pos) label[ham[pos]] = pos;
  std::vector<int> unlabel(n);
  for (int v = 0; v < n; ++v) unlabel[label[v]] = v;
  const arch::Architecture relabelled = relabel_architecture(a, label);
  std::vector<gf2::RowOp> ops =
      core_steiner_gauss(relabel_matrix(p, label), relabelled);
  for (auto& op : ops) op = {unlabel[op.src], unlabel[op.tgt]};
  return ops;
}

std::vector<gf2::RowOp> steiner_gauss_rec(const gf2::ParityMatrix& p,
                                          const arch::Architecture& a,
                                          RecOptions options) {
  const int n = a.size();
  if (p.size() != n)
    throw std::invalid_argument("matrix dimension does not match architecture");
  if (p.rank() != n) throw SingularMatrixError("matrix is singular");
  if (options.bfs_root < 0 || options.bfs_root >= n)
    throw std::invalid_argument("bfs_root out of range");

  const std::vector<char> all(n, 1);
  const std::vector<int> spanning_parent =
      bfs_spanning_tree(a, options.bfs_root, all);
  std::vector<std::pair<int, int>> spanning;
  for (int v = 0; v < n; ++v)
    if (spanning_parent[v] >= 0) spanning.emplace_back(spanning_parent[v], v);

  int start = options.dft_start;
  const std::vector<int> leaves = tree_leaves(spanning_parent);
  if (start < 0) {
    start = leaves.back();
  } else if (std::find(leaves.begin(), leaves.end(), start) == leaves.end()) {
    throw std::invalid_argument("dft_start must be a leaf of the spanning tree");
  }

  if (n == 1) return {};
  const arch::RootedSpanningTree rst = arch::dft_postorder(a, start, spanning);
  const std::vector<int>& label = rst.order;
  std::vector<int> unlabel(n);
  for (int v = 0; v < n; ++v) unlabel[label[v]] = v;

  const arch::Architecture relabelled = relabel_architecture(a, label);
  EliminationState state(relabel_matrix(p, label), relabelled);
  std::vector<int> tree_parent(n, -2);
  for (int v = 0; v < n; ++v) {
    const int pv = rst.parent[v];
    tree_parent[label[v]] = pv < 0 ? (v == rst.root ? -1 : -2) : label[pv];
  }
  const std::vector<int> ident = identity_order(n);
  rec_run(state, all, &ident, &tree_parent);
  if (!state.matrix.is_identity())
    throw std::logic_error("recursive elimination did not terminate at the identity");

  std::vector<gf2::RowOp> ops = std::move(state.ops);
  for (auto& op : ops) op = {unlabel[op.src], unlabel[op.tgt]};
  return ops;
}

std::vector<gf2::RowOp> synthesize_constrained(const gf2::ParityMatrix& p,
                                               const arch::Architecture& a) {
  if (a.hamiltonian_path()) return steiner_gauss(p, a);
  return steiner_gauss_rec(p, a);
}

circuit::Circuit trace_to_circuit(const std::vector<gf2::RowOp>& ops, int n) {
  circuit::Circuit c{n, {}};
  c.gates.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    c.gates.push_back(circuit::Gate::cnot(it->src, it->tgt));
  return c;
}

}  // namespace steinerqc::router
