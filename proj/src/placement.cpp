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

#include "steinerqc/placement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "steinerqc/rng.hpp"

namespace steinerqc::placement {

Placement Placement::identity(int n) {
  Placement pl;
  pl.perm.resize(n);
  std::iota(pl.perm.begin(), pl.perm.end(), 0);
  return pl;
}

bool Placement::is_valid() const {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Placement Placement::inverted() const {
  Placement inv;
  inv.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv.perm[perm[i]] = static_cast<int>(i);
  return inv;
}

GAParams GAParams::defaults_for(int n) {
  GAParams p;
  if (n <= 9) {
    p.population = 30;
    p.iterations = 15;
  } else if (n <= 16) {
    p.population = 50;
    p.iterations = 100;
  } else {
    p.population = 100;
    p.iterations = 100;
  }
  return p;
}

gf2::ParityMatrix apply_placement(const gf2::ParityMatrix& p, const Placement& pl) {
  const int n = p.size();
  if (static_cast<int>(pl.perm.size()) != n)
    throw std::invalid_argument("placement size does not match matrix");
  if (!pl.is_valid()) throw std::invalid_argument("placement is not a permutation");
  gf2::ParityMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.get(i, j)) out.set(pl.perm[i], pl.perm[j], true);
  return out;
}

namespace {

std::vector<int> order_crossover(const std::vector<int>& a,
                                 const std::vector<int>& b, rng::SplitMix64& g) {
  const int n = static_cast<int>(a.size());
  int i = static_cast<int>(g.below(n));
  int j = static_cast<int>(g.below(n));
  if (i > j) std::swap(i, j);
  std::vector<int> child(n, -1);
  std::vector<char> used(n, 0);
  for (int k = i; k <= j; ++k) {
    child[k] = a[k];
    used[a[k]] = 1;
  }
  int pos = (j + 1) % n;
  for (int k = 0; k < n; ++k) {
    const int v = b[(j + 1 + k) % n];
    if (!used[v]) {
      child[pos] = v;
      pos = (pos + 1) % n;
    }
  }
  return child;
}

}  // namespace

PermutationResult optimize_permutation(
    int n, const GAParams& params,
    const std::function<int(const std::vector<int>&)>& cost) {
  const GAParams& ga = params;
  if (ga.population < 2) throw std::invalid_argument("population must be >= 2");
  if (ga.iterations < 0) throw std::invalid_argument("iterations must be >= 0");

  std::map<std::vector<int>, int> cache;
  auto fitness = [&](const std::vector<int>& perm) {
    auto it = cache.find(perm);
    if (it == cache.end()) it = cache.emplace(perm, cost(perm)).first;
    return it->second;
  };

  std::vector<std::vector<int>> population;
  population.reserve(ga.population);
  std::vector<int> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  population.push_back(ident);
  rng::SplitMix64 init(rng::derive_seed(ga.seed, "ga-init", 0));
  for (int i = 1; i < ga.population; ++i) {
    std::vector<int> perm = ident;
    for (int k = n - 1; k > 0; --k)
      std::swap(perm[k], perm[static_cast<int>(init.below(k + 1))]);
    population.push_back(std::move(perm));
  }

  auto best_of = [&](const std::vector<std::vector<int>>& pop) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(pop.size()); ++i)
      if (fitness(pop[i]) < fitness(pop[best])) best = i;
    return pop[best];
  };

  std::vector<int> best = best_of(population);
  PermutationResult result;
  result.best_per_generation.push_back(fitness(best));

  for (int gen = 0; gen < ga.iterations; ++gen) {
    std::vector<std::vector<int>> next;
    next.reserve(ga.population);
    next.push_back(best);  // elite
    for (int slot = 1; slot < ga.population; ++slot) {
      rng::SplitMix64 g(rng::derive_seed(
          ga.seed, "ga-gen",
          static_cast<std::uint64_t>(gen) * ga.population + slot));
      auto tournament = [&]() -> const std::vector<int>& {
        int winner = static_cast<int>(g.below(ga.population));
        for (int t = 1; t < 3; ++t) {
          const int cand = static_cast<int>(g.below(ga.population));
          if (fitness(population[cand]) < fitness(population[winner])) winner = cand;
        }
        return population[winner];
      };
      const std::vector<int>& pa = tournament();
      const std::vector<int>& pb = tournament();
      std::vector<int> child =
          g.unit() < ga.crossover_prob ? order_crossover(pa, pb, g) : pa;
      if (g.unit() < ga.mutation_prob) {
        const int i = static_cast<int>(g.below(n));
        const int j = static_cast<int>(g.below(n));
        std::swap(child[i], child[j]);
      }
      next.push_back(std::move(child));
    }
    population = std::move(next);
    const std::vector<int> cand = best_of(population);
    if (fitness(cand) < fitness(best)) best = cand;
    result.best_per_generation.push_back(fitness(best));
  }

  result.perm = best;
  result.cost = fitness(best);
  return result;
}

PlacementResult optimize_placement(const gf2::ParityMatrix& p,
                                   const arch::Architecture& a,
                                   const GAParams& params, const SynthFn& synth) {
  if (p.size() != a.size())
    throw std::invalid_argument("matrix dimension does not match architecture");
  const PermutationResult r = optimize_permutation(
      p.size(), params, [&](const std::vector<int>& perm) {
        return static_cast<int>(synth(apply_placement(p, Placement{perm})).size());
      });
  PlacementResult out;
  out.placement = Placement{r.perm};
  out.trace = synth(apply_placement(p, out.placement));
  out.gate_count = static_cast<int>(out.trace.size());
  out.best_per_generation = r.best_per_generation;
  return out;
}

}  // namespace steinerqc::placement
