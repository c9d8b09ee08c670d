// Copyright 2026 The Authors.
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

#include <algorithm>
#include <cmath>
#include <random>

#include "rsmax/errors.h"
#include "rsmax/instance.h"

namespace rsmax {
namespace {

constexpr int kValidationSamples = 256;

void Expect(bool ok, const std::string& what) {
  if (!ok) throw Error("greedy-failure realization mismatch: " + what);
}

bool Near(double a, double b) { return std::abs(a - b) <= kEpsCmp; }

// Checks every stated value of the greedy-failure example against f.
void ValidateGreedyFailure(const SetFunction& f, int k) {
  const int n = 2 * k;
  const double unit = 1.0 / k;
  Expect(Near(f.Eval({0}), 1.0), "f(a_1) != 1");
  for (int i = 1; i < k; ++i) Expect(Near(f.Eval({i}), 0.0), "f(a_i) != 0");
  auto check_marginals = [&](const Subset& x) {
    for (int j = k; j < n; ++j) {
      if (x.Contains(j)) continue;
      const double gain = Marginal(f, j, x);
      const bool free = !x.Contains(0);
      Expect(Near(gain, free ? unit : 0.0),
             "f(a_" + std::to_string(j + 1) + " | " + x.ToString() + ")");
    }
  };
  if (n <= 16) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      check_marginals(Subset::FromMask(mask));
    }
    return;
  }
  std::mt19937_64 rng(static_cast<std::uint64_t>(k));
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < kValidationSamples; ++s) {
    Subset x;
    for (int e = 0; e < n; ++e) {
      if (coin(rng)) x.Insert(e);
    }
    check_marginals(x);
  }
}

std::vector<std::vector<int>> RandomSets(int n, int universe, double density,
                                         std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<int>> sets(n);
  for (int i = 0; i < n; ++i) {
    for (int u = 0; u < universe; ++u) {
      if (unit(rng) < density) sets[i].push_back(u);
    }
  }
  return sets;
}

void CheckRandomParams(int n, int universe, double density, int k, int tau) {
  if (n < 1 || universe < 1) {
    throw PreconditionError("n and universe must be positive");
  }
  if (!(density > 0.0 && density <= 1.0)) {
    throw PreconditionError("density must lie in (0, 1]");
  }
  if (tau < 0 || tau >= k || k > n) {
    throw PreconditionError("need 0 <= tau < k <= n");
  }
}

}  // namespace

int CopyMap::OriginalOf(int id) const {
  if (id < original_size) return id;
  for (int x = 0; x < original_size; ++x) {
    const auto& c = copies[x];
    if (std::find(c.begin(), c.end(), id) != c.end()) return x;
  }
  return id;
}

void Instance::Validate() const {
  if (oracle == nullptr) throw PreconditionError("instance has no oracle");
  if (tau < 0 || tau >= k || k > n()) {
    throw PreconditionError("instance '" + label + "' violates 0 <= tau < k <= n (k=" +
                            std::to_string(k) + ", tau=" + std::to_string(tau) +
                            ", n=" + std::to_string(n()) + ")");
  }
}

Instance Instance::Clone() const {
  Instance out = *this;
  out.oracle = oracle->Clone();
  return out;
}

Instance GreedyFailureInstance(int k) {
  if (k < 2) throw PreconditionError("greedy-failure needs k >= 2");
  std::vector<std::vector<int>> sets(2 * k);
  for (int u = 0; u < k; ++u) sets[0].push_back(u);
  for (int j = 0; j < k; ++j) sets[k + j] = {j};
  Instance inst;
  inst.oracle = std::make_shared<CoverageFunction>(k, std::move(sets), 1.0 / k);
  inst.k = k;
  inst.tau = 1;
  inst.label = "greedy-failure(k=" + std::to_string(k) + ")";
  ValidateGreedyFailure(*inst.oracle->Clone(), k);
  return inst;
}

Subset PartialCopiesLayout::Garbage() const {
  Subset g;
  for (int id = 2; id < k; ++id) g.Insert(id);
  return g;
}

Instance PartialCopiesInstance(int k) {
  if (k < 4) throw PreconditionError("partial-copies needs k >= 4");
  const PartialCopiesLayout layout{k};
  // Points 0..k-1 belong to a_1, points k..2k-1 to a_2.
  std::vector<std::vector<int>> sets(layout.n());
  for (int u = 0; u < k; ++u) {
    sets[layout.a1()].push_back(u);
    sets[layout.a2()].push_back(k + u);
    sets[layout.a1_copy()].push_back(u);
  }
  for (int j = 1; j <= k; ++j) {
    sets[layout.Partial(j, 1)] = {j - 1};
    sets[layout.Partial(j, 2)] = {k + j - 1};
  }
  Instance inst;
  inst.oracle =
      std::make_shared<CoverageFunction>(2 * k, std::move(sets), 1.0 / k);
  inst.k = k;
  inst.tau = 1;
  inst.label = "partial-copies(k=" + std::to_string(k) + ")";
  return inst;
}

Instance AugmentWithCopies(const Instance& inst, int c) {
  if (inst.copies.has_value()) {
    throw PreconditionError("instance already carries copies");
  }
  auto augmented = std::make_shared<CopyAugmentedFunction>(inst.oracle, c);
  const int n = inst.n();
  CopyMap map;
  map.original_size = n;
  map.copies.resize(n);
  for (int x = 0; x < n; ++x) {
    for (int j = 0; j < c; ++j) map.copies[x].push_back(n + x * c + j);
  }
  Instance out;
  out.oracle = augmented;
  out.k = inst.k;
  out.tau = inst.tau;
  out.label = inst.label + "+copies(" + std::to_string(c) + ")";
  out.copies = std::move(map);
  return out;
}

Instance HardnessAugment(const Instance& inst, int tau_new) {
  if (inst.tau != 0) throw PreconditionError("hardness augment needs tau = 0");
  if (tau_new < 1) throw PreconditionError("hardness augment needs tau >= 1");
  double best = 0.0;
  for (int x = 0; x < inst.n(); ++x) best = std::max(best, inst.oracle->Eval({x}));
  const double weight = (inst.k + 1) * best;
  Instance out;
  if (const auto* modular =
          dynamic_cast<const ModularFunction*>(inst.oracle.get())) {
    std::vector<double> weights = modular->weights();
    weights.insert(weights.end(), tau_new, weight);
    out.oracle = std::make_shared<ModularFunction>(std::move(weights));
  } else {
    out.oracle = std::make_shared<AdditiveExtensionFunction>(inst.oracle,
                                                             tau_new, weight);
  }
  out.k = inst.k + tau_new;
  out.tau = tau_new;
  out.label = inst.label + "+hardness(" + std::to_string(tau_new) + ")";
  return out;
}

Instance RandomCoverageInstance(int n, int universe, double density,
                                std::uint64_t seed, int k, int tau) {
  CheckRandomParams(n, universe, density, k, tau);
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.oracle = std::make_shared<CoverageFunction>(
      universe, RandomSets(n, universe, density, rng), 1.0);
  inst.k = k;
  inst.tau = tau;
  inst.label = "random-coverage(n=" + std::to_string(n) +
               ",seed=" + std::to_string(seed) + ")";
  return inst;
}

Instance RandomWeightedCoverageInstance(int n, int universe, double density,
                                        int max_weight, std::uint64_t seed,
                                        int k, int tau) {
  CheckRandomParams(n, universe, density, k, tau);
  if (max_weight < 1) throw PreconditionError("max_weight must be >= 1");
  std::mt19937_64 rng(seed);
  auto sets = RandomSets(n, universe, density, rng);
  std::uniform_int_distribution<int> draw(1, max_weight);
  std::vector<double> weights(universe);
  for (double& w : weights) w = draw(rng);
  Instance inst;
  inst.oracle = std::make_shared<CoverageFunction>(universe, std::move(sets),
                                                   std::move(weights));
  inst.k = k;
  inst.tau = tau;
  inst.label = "weighted-coverage(n=" + std::to_string(n) +
               ",seed=" + std::to_string(seed) + ")";
  return inst;
}

Instance RandomModularInstance(int n, int max_weight, std::uint64_t seed, int k,
                               int tau) {
  if (max_weight < 0) throw PreconditionError("max_weight must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(0, max_weight);
  std::vector<double> weights(n);
  for (double& w : weights) w = draw(rng);
  Instance inst = ModularInstance(std::move(weights), k, tau);
  inst.label = "random-modular(n=" + std::to_string(n) +
               ",seed=" + std::to_string(seed) + ")";
  return inst;
}

Instance ModularInstance(std::vector<double> weights, int k, int tau) {
  Instance inst;
  inst.oracle = std::make_shared<ModularFunction>(std::move(weights));
  inst.k = k;
  inst.tau = tau;
  inst.label = "modular(n=" + std::to_string(inst.n()) + ")";
  return inst;
}

}  // namespace rsmax
