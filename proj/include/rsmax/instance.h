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

#ifndef RSMAX_INSTANCE_H_
#define RSMAX_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsmax/constraints.h"
#include "rsmax/oracle.h"
#include "rsmax/subset.h"

namespace rsmax {

// For each original element, the ids of its copies. A copy x' of x has
// f(x') = f(x) and f(x' | x) = 0.
struct CopyMap {
  int original_size = 0;
  std::vector<std::vector<int>> copies;

  // The original an id stands for (itself when it is an original).
  int OriginalOf(int id) const;
  Subset Originals() const { return Subset::Range(original_size); }
};

// One robust maximization problem (k, N, tau) with N = {0, ..., n-1}.
struct Instance {
  OraclePtr oracle;
  int k = 1;
  int tau = 0;
  std::string label;
  std::optional<CopyMap> copies;
  // Optional independence system; when null the constraint is |A| <= k.
  SystemPtr constraint;

  int n() const { return oracle->ground_size(); }
  Subset Ground() const { return Subset::Range(n()); }

  // Throws PreconditionError unless 0 <= tau < k <= n.
  void Validate() const;
  // Same instance on a fresh oracle with its own query counter.
  Instance Clone() const;
};

// Ground set of size 2k realized as weighted coverage on k points of weight
// 1/k: id 0 (a_1) covers every point, ids 1..k-1 (a_2..a_k) cover nothing and
// id k + j - 1 (a_{k+j}) covers point j - 1. tau = 1. The stated values
// f(a_1) = 1, f(a_i) = 0 and f(a_j | X) = 1/k iff X misses {a_1, a_j} are
// re-checked on construction.
Instance GreedyFailureInstance(int k);

// Ids of the partial-copies instance, see PartialCopiesInstance().
struct PartialCopiesLayout {
  int k = 0;
  int a1() const { return 0; }
  int a2() const { return 1; }
  // Garbage elements a_3..: ids 2..k-1.
  Subset Garbage() const;
  // a^j_i for j in 1..k, i in {1, 2}.
  int Partial(int j, int i) const { return k + 2 * (j - 1) + (i - 1); }
  int a1_copy() const { return 3 * k; }
  int n() const { return 3 * k + 1; }
};

// a_1, a_2 of value 1 each, a copy a'_1, partial copies a^j_i of value 1/k
// with f(a^j_i | X) = 1/k iff X misses {a_i, a'_i}, and k-2 garbage elements
// of value 0. Coverage on two groups of k points, weight 1/k. tau = 1.
Instance PartialCopiesInstance(int k);

// Adds c copies of every element. Copy j of x gets id n + x * c + j.
Instance AugmentWithCopies(const Instance& inst, int c);

// Appends tau_new fully additive elements of value (k+1) max_x f(x) to a
// tau = 0 instance and returns (k + tau_new, N u X, tau_new).
Instance HardnessAugment(const Instance& inst, int tau_new);

// Each element covers each of `universe` unit-weight points independently
// with probability `density`.
Instance RandomCoverageInstance(int n, int universe, double density,
                                std::uint64_t seed, int k, int tau);

// Like RandomCoverageInstance() with integer point weights in 1..max_weight.
Instance RandomWeightedCoverageInstance(int n, int universe, double density,
                                        int max_weight, std::uint64_t seed,
                                        int k, int tau);

// Integer weights drawn uniformly from 0..max_weight.
Instance RandomModularInstance(int n, int max_weight, std::uint64_t seed,
                               int k, int tau);

Instance ModularInstance(std::vector<double> weights, int k, int tau);

}  // namespace rsmax

#endif  // RSMAX_INSTANCE_H_
