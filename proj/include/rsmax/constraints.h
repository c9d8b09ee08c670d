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

#ifndef RSMAX_CONSTRAINTS_H_
#define RSMAX_CONSTRAINTS_H_

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsmax/oracle.h"
#include "rsmax/subset.h"

namespace rsmax {

// A downward-closed family of feasible subsets of {0, ..., n-1}, given as a
// membership oracle.
class IndependenceSystem {
 public:
  explicit IndependenceSystem(int ground_size) : ground_size_(ground_size) {}
  virtual ~IndependenceSystem() = default;

  int ground_size() const { return ground_size_; }

  virtual bool IsIndependent(const Subset& a) const = 0;
  virtual std::string Descriptor() const = 0;
  virtual nlohmann::json ToJson() const = 0;

 private:
  int ground_size_;
};

using SystemPtr = std::shared_ptr<const IndependenceSystem>;

// |A| <= k.
class CardinalitySystem : public IndependenceSystem {
 public:
  CardinalitySystem(int n, int k);

  int k() const { return k_; }

  bool IsIndependent(const Subset& a) const override;
  std::string Descriptor() const override;
  nlohmann::json ToJson() const override;

 private:
  int k_;
};

// |A n P_i| <= cap_i for every part P_i; the parts partition the ground set.
class PartitionMatroid : public IndependenceSystem {
 public:
  PartitionMatroid(std::vector<std::vector<int>> parts, std::vector<int> caps);

  bool IsIndependent(const Subset& a) const override;
  std::string Descriptor() const override;
  nlohmann::json ToJson() const override;

 private:
  std::vector<std::vector<int>> parts_;
  std::vector<Subset> part_masks_;
  std::vector<int> caps_;
};

// sum of cost_i over A <= budget.
class KnapsackSystem : public IndependenceSystem {
 public:
  KnapsackSystem(std::vector<double> costs, double budget);

  bool IsIndependent(const Subset& a) const override;
  std::string Descriptor() const override;
  nlohmann::json ToJson() const override;

 private:
  std::vector<double> costs_;
  double budget_;
};

// The system {A : Z <= A, A in base}. Not downward closed unless Z is empty;
// algorithms that work on the free part A - Z use AdmitsFree().
class RestrictedSystem : public IndependenceSystem {
 public:
  // Throws PreconditionError when `pinned` is dependent in `base`.
  RestrictedSystem(SystemPtr base, Subset pinned);

  const Subset& pinned() const { return pinned_; }
  const IndependenceSystem& base() const { return *base_; }
  const SystemPtr& base_ptr() const { return base_; }

  bool IsIndependent(const Subset& a) const override;
  // Whether `free_part` u Z is independent in the base system.
  bool AdmitsFree(const Subset& free_part) const;
  // The restriction pinned at Z u extra.
  RestrictedSystem Narrow(const Subset& extra) const;

  std::string Descriptor() const override;
  nlohmann::json ToJson() const override;

 private:
  SystemPtr base_;
  Subset pinned_;
};

SystemPtr MakeCardinalitySystem(int n, int k);
SystemPtr MakePartitionMatroid(std::vector<std::vector<int>> parts,
                               std::vector<int> caps);
SystemPtr MakeKnapsackSystem(std::vector<double> costs, double budget);
RestrictedSystem RestrictSystem(SystemPtr sys, const Subset& pinned);

// Parses {"kind": "cardinality" | "partition" | "knapsack", ...}.
SystemPtr SystemFromJson(const nlohmann::json& j, int n);

// Exhaustive downward-closure check; n <= 16.
bool IsDownwardClosed(const IndependenceSystem& sys);

// Greedy for independence systems: starting from the empty free part, keep
// adding the feasible element of `ground` with the largest f(S + x) (ties to
// the smallest id) until no element can be added.
Subset IndependenceGreedy(const SetFunction& f, const Subset& ground,
                          const RestrictedSystem& sys);

}  // namespace rsmax

#endif  // RSMAX_CONSTRAINTS_H_
