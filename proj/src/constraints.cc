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

#include "rsmax/constraints.h"

#include <limits>

#include "rsmax/errors.h"

namespace rsmax {

CardinalitySystem::CardinalitySystem(int n, int k)
    : IndependenceSystem(n), k_(k) {
  if (k < 0 || k > n) throw PreconditionError("cardinality needs 0 <= k <= n");
}

bool CardinalitySystem::IsIndependent(const Subset& a) const {
  return a.Size() <= k_;
}

std::string CardinalitySystem::Descriptor() const {
  return "cardinality(k=" + std::to_string(k_) + ")";
}

nlohmann::json CardinalitySystem::ToJson() const {
  return {{"kind", "cardinality"}, {"k", k_}};
}

PartitionMatroid::PartitionMatroid(std::vector<std::vector<int>> parts,
                                   std::vector<int> caps)
    : IndependenceSystem([&] {
        int n = 0;
        for (const auto& p : parts) n += static_cast<int>(p.size());
        return n;
      }()),
      parts_(std::move(parts)),
      caps_(std::move(caps)) {
  if (parts_.size() != caps_.size()) {
    throw PreconditionError("need one cap per part");
  }
  Subset seen;
  for (const auto& part : parts_) {
    Subset mask;
    for (int e : part) {
      if (e < 0 || e >= ground_size() || seen.Contains(e)) {
        throw PreconditionError("parts must partition 0..n-1");
      }
      seen.Insert(e);
      mask.Insert(e);
    }
    part_masks_.push_back(mask);
  }
  for (int c : caps_) {
    if (c < 0) throw PreconditionError("negative partition cap");
  }
}

bool PartitionMatroid::IsIndependent(const Subset& a) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if ((a & part_masks_[i]).Size() > caps_[i]) return false;
  }
  return true;
}

std::string PartitionMatroid::Descriptor() const {
  return "partition(parts=" + std::to_string(parts_.size()) + ")";
}

nlohmann::json PartitionMatroid::ToJson() const {
  return {{"kind", "partition"}, {"parts", parts_}, {"caps", caps_}};
}

KnapsackSystem::KnapsackSystem(std::vector<double> costs, double budget)
    : IndependenceSystem(static_cast<int>(costs.size())),
      costs_(std::move(costs)),
      budget_(budget) {
  if (!(budget >= 0.0)) throw PreconditionError("knapsack budget must be >= 0");
  for (double c : costs_) {
    if (!(c >= 0.0)) throw PreconditionError("knapsack costs must be >= 0");
  }
}

bool KnapsackSystem::IsIndependent(const Subset& a) const {
  double total = 0.0;
  a.ForEach([&](int e) { total += costs_[e]; });
  return total <= budget_ + kEpsCmp;
}

std::string KnapsackSystem::Descriptor() const {
  return "knapsack(n=" + std::to_string(ground_size()) + ")";
}

nlohmann::json KnapsackSystem::ToJson() const {
  return {{"kind", "knapsack"}, {"costs", costs_}, {"budget", budget_}};
}

RestrictedSystem::RestrictedSystem(SystemPtr base, Subset pinned)
    : IndependenceSystem(base->ground_size()),
      base_(std::move(base)),
      pinned_(std::move(pinned)) {
  if (!base_->IsIndependent(pinned_)) {
    throw PreconditionError("pinned set " + pinned_.ToString() +
                            " is dependent in " + base_->Descriptor());
  }
}

bool RestrictedSystem::IsIndependent(const Subset& a) const {
  return pinned_.IsSubsetOf(a) && base_->IsIndependent(a);
}

bool RestrictedSystem::AdmitsFree(const Subset& free_part) const {
  return base_->IsIndependent(free_part | pinned_);
}

RestrictedSystem RestrictedSystem::Narrow(const Subset& extra) const {
  return RestrictedSystem(base_, pinned_ | extra);
}

std::string RestrictedSystem::Descriptor() const {
  return base_->Descriptor() + "/" + pinned_.ToString();
}

nlohmann::json RestrictedSystem::ToJson() const {
  return {{"kind", "restricted"},
          {"base", base_->ToJson()},
          {"pinned", pinned_.Elements()}};
}

SystemPtr MakeCardinalitySystem(int n, int k) {
  return std::make_shared<CardinalitySystem>(n, k);
}

SystemPtr MakePartitionMatroid(std::vector<std::vector<int>> parts,
                               std::vector<int> caps) {
  return std::make_shared<PartitionMatroid>(std::move(parts), std::move(caps));
}

SystemPtr MakeKnapsackSystem(std::vector<double> costs, double budget) {
  return std::make_shared<KnapsackSystem>(std::move(costs), budget);
}

RestrictedSystem RestrictSystem(SystemPtr sys, const Subset& pinned) {
  return RestrictedSystem(std::move(sys), pinned);
}

SystemPtr SystemFromJson(const nlohmann::json& j, int n) {
  const std::string kind = j.at("kind").get<std::string>();
  SystemPtr sys;
  if (kind == "cardinality") {
    sys = MakeCardinalitySystem(n, j.at("k").get<int>());
  } else if (kind == "partition") {
    sys = MakePartitionMatroid(j.at("parts").get<std::vector<std::vector<int>>>(),
                               j.at("caps").get<std::vector<int>>());
  } else if (kind == "knapsack") {
    sys = MakeKnapsackSystem(j.at("costs").get<std::vector<double>>(),
                             j.at("budget").get<double>());
  } else {
    throw ConfigError("unknown constraint kind '" + kind + "'");
  }
  if (sys->ground_size() != n) {
    throw ConfigError("constraint covers " + std::to_string(sys->ground_size()) +
                      " elements, instance has " + std::to_string(n));
  }
  return sys;
}

bool IsDownwardClosed(const IndependenceSystem& sys) {
  const int n = sys.ground_size();
  if (n > 16) throw BudgetExceeded("downward-closure check needs n <= 16");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> independent(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    independent[mask] = sys.IsIndependent(Subset::FromMask(mask));
  }
  if (!independent[0]) return false;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    if (!independent[mask]) continue;
    for (int e = 0; e < n; ++e) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if ((mask & bit) && !independent[mask & ~bit]) return false;
    }
  }
  return true;
}

Subset IndependenceGreedy(const SetFunction& f, const Subset& ground,
                          const RestrictedSystem& sys) {
  Subset chosen;
  Subset remaining = ground - sys.pinned();
  while (true) {
    int best = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    remaining.ForEach([&](int x) {
      const Subset candidate = chosen.With(x);
      if (!sys.AdmitsFree(candidate)) return;
      const double value = f.Eval(candidate);
      if (best < 0 || value > best_value + kEpsCmp) {
        best = x;
        best_value = value;
      }
    });
    if (best < 0) return chosen;
    chosen.Insert(best);
    remaining.Erase(best);
  }
}

}  // namespace rsmax
