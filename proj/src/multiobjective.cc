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
#include <set>
#include <string>
#include <vector>

#include "algorithm_util.h"
#include "rsmax/algorithms.h"
#include "rsmax/errors.h"

namespace rsmax {
namespace {

using internal::Require;

std::int64_t FamilyQueries(const std::vector<OraclePtr>& fs) {
  std::set<const SetFunction*> seen;
  std::int64_t total = 0;
  for (const OraclePtr& f : fs) {
    if (seen.insert(f->CounterSource()).second) total += f->QueryCount();
  }
  return total;
}

int CommonGroundSize(const std::vector<OraclePtr>& fs,
                     const std::vector<double>& targets) {
  Require(!fs.empty(), "need at least one function");
  Require(fs.size() == targets.size(), "need one target per function");
  const int n = fs.front()->ground_size();
  for (const OraclePtr& f : fs) {
    Require(f->ground_size() == n, "functions must share the ground set");
  }
  return n;
}

}  // namespace

GeneralizedGreedyResult GeneralizedGreedy(const std::vector<OraclePtr>& fs,
                                          const std::vector<double>& targets,
                                          int k, int l, int m) {
  const int n = CommonGroundSize(fs, targets);
  Require(k >= 1, "need k >= 1");
  Require(m >= 1, "need m >= 1");
  Require(l >= 0 && l <= n, "need 0 <= l <= n");
  const std::int64_t before = FamilyQueries(fs);
  const std::size_t count = fs.size();
  GeneralizedGreedyResult result;
  std::vector<double> current(count);
  for (std::size_t i = 0; i < count; ++i) current[i] = fs[i]->Eval(Subset());
  result.values.push_back(current);
  const Subset ground = Subset::Range(n);
  while (result.set.Size() < l) {
    const int size = std::min(m, l - result.set.Size());
    const double scale = static_cast<double>(size - 1) / k;
    std::optional<Subset> chosen;
    std::vector<double> next(count);
    ForEachCombination(ground - result.set, size, [&](const Subset& x) {
      const Subset grown = result.set | x;
      for (std::size_t i = 0; i < count; ++i) {
        next[i] = fs[i]->Eval(grown);
        if (next[i] - current[i] <
            scale * (targets[i] - current[i]) - kEpsCmp) {
          return true;
        }
      }
      chosen = x;
      return false;
    });
    if (!chosen.has_value()) {
      result.feasible = false;
      break;
    }
    result.set |= *chosen;
    current = next;
    result.values.push_back(current);
    result.round_sizes.push_back(size);
  }
  result.queries = FamilyQueries(fs) - before;
  return result;
}

std::optional<Subset> BruteForceMultiObjectiveSolver::Solve(
    const std::vector<OraclePtr>& fs, const std::vector<double>& targets,
    int size, const Subset& candidates) const {
  CommonGroundSize(fs, targets);
  Require(size >= 0 && size <= candidates.Size(),
          "solver needs 0 <= size <= |candidates|");
  const std::uint64_t needed =
      SaturatingMul(Binomial(candidates.Size(), size), fs.size());
  if (needed > budget_.opt) {
    throw BudgetExceeded("multi-objective search needs " +
                         std::to_string(needed) + " evaluations, cap is " +
                         std::to_string(budget_.opt));
  }
  std::optional<Subset> found;
  ForEachCombination(candidates, size, [&](const Subset& x) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i]->Eval(x) < targets[i] - kEpsCmp) return true;
    }
    found = x;
    return false;
  });
  return found;
}

RobustResult ConstantTauScheme(const Instance& inst,
                               const MultiObjectiveSolver& solver,
                               double delta) {
  internal::RequireSizes(inst);
  const int tau = inst.tau;
  const int k = inst.k;
  Require(tau >= 1, "constant-tau needs tau >= 1");
  const int head = 3 * tau * tau;
  Require(k > head + tau, "constant-tau needs k > 3 tau^2 + tau = " +
                              std::to_string(head + tau));
  if (!(delta > 0.0 && delta <= 0.5)) {
    throw DomainError("constant-tau needs 0 < delta <= 0.5");
  }
  const OraclePtr& f = inst.oracle;
  const std::int64_t before = f->QueryCount();

  const RobustResult blocks = BlocksGreedy(inst, head);
  Selection sel;
  Subset a0;
  for (const TraceStep& step : blocks.trace) {
    if (step.rule != "block") continue;
    a0.Insert(step.added.front());
    sel.trace.push_back(step);
  }
  const double lb = blocks.g_value;
  const double ub = lb / 0.387;

  std::vector<OraclePtr> family;
  std::vector<double> base_values;
  for (int size = std::max(0, head - tau); size <= head; ++size) {
    ForEachCombination(a0, size, [&](const Subset& y) {
      family.push_back(Restrict(f, y));
      base_values.push_back(f->Eval(y));
      return true;
    });
  }

  const Subset candidates = inst.Ground() - a0;
  const int size = k - head;
  const int max_calls =
      static_cast<int>(std::ceil(1.0 / std::log1p(delta) - 1e-12));
  int calls = 0;
  auto attempt = [&](double estimate) {
    std::vector<double> targets(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
      targets[i] = std::max(0.0, estimate - base_values[i]);
    }
    ++calls;
    return solver.Solve(family, targets, size, candidates);
  };

  double estimate = ub;
  std::optional<Subset> best = attempt(ub);
  if (!best.has_value()) {
    double lo = lb;
    double hi = ub;
    best = attempt(lo);
    if (!best.has_value()) {
      hi = lo;
      lo = 0.0;
      best = attempt(lo);
      if (!best.has_value()) {
        throw Error("multi-objective solver failed with zero targets");
      }
    }
    while (hi - lo > delta * lo && calls < max_calls) {
      const double mid = 0.5 * (lo + hi);
      std::optional<Subset> found = attempt(mid);
      if (found.has_value()) {
        lo = mid;
        best = std::move(found);
      } else {
        hi = mid;
      }
    }
    estimate = lo;
  }
  sel.set = a0 | *best;
  sel.trace.push_back(internal::Step(static_cast<int>(sel.trace.size()),
                                     best->Elements(), "solver", estimate));
  RobustResult result =
      Finalize(*f, std::move(sel), tau, f->QueryCount() - before);
  result.stats["lb"] = lb;
  result.stats["ub"] = ub;
  result.stats["opt_estimate"] = estimate;
  result.stats["solver_calls"] = calls;
  result.stats["family_size"] = static_cast<double>(family.size());
  result.stats["guarantee"] = solver.Guarantee();
  return result;
}

}  // namespace rsmax
