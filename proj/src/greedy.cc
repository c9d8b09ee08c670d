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
#include <limits>
#include <numeric>
#include <vector>

#include "algorithm_util.h"
#include "rsmax/algorithms.h"
#include "rsmax/errors.h"

namespace rsmax {

using internal::Require;
using internal::Step;

RobustResult Finalize(const SetFunction& f, Selection selection, int tau,
                      std::int64_t queries, const Budget& budget) {
  RobustResult result;
  result.chosen = std::move(selection.set);
  result.trace = std::move(selection.trace);
  result.queries = queries;
  result.f_value = f.Eval(result.chosen);
  try {
    MinimizerResult z = FindMinimizer(f, result.chosen, tau, false, budget);
    result.minimizer = std::move(z.z);
    result.g_value = z.value;
  } catch (const BudgetExceeded&) {
    result.minimizer_infeasible = true;
    result.g_value = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

Selection GreedySelect(const SetFunction& f, const Subset& ground, int steps,
                       const Subset& start, const std::string& rule) {
  Selection out;
  out.set = start;
  const Subset pool = ground - start;
  Require(steps >= 0 && steps <= pool.Size(),
          "greedy needs 0 <= steps <= |ground - start|");
  double current = start.Empty() ? 0.0 : f.Eval(start);
  for (int i = 0; i < steps; ++i) {
    const internal::ArgmaxResult best =
        internal::ArgmaxExtension(f, ground - out.set, out.set);
    out.trace.push_back(Step(i, {best.element}, rule, best.value - current));
    out.set.Insert(best.element);
    current = best.value;
  }
  return out;
}

RobustResult Greedy(const Instance& inst) {
  internal::RequireSizes(inst);
  const SetFunction& f = *inst.oracle;
  const std::int64_t before = f.QueryCount();
  Selection sel = GreedySelect(f, inst.Ground(), inst.k);
  return Finalize(f, std::move(sel), inst.tau, f.QueryCount() - before);
}

RobustResult GreedyThreshold(const Instance& inst, double eps) {
  internal::RequireSizes(inst);
  if (!(eps > 0.0 && eps < 1.0)) {
    throw DomainError("greedy-threshold needs 0 < eps < 1");
  }
  const SetFunction& f = *inst.oracle;
  const std::int64_t before = f.QueryCount();
  const int n = inst.n();
  const Subset ground = inst.Ground();
  const internal::ArgmaxResult top =
      internal::ArgmaxExtension(f, ground, Subset());
  Selection sel;
  const double w0 = top.value;
  const double floor = eps / n * w0;
  double current = 0.0;
  int pass = 0;
  for (double w = w0; w0 > 0.0 && w >= floor && sel.set.Size() < inst.k;
       w *= 1.0 - eps, ++pass) {
    for (int x : (ground - sel.set).Elements()) {
      if (sel.set.Size() >= inst.k) break;
      const double value = f.Eval(sel.set.With(x));
      if (value - current >= w - kEpsCmp) {
        sel.trace.push_back(Step(pass, {x}, "threshold", value - current, {w}));
        sel.set.Insert(x);
        current = value;
      }
    }
  }
  return Finalize(f, std::move(sel), inst.tau, f.QueryCount() - before);
}

RobustResult NaiveTopK(const Instance& inst) {
  internal::RequireSizes(inst);
  const SetFunction& f = *inst.oracle;
  const std::int64_t before = f.QueryCount();
  const int n = inst.n();
  std::vector<double> value(n);
  for (int x = 0; x < n; ++x) value[x] = f.Eval(Subset{x});
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return value[a] > value[b];
  });
  Selection sel;
  for (int i = 0; i < inst.k; ++i) {
    sel.set.Insert(order[i]);
    sel.trace.push_back(Step(i, {order[i]}, "top-k", value[order[i]]));
  }
  return Finalize(f, std::move(sel), inst.tau, f.QueryCount() - before);
}

}  // namespace rsmax
