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
#include <string>
#include <vector>

#include "algorithm_util.h"
#include "rsmax/algorithms.h"
#include "rsmax/errors.h"

namespace rsmax {
namespace {

using internal::Require;
using internal::Step;

struct Seeds {
  int a1 = -1;
  int a2 = -1;
};

// The first two greedy picks.
Seeds SeedPair(const SetFunction& f, const Subset& ground, Selection& sel) {
  Selection seed = GreedySelect(f, ground, 2, Subset(), "seed");
  Seeds s{seed.trace[0].added.front(), seed.trace[1].added.front()};
  sel.set = seed.set;
  sel.trace = std::move(seed.trace);
  return s;
}

// Phase guard loop of the three-phase algorithm for the element `a`.
void IgnorePhase(const SetFunction& f, const Subset& ground, int k, int a,
                 const std::string& rule, Selection& sel) {
  while (sel.set.Size() < k) {
    const double f_a = f.Eval(sel.set);
    const Subset without = sel.set.Without(a);
    const double f_without = f.Eval(without);
    const double guard = f_a - f_without;
    if (!(guard > f_a / 3.0 + kEpsCmp)) break;
    const internal::ArgmaxResult best =
        internal::ArgmaxExtension(f, ground - sel.set, without);
    sel.trace.push_back(Step(static_cast<int>(sel.trace.size()),
                             {best.element}, rule, best.value - f_without,
                             {guard, f_a}));
    sel.set.Insert(best.element);
  }
}

}  // namespace

RobustResult IgnoreFirst(const Instance& inst) {
  internal::RequireSizes(inst);
  internal::RequireTau(inst, 1, "ignore-first");
  Require(inst.k >= 2, "ignore-first needs k >= 2");
  const SetFunction& f = *inst.oracle;
  const std::int64_t before = f.QueryCount();
  const Subset ground = inst.Ground();
  const internal::ArgmaxResult a1 =
      internal::ArgmaxExtension(f, ground, Subset());
  Selection sel;
  sel.trace.push_back(Step(0, {a1.element}, "seed", a1.value));
  Selection rest =
      GreedySelect(f, ground.Without(a1.element), inst.k - 1, Subset(),
                   "ignore-a1");
  sel.set = rest.set.With(a1.element);
  for (TraceStep& step : rest.trace) {
    step.iteration += 1;
    sel.trace.push_back(std::move(step));
  }
  return Finalize(f, std::move(sel), inst.tau, f.QueryCount() - before);
}

RobustResult ThreePhase(const Instance& inst) {
  internal::RequireSizes(inst);
  internal::RequireTau(inst, 1, "three-phase");
  Require(inst.k >= 8, "three-phase needs k >= 8 (got k = " +
                           std::to_string(inst.k) +
                           "); ignore-first covers smaller k");
  const SetFunction& f = *inst.oracle;
  const std::int64_t before = f.QueryCount();
  const Subset ground = inst.Ground();
  Selection sel;
  const Seeds seeds = SeedPair(f, ground, sel);
  IgnorePhase(f, ground, inst.k, seeds.a1, "phase1", sel);
  IgnorePhase(f, ground, inst.k, seeds.a2, "phase2", sel);
  const int offset = static_cast<int>(sel.trace.size());
  Selection rest =
      GreedySelect(f, ground, inst.k - sel.set.Size(), sel.set, "phase3");
  sel.set = std::move(rest.set);
  for (TraceStep& step : rest.trace) {
    step.iteration += offset;
    sel.trace.push_back(std::move(step));
  }
  return Finalize(f, std::move(sel), inst.tau, f.QueryCount() - before);
}

RobustResult BiobjectiveRobust(const Instance& inst, int m) {
  internal::RequireSizes(inst);
  internal::RequireTau(inst, 1, "biobjective");
  Require(m >= 1, "biobjective needs m >= 1");
  Require(inst.k >= 2, "biobjective needs k >= 2");
  const SetFunction& f = *inst.oracle;
  const std::int64_t before = f.QueryCount();
  const Subset ground = inst.Ground();
  Selection sel;
  const Seeds seeds = SeedPair(f, ground, sel);
  const Subset seed_pair{seeds.a1, seeds.a2};
  while (sel.set.Size() < inst.k) {
    const Subset without1 = sel.set.Without(seeds.a1);
    const Subset without2 = sel.set.Without(seeds.a2);
    const double g_now = std::min(f.Eval(without1), f.Eval(without2));
    // Every minimizer must lie in {a_1, a_2}.
    bool inside = true;
    (sel.set - seed_pair).ForEach([&](int x) {
      if (inside && f.Eval(sel.set.Without(x)) <= g_now + kEpsCmp) {
        inside = false;
      }
    });
    if (!inside) break;
    const int l = std::min(m, inst.k - sel.set.Size());
    Subset best_s;
    double best_value = 0.0;
    bool found = false;
    ForEachCombination(ground - sel.set, l, [&](const Subset& s) {
      const double value =
          std::min(f.Eval(without1 | s), f.Eval(without2 | s));
      if (!found || value > best_value + kEpsCmp) {
        found = true;
        best_value = value;
        best_s = s;
      }
      return true;
    });
    if (!found) break;
    sel.trace.push_back(Step(static_cast<int>(sel.trace.size()),
                             best_s.Elements(), "phase1",
                             best_value - g_now));
    sel.set |= best_s;
  }
  const int offset = static_cast<int>(sel.trace.size());
  Selection rest =
      GreedySelect(f, ground, inst.k - sel.set.Size(), sel.set, "phase2");
  sel.set = std::move(rest.set);
  for (TraceStep& step : rest.trace) {
    step.iteration += offset;
    sel.trace.push_back(std::move(step));
  }
  return Finalize(f, std::move(sel), inst.tau, f.QueryCount() - before);
}

}  // namespace rsmax
