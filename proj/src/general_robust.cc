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

#include <string>
#include <vector>

#include "algorithm_util.h"
#include "rsmax/algorithms.h"
#include "rsmax/errors.h"

namespace rsmax {
namespace {

struct Context {
  const SetFunction& f;
  const BaseAlgorithm& base;
  const Budget& budget;
  std::vector<TraceStep>& trace;
};

// A_tau(ground, Z) with Z = sys.pinned(); returns the free part.
Subset Recurse(const Context& ctx, const Subset& ground,
               const RestrictedSystem& sys, int tau, int depth) {
  if (tau == 0) return ctx.base(ctx.f, ground, sys);
  Subset removed;
  Subset best;
  double best_value = 0.0;
  bool have_best = false;
  int iteration = 0;
  auto consider = [&](const Subset& candidate) {
    const MinimizerResult z =
        FindMinimizer(ctx.f, candidate, tau, depth == 0, ctx.budget);
    if (!have_best || z.value > best_value + kEpsCmp) {
      have_best = true;
      best_value = z.value;
      best = candidate;
    }
    return z;
  };
  while (!(ground - removed).Empty()) {
    const Subset g = ctx.base(ctx.f, ground - removed, sys);
    if (g.Empty()) break;
    const internal::ArgmaxResult pivot =
        internal::ArgmaxExtension(ctx.f, g, Subset());
    removed.Insert(pivot.element);
    const RestrictedSystem narrowed = sys.Narrow(Subset{pivot.element});
    const Subset m =
        Recurse(ctx, ground - removed, narrowed, tau - 1, depth + 1)
            .With(pivot.element);
    const MinimizerResult g_min = consider(g);
    const MinimizerResult m_min = consider(m);
    if (depth == 0) {
      ctx.trace.push_back(
          internal::Step(iteration, g.Elements(), "G", g_min.value));
      ctx.trace.push_back(
          internal::Step(iteration, {pivot.element}, "z", pivot.value));
      double pivot_in_minimizer = 0.0;
      for (const Subset& z : m_min.all_minimizers) {
        if (z.Contains(pivot.element)) pivot_in_minimizer = 1.0;
      }
      ctx.trace.push_back(internal::Step(
          iteration, m.Elements(), "M", m_min.value,
          {pivot.value, ctx.f.Eval(m), m_min.value, pivot_in_minimizer}));
    }
    ++iteration;
  }
  return best;
}

}  // namespace

RobustResult GeneralRobust(const Instance& inst, const BaseAlgorithm& base,
                           const Budget& budget) {
  internal::RequireSizes(inst);
  const SetFunction& f = *inst.oracle;
  SystemPtr sys = inst.constraint != nullptr
                      ? inst.constraint
                      : MakeCardinalitySystem(inst.n(), inst.k);
  internal::Require(sys->ground_size() == inst.n(),
                    "constraint and oracle disagree on the ground set");
  const std::int64_t before = f.QueryCount();
  Selection sel;
  const Context ctx{f, base, budget, sel.trace};
  sel.set = Recurse(ctx, inst.Ground(), RestrictSystem(sys, Subset()),
                    inst.tau, 0);
  return Finalize(f, std::move(sel), inst.tau, f.QueryCount() - before,
                  budget);
}

}  // namespace rsmax
