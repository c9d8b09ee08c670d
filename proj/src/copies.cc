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

const CopyMap& RequireCopies(const Instance& inst, int per_element,
                             const char* name) {
  if (!inst.copies.has_value()) {
    throw PreconditionError(std::string(name) + " needs a copy map");
  }
  const CopyMap& map = *inst.copies;
  for (int x = 0; x < map.original_size; ++x) {
    const int have = x < static_cast<int>(map.copies.size())
                         ? static_cast<int>(map.copies[x].size())
                         : 0;
    if (have < per_element) {
      throw PreconditionError(std::string(name) + " needs " +
                              std::to_string(per_element) +
                              " copies of every original");
    }
  }
  return map;
}

// Greedy order a_1..a_count over the originals.
std::vector<int> GreedyOrder(const SetFunction& f, const CopyMap& map,
                             int count, Selection& sel) {
  Require(count <= map.original_size,
          "not enough originals for the greedy prefix");
  Selection prefix = GreedySelect(f, map.Originals(), count);
  std::vector<int> order;
  for (const TraceStep& step : prefix.trace) {
    order.push_back(step.added.front());
  }
  sel.trace.insert(sel.trace.end(), prefix.trace.begin(), prefix.trace.end());
  return order;
}

void AddCopies(const CopyMap& map, int original, int count, int iteration,
               Selection& sel) {
  std::vector<int> added(map.copies[original].begin(),
                         map.copies[original].begin() + count);
  for (int id : added) sel.set.Insert(id);
  sel.trace.push_back(
      Step(iteration, std::move(added), "copy", static_cast<double>(original)));
}

}  // namespace

RobustResult TwoCopy(const Instance& inst) {
  internal::RequireSizes(inst);
  internal::RequireTau(inst, 1, "two-copy");
  Require(inst.k >= 4, "two-copy needs k >= 4");
  const CopyMap& map = RequireCopies(inst, 1, "two-copy");
  const SetFunction& f = *inst.oracle;
  const std::int64_t before = f.QueryCount();
  Selection sel;
  const std::vector<int> order = GreedyOrder(f, map, inst.k - 2, sel);
  for (int x : order) sel.set.Insert(x);
  AddCopies(map, order[0], 1, inst.k - 2, sel);
  AddCopies(map, order[1], 1, inst.k - 1, sel);
  return Finalize(f, std::move(sel), inst.tau, f.QueryCount() - before);
}

RobustResult CopiesBlock(const Instance& inst) {
  internal::RequireSizes(inst);
  const int tau = inst.tau;
  Require(tau >= 1, "copies-block needs tau >= 1");
  const int needed = 2 * tau * tau + 2 * tau;
  Require(inst.k > needed, "copies-block needs k > 2 tau^2 + 2 tau = " +
                               std::to_string(needed) + ", i.e. k >= " +
                               std::to_string(needed + 1));
  const CopyMap& map = RequireCopies(inst, tau, "copies-block");
  const SetFunction& f = *inst.oracle;
  const std::int64_t before = f.QueryCount();
  Selection sel;
  const std::vector<int> order =
      GreedyOrder(f, map, inst.k - 2 * tau * tau, sel);
  for (int x : order) sel.set.Insert(x);
  for (int i = 0; i < 2 * tau; ++i) {
    AddCopies(map, order[i], tau, static_cast<int>(order.size()) + i, sel);
  }
  return Finalize(f, std::move(sel), inst.tau, f.QueryCount() - before);
}

RobustResult CopiesGeometric(const Instance& inst) {
  internal::RequireSizes(inst);
  const int tau = inst.tau;
  Require(tau >= 1, "copies-geometric needs tau >= 1");
  int levels = 0;
  while ((1 << levels) < 2 * tau) ++levels;
  const int needed = 2 * tau * (levels + 1);
  Require(inst.k > needed,
          "copies-geometric needs k > 2 tau (ceil(log2 2tau) + 1) = " +
              std::to_string(needed) + ", i.e. k >= " +
              std::to_string(needed + 1));
  int total = 2 * tau;
  for (int i = 1; i <= levels; ++i) {
    const int per = (tau + (1 << (i - 1)) - 1) >> (i - 1);
    total += per << i;
  }
  Require(total <= inst.k, "copies-geometric places " + std::to_string(total) +
                               " elements before filling, more than k = " +
                               std::to_string(inst.k));
  const CopyMap& map = RequireCopies(inst, tau, "copies-geometric");
  const SetFunction& f = *inst.oracle;
  const std::int64_t before = f.QueryCount();
  Selection sel;
  const int prefix = std::max(2 * tau, (1 << (levels + 1)) - 2);
  const std::vector<int> order = GreedyOrder(f, map, prefix, sel);
  for (int i = 0; i < 2 * tau; ++i) sel.set.Insert(order[i]);
  int iteration = prefix;
  for (int i = 1; i <= levels; ++i) {
    const int per = (tau + (1 << (i - 1)) - 1) >> (i - 1);
    for (int j = (1 << i) - 1; j <= (1 << (i + 1)) - 2; ++j) {
      AddCopies(map, order[j - 1], per, iteration++, sel);
    }
  }
  Selection fill =
      GreedySelect(f, inst.Ground(), inst.k - sel.set.Size(), sel.set, "fill");
  sel.set = std::move(fill.set);
  for (TraceStep& step : fill.trace) {
    step.iteration += iteration;
    sel.trace.push_back(std::move(step));
  }
  return Finalize(f, std::move(sel), inst.tau, f.QueryCount() - before);
}

}  // namespace rsmax
