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

#include <cmath>
#include <string>

#include "algorithm_util.h"
#include "rsmax/algorithms.h"
#include "rsmax/errors.h"

namespace rsmax {

using internal::Require;

RobustResult BlocksGreedy(const Instance& inst, std::optional<int> tau_prime) {
  internal::RequireSizes(inst);
  const int tau = inst.tau;
  const int k = inst.k;
  Require(tau >= 1, "blocks needs tau >= 1");
  int block = 0;
  if (tau_prime.has_value()) {
    Require(*tau_prime >= tau, "blocks needs tau' >= tau");
    block = (*tau_prime + tau - 1) / tau;
  } else {
    Require(k >= 2, "blocks needs k >= 2");
    const double log_k = std::log(static_cast<double>(k));
    Require(tau <= std::sqrt(k / log_k),
            "blocks needs tau <= sqrt(k / ln k) = " +
                std::to_string(std::sqrt(k / log_k)));
    block = static_cast<int>(std::ceil(tau * log_k - 1e-12));
  }
  const int head = tau * block;
  Require(head < k, "blocks needs tau * block size = " + std::to_string(head) +
                        " < k = " + std::to_string(k));
  const SetFunction& f = *inst.oracle;
  const std::int64_t before = f.QueryCount();
  const Subset ground = inst.Ground();
  Selection sel;
  for (int j = 0; j < tau; ++j) {
    Selection x = GreedySelect(f, ground - sel.set, block, Subset(), "block");
    for (TraceStep& step : x.trace) {
      step.iteration = static_cast<int>(sel.trace.size());
      step.values = {static_cast<double>(j)};
      sel.trace.push_back(std::move(step));
    }
    sel.set |= x.set;
  }
  Selection fill = GreedySelect(f, ground - sel.set, k - head, Subset(), "fill");
  for (TraceStep& step : fill.trace) {
    step.iteration = static_cast<int>(sel.trace.size());
    sel.trace.push_back(std::move(step));
  }
  sel.set |= fill.set;
  RobustResult result =
      Finalize(f, std::move(sel), tau, f.QueryCount() - before);
  result.stats["block_size"] = block;
  return result;
}

}  // namespace rsmax
