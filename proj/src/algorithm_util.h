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

#ifndef RSMAX_SRC_ALGORITHM_UTIL_H_
#define RSMAX_SRC_ALGORITHM_UTIL_H_

#include <cstdint>
#include <string>

#include "rsmax/algorithms.h"
#include "rsmax/errors.h"

namespace rsmax::internal {

struct ArgmaxResult {
  int element = -1;
  double value = 0.0;
};

// argmax over x in `candidates` of f(base + x); smallest id on ties.
inline ArgmaxResult ArgmaxExtension(const SetFunction& f,
                                    const Subset& candidates,
                                    const Subset& base) {
  ArgmaxResult best;
  candidates.ForEach([&](int x) {
    const double value = f.Eval(base.With(x));
    if (best.element < 0 || value > best.value + kEpsCmp) {
      best.element = x;
      best.value = value;
    }
  });
  return best;
}

inline void Require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

inline void RequireTau(const Instance& inst, int tau, const char* name) {
  Require(inst.tau == tau, std::string(name) + " needs tau = " +
                               std::to_string(tau) + " (got " +
                               std::to_string(inst.tau) + ")");
}

inline void RequireSizes(const Instance& inst) {
  Require(inst.k >= 1 && inst.k <= inst.n(), "need 1 <= k <= n");
  Require(inst.tau >= 0, "tau must be >= 0");
}

inline TraceStep Step(int iteration, std::vector<int> added, std::string rule,
                      double score, std::vector<double> values = {}) {
  return TraceStep{iteration, std::move(added), std::move(rule), score,
                   std::move(values)};
}

}  // namespace rsmax::internal

#endif  // RSMAX_SRC_ALGORITHM_UTIL_H_
