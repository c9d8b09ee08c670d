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

#ifndef RSMAX_CHECKS_H_
#define RSMAX_CHECKS_H_

#include <cstdint>
#include <string>

#include "rsmax/oracle.h"

namespace rsmax {

struct OracleCheckReport {
  int samples = 0;
  int monotonicity_violations = 0;
  int submodularity_violations = 0;
  bool empty_is_zero = true;
  double worst_violation = 0.0;
  std::string first_failure;

  bool ok() const {
    return empty_is_zero && monotonicity_violations == 0 &&
           submodularity_violations == 0;
  }
};

// Draws `samples` random triples B <= A, a not in A and checks
// f(B) <= f(A) and f(A + a) - f(A) <= f(B + a) - f(B), both up to `tol`.
OracleCheckReport CheckOracle(const SetFunction& f, int samples,
                              std::uint64_t seed, double tol = kEpsCmp);

// The same two properties over every pair (A, A + a) and every (A, a, b).
// Requires n <= 16.
OracleCheckReport CheckExhaustive(const SetFunction& f, double tol = kEpsCmp);

}  // namespace rsmax

#endif  // RSMAX_CHECKS_H_
