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

#include "rsmax/checks.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rsmax/errors.h"

namespace rsmax {
namespace {

void Record(OracleCheckReport& report, double excess, const std::string& what) {
  report.worst_violation = std::max(report.worst_violation, excess);
  if (report.first_failure.empty()) report.first_failure = what;
}

}  // namespace

OracleCheckReport CheckOracle(const SetFunction& f, int samples,
                              std::uint64_t seed, double tol) {
  OracleCheckReport report;
  report.empty_is_zero = std::abs(f.Eval(Subset())) <= tol;
  if (!report.empty_is_zero) report.first_failure = "f(empty) != 0";

  const int n = f.ground_size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int s = 0; s < samples; ++s) {
    // A is drawn with a random density, B keeps a random fraction of A.
    const double density = unit(rng);
    const double keep = unit(rng);
    Subset a;
    Subset b;
    for (int e = 0; e < n; ++e) {
      if (unit(rng) < density) {
        a.Insert(e);
        if (unit(rng) < keep) b.Insert(e);
      }
    }
    ++report.samples;
    const double fa = f.Eval(a);
    const double fb = f.Eval(b);
    if (fb > fa + tol) {
      ++report.monotonicity_violations;
      Record(report, fb - fa,
             "f(" + b.ToString() + ") > f(" + a.ToString() + ")");
    }
    if (a.Size() == n) continue;
    int x = pick(rng);
    while (a.Contains(x)) x = (x + 1) % n;
    const double gain_a = f.Eval(a.With(x)) - fa;
    const double gain_b = f.Eval(b.With(x)) - fb;
    if (gain_a > gain_b + tol) {
      ++report.submodularity_violations;
      Record(report, gain_a - gain_b,
             "gain of " + std::to_string(x) + " on " + a.ToString() +
                 " exceeds gain on " + b.ToString());
    }
  }
  return report;
}

OracleCheckReport CheckExhaustive(const SetFunction& f, double tol) {
  const int n = f.ground_size();
  if (n > 16) throw BudgetExceeded("exhaustive oracle check needs n <= 16");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<double> table(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    table[mask] = f.Eval(Subset::FromMask(mask));
  }
  OracleCheckReport report;
  report.empty_is_zero = std::abs(table[0]) <= tol;
  if (!report.empty_is_zero) report.first_failure = "f(empty) != 0";
  // Local forms suffice: f(A) <= f(A + a) and
  // f(A + a) + f(A + b) >= f(A + a + b) + f(A).
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int a = 0; a < n; ++a) {
      const std::uint64_t bit_a = std::uint64_t{1} << a;
      if (mask & bit_a) continue;
      ++report.samples;
      if (table[mask] > table[mask | bit_a] + tol) {
        ++report.monotonicity_violations;
        Record(report, table[mask] - table[mask | bit_a],
               "adding " + std::to_string(a) + " decreases f");
      }
      for (int b = a + 1; b < n; ++b) {
        const std::uint64_t bit_b = std::uint64_t{1} << b;
        if (mask & bit_b) continue;
        const double lhs = table[mask | bit_a] + table[mask | bit_b];
        const double rhs = table[mask | bit_a | bit_b] + table[mask];
        if (rhs > lhs + tol) {
          ++report.submodularity_violations;
          Record(report, rhs - lhs,
                 "pair " + std::to_string(a) + "," + std::to_string(b) +
                     " on " + Subset::FromMask(mask).ToString());
        }
      }
    }
  }
  return report;
}

}  // namespace rsmax
