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

#ifndef RSMAX_BRUTEFORCE_H_
#define RSMAX_BRUTEFORCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsmax/constraints.h"
#include "rsmax/instance.h"
#include "rsmax/oracle.h"

namespace rsmax {

// Enumeration caps. Exceeding one raises BudgetExceeded; nothing here ever
// falls back to sampling.
struct Budget {
  std::uint64_t minimizer = 10'000'000;
  std::uint64_t opt = 100'000'000;

  // Defaults, or both caps set to $RSMAX_BUDGET when that is a positive
  // integer.
  static Budget Default();
};

struct MinimizerResult {
  Subset z;
  double value = 0.0;
  // Every Z attaining `value` (within kEpsCmp), lexicographic; filled on
  // request only.
  std::vector<Subset> all_minimizers;
};

// Exact minimizer of f(A - Z) over Z <= A, |Z| <= tau. Only
// |Z| = min(tau, |A|) is enumerated, which loses nothing for monotone f.
// Ties go to the lexicographically smallest Z.
MinimizerResult FindMinimizer(const SetFunction& f, const Subset& a, int tau,
                              bool collect_all = false,
                              const Budget& budget = Budget::Default());

// g_tau(A).
double RobustValue(const SetFunction& f, const Subset& a, int tau,
                   const Budget& budget = Budget::Default());

struct OptResult {
  Subset set;
  double value = 0.0;
};

// argmax of g_tau(A) over A <= ground, |A| <= k. Since g_tau is monotone the
// search covers |A| = min(k, |ground|); ties go to the lexicographically
// smallest set.
OptResult OptRobust(const SetFunction& f, const Subset& ground, int k, int tau,
                    const Budget& budget = Budget::Default());
OptResult OptRobust(const Instance& inst,
                    const Budget& budget = Budget::Default());

// argmax of g_tau(A) over every independent A <= ground.
OptResult OptRobustConstrained(const SetFunction& f, const Subset& ground,
                               const IndependenceSystem& sys, int tau,
                               const Budget& budget = Budget::Default());

struct RestrictionChainReport {
  double robust_opt = 0.0;      // g_tau(OPT(k, N, tau))
  double restricted_opt = 0.0;  // f(OPT(k - tau, N - X, 0))
  double plain_opt = 0.0;       // f(OPT(k - tau, N, 0))
  bool holds = false;
};

// Evaluates g(OPT(k,N,tau)) <= f(OPT(k-tau, N-X, 0)) <= f(OPT(k-tau, N, 0))
// exactly; |X| <= tau.
RestrictionChainReport RestrictionChainCheck(const Instance& inst, const Subset& x,
                         const Budget& budget = Budget::Default());

struct TupleCertificate {
  Subset x;
  std::vector<double> values;
};

// First m-subset X of `s` (lexicographic) with
// f_i(X) >= ((m - 1) / |s|) targets_i - kEpsCmp for all i.
std::optional<TupleCertificate> ParetoSubset(
    const std::vector<OraclePtr>& fs, const Subset& s, int m,
    const std::vector<double>& targets,
    const Budget& budget = Budget::Default());

// Removes p elements from `s` one at a time. Each removal ranks the current
// set by the modular surrogates h_i(s_j) = f_i(s_j | s_1..s_{j-1}) in id
// order and drops the first of the 1 + ceil((l-1)k/l) smallest elements
// under h_1 that is also among the ceil((l-1)k/l) smallest under every other
// h_i. Requires |s| > p + 2l.
Subset PruneSet(const std::vector<OraclePtr>& fs, const Subset& s, int p);

// prod_{j<p} (k - j - 2l) / (k - j - l).
double PruneFactor(int k, int l, int p);

struct ConjectureReport {
  int l = 0;
  int trials = 0;
  int k_max = 0;
  std::uint64_t seed = 0;
  // Largest over trials and m of the smallest c for which some |X| = m has
  // f_i(X) >= ((m - c) / k) V_i for all i.
  double worst_c = 0.0;
  // worst_c restricted to each m (index m, 0 and 1 unused).
  std::vector<double> worst_c_by_m;
  nlohmann::json ToJson() const;
};

// Empirical scan of the multi-objective subset conjecture over random
// modular and coverage families with V_i = f_i(S). Requires k_max <= 12.
ConjectureReport ConjectureScan(int l, int trials, int k_max,
                                std::uint64_t seed);

}  // namespace rsmax

#endif  // RSMAX_BRUTEFORCE_H_
