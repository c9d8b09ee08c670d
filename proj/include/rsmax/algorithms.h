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

#ifndef RSMAX_ALGORITHMS_H_
#define RSMAX_ALGORITHMS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsmax/bruteforce.h"
#include "rsmax/constraints.h"
#include "rsmax/instance.h"
#include "rsmax/oracle.h"

namespace rsmax {

// One decision of an algorithm. `values` carries rule-specific numbers that
// tests check against the analysis (documented per algorithm).
struct TraceStep {
  int iteration = 0;
  std::vector<int> added;
  std::string rule;
  double score = 0.0;
  std::vector<double> values;
};

struct Selection {
  Subset set;
  std::vector<TraceStep> trace;
};

struct RobustResult {
  Subset chosen;
  // Empty when the minimizer enumeration exceeded its budget; g_value is
  // then NaN.
  std::optional<Subset> minimizer;
  bool minimizer_infeasible = false;
  double g_value = 0.0;
  double f_value = 0.0;
  // Oracle queries made while selecting (the final g/f evaluation excluded).
  std::int64_t queries = 0;
  std::vector<TraceStep> trace;
  // Named diagnostics, e.g. the accepted estimate of constant_tau_scheme.
  std::map<std::string, double> stats;
};

// Attaches f(A), the exact minimizer and g_tau(A) to a selection.
RobustResult Finalize(const SetFunction& f, Selection selection, int tau,
                      std::int64_t queries,
                      const Budget& budget = Budget::Default());

// -- Greedy family -----------------------------------------------------------

// Adds `steps` elements of `ground` - `start` to `start`, each time the one
// maximizing f(A + x) (smallest id on ties). Trace scores are marginals.
// Makes at most steps * |ground| queries, plus one for f(start) when `start`
// is non-empty.
Selection GreedySelect(const SetFunction& f, const Subset& ground, int steps,
                       const Subset& start = Subset(),
                       const std::string& rule = "greedy");

RobustResult Greedy(const Instance& inst);

// Descending thresholds: w starts at the best singleton value and shrinks by
// (1 - eps) per pass; each pass adds, in id order, every element whose
// marginal reaches w. Stops at k elements or once w < (eps / n) w_0.
RobustResult GreedyThreshold(const Instance& inst, double eps);

// The k largest singletons.
RobustResult NaiveTopK(const Instance& inst);

// -- Copies ------------------------------------------------------------------

// Greedy a_1..a_{k-2} over the originals plus one copy each of a_1 and a_2.
// Needs tau = 1, k >= 4 and a copy map.
RobustResult TwoCopy(const Instance& inst);

// Greedy a_1..a_{k-2 tau^2} over the originals plus tau copies of each of
// a_1..a_{2 tau}. Needs k > 2 tau^2 + 2 tau.
RobustResult CopiesBlock(const Instance& inst);

// Greedy A_{2 tau} over the originals, then ceil(tau / 2^(i-1)) copies of
// each of a_{2^i - 1}..a_{2^(i+1) - 2} for i = 1..ceil(log2(2 tau)), then
// greedy over everything up to k. Needs k > 2 tau (ceil(log2(2 tau)) + 1)
// and room for all copies.
RobustResult CopiesGeometric(const Instance& inst);

// -- tau = 1 without copies ----------------------------------------------------

// a_1 = best singleton, then greedy on f(x | A - a_1).
RobustResult IgnoreFirst(const Instance& inst);

// Seeds {a_1, a_2}; phase 1 adds argmax f(x | A - a_1) while
// f(a_1 | A - a_1) > f(A) / 3, phase 2 the same for a_2, phase 3 is plain
// greedy. Needs k >= 8. Phase steps record values = {guard marginal, f(A)}
// taken just before the addition.
RobustResult ThreePhase(const Instance& inst);

// Seeds {a_1, a_2}; while every minimizer of A lies in {a_1, a_2}, adds the
// lexicographically first l-subset S (l = min(m, k - |A|)) maximizing
// min(f(S + A - a_1), f(S + A - a_2)); then singleton greedy. m >= 1.
RobustResult BiobjectiveRobust(const Instance& inst, int m);

// -- General tau -------------------------------------------------------------

// tau blocks of ceil(tau' / tau) elements, each built greedily from scratch
// over the unselected elements, then greedy on N - A_0 up to k. The default
// tau' = tau^2 ln k requires tau <= sqrt(k / ln k).
RobustResult BlocksGreedy(const Instance& inst,
                          std::optional<int> tau_prime = std::nullopt);

// Finds X with |X| = size, X <= candidates and fs[i](X) >= targets[i] for
// all i, or reports that none exists. Guarantee() is the factor rho by which
// a returned set may fall short of the targets.
class MultiObjectiveSolver {
 public:
  virtual ~MultiObjectiveSolver() = default;
  virtual double Guarantee() const = 0;
  virtual std::optional<Subset> Solve(const std::vector<OraclePtr>& fs,
                                      const std::vector<double>& targets,
                                      int size,
                                      const Subset& candidates) const = 0;
};

// Exhaustive search in lexicographic order; rho = 1.
class BruteForceMultiObjectiveSolver : public MultiObjectiveSolver {
 public:
  explicit BruteForceMultiObjectiveSolver(Budget budget = Budget::Default())
      : budget_(budget) {}

  double Guarantee() const override { return 1.0; }
  std::optional<Subset> Solve(const std::vector<OraclePtr>& fs,
                              const std::vector<double>& targets, int size,
                              const Subset& candidates) const override;

 private:
  Budget budget_;
};

// A_0 from BlocksGreedy with tau' = 3 tau^2, the family f(. | Y) over
// Y <= A_0 with |Y| >= 3 tau^2 - tau, and a search for the largest estimate
// OPT' the solver can certify. Stats: lb, ub, opt_estimate, solver_calls,
// family_size.
RobustResult ConstantTauScheme(const Instance& inst,
                               const MultiObjectiveSolver& solver,
                               double delta);

// Base algorithm for general_robust: a set S <= ground with S u Z
// independent, Z = sys.pinned().
using BaseAlgorithm = std::function<Subset(
    const SetFunction& f, const Subset& ground, const RestrictedSystem& sys)>;

// Enumerative scheme over the independence system of `inst` (|A| <= k when
// none is attached). Trace rules: "G" and "M" candidates, "z" pivots. "M"
// steps at the top level carry values = {f(z), f(M), g(M), z in minimizer}.
RobustResult GeneralRobust(const Instance& inst,
                           const BaseAlgorithm& base = IndependenceGreedy,
                           const Budget& budget = Budget::Default());

// -- Multi-objective greedy ----------------------------------------------------

struct GeneralizedGreedyResult {
  Subset set;
  bool feasible = true;
  // values[j][i] = f_i(A_j) after round j (round 0 is the empty set).
  std::vector<std::vector<double>> values;
  std::vector<int> round_sizes;
  std::int64_t queries = 0;
};

// Rounds of m' = min(m, l - |A|) elements: each takes the lexicographically
// first X <= N - A with f_i(X | A) >= ((m' - 1) / k) (V_i - f_i(A)) for
// all i. Stops at |A| = l, or with feasible = false when no X qualifies.
GeneralizedGreedyResult GeneralizedGreedy(const std::vector<OraclePtr>& fs,
                                          const std::vector<double>& targets,
                                          int k, int l, int m);

}  // namespace rsmax

#endif  // RSMAX_ALGORITHMS_H_
