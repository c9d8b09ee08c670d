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

#include "rsmax/bruteforce.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>

#include "rsmax/errors.h"

namespace rsmax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckBudget(std::uint64_t needed, std::uint64_t cap, const char* what) {
  if (needed > cap) {
    throw BudgetExceeded(std::string(what) + " needs " +
                         std::to_string(needed) + " evaluations, cap is " +
                         std::to_string(cap));
  }
}

// g_tau(A), giving up as soon as the running minimum drops to `floor`.
// Returns the running minimum in that case.
double RobustValueAbove(const SetFunction& f, const Subset& a, int tau,
                        double floor) {
  const int r = std::min(tau, a.Size());
  double best = kInf;
  ForEachCombination(a, r, [&](const Subset& z) {
    best = std::min(best, f.Eval(a - z));
    return best > floor;
  });
  return best;
}

std::vector<int> RankOrder(const std::vector<double>& h) {
  std::vector<int> order(h.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return h[a] < h[b]; });
  return order;
}

}  // namespace

Budget Budget::Default() {
  Budget budget;
  if (const char* env = std::getenv("RSMAX_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      budget.minimizer = value;
      budget.opt = value;
    }
  }
  return budget;
}

MinimizerResult FindMinimizer(const SetFunction& f, const Subset& a, int tau,
                              bool collect_all, const Budget& budget) {
  if (tau < 0) throw PreconditionError("tau must be >= 0");
  const int r = std::min(tau, a.Size());
  CheckBudget(Binomial(a.Size(), r), budget.minimizer, "minimizer");
  MinimizerResult result;
  result.value = kInf;
  ForEachCombination(a, r, [&](const Subset& z) {
    const double value = f.Eval(a - z);
    if (value < result.value - kEpsCmp) {
      result.value = value;
      result.z = z;
      if (collect_all) result.all_minimizers.clear();
    }
    if (collect_all && value <= result.value + kEpsCmp) {
      result.all_minimizers.push_back(z);
    }
    return true;
  });
  return result;
}

double RobustValue(const SetFunction& f, const Subset& a, int tau,
                   const Budget& budget) {
  return FindMinimizer(f, a, tau, false, budget).value;
}

OptResult OptRobust(const SetFunction& f, const Subset& ground, int k, int tau,
                    const Budget& budget) {
  if (k < 0 || tau < 0) throw PreconditionError("k and tau must be >= 0");
  const int size = std::min(k, ground.Size());
  const int r = std::min(tau, size);
  CheckBudget(SaturatingMul(Binomial(ground.Size(), size), Binomial(size, r)),
              budget.opt, "robust OPT");
  OptResult best;
  best.value = -kInf;
  ForEachCombination(ground, size, [&](const Subset& a) {
    const double value = RobustValueAbove(f, a, tau, best.value + kEpsCmp);
    if (value > best.value + kEpsCmp) {
      best.value = value;
      best.set = a;
    }
    return true;
  });
  return best;
}

OptResult OptRobust(const Instance& inst, const Budget& budget) {
  if (inst.constraint != nullptr) {
    return OptRobustConstrained(*inst.oracle, inst.Ground(), *inst.constraint,
                                inst.tau, budget);
  }
  return OptRobust(*inst.oracle, inst.Ground(), inst.k, inst.tau, budget);
}

OptResult OptRobustConstrained(const SetFunction& f, const Subset& ground,
                               const IndependenceSystem& sys, int tau,
                               const Budget& budget) {
  const int n = ground.Size();
  std::uint64_t total = 0;
  for (int s = 0; s <= n; ++s) {
    total += SaturatingMul(Binomial(n, s), Binomial(s, std::min(tau, s)));
    if (total > budget.opt) break;
  }
  CheckBudget(total, budget.opt, "constrained robust OPT");
  OptResult best;
  best.value = -kInf;
  // Larger sets first: by monotonicity a maximal independent set is optimal
  // and usually found early, which makes the pruning effective.
  for (int s = n; s >= 0; --s) {
    ForEachCombination(ground, s, [&](const Subset& a) {
      if (!sys.IsIndependent(a)) return true;
      // Near-ties are evaluated in full so the lexicographic rule is exact.
      const double value =
          RobustValueAbove(f, a, tau, best.value - 2 * kEpsCmp);
      if (value > best.value + kEpsCmp) {
        best.value = value;
        best.set = a;
      } else if (value >= best.value - kEpsCmp && a < best.set) {
        best.set = a;
      }
      return true;
    });
  }
  return best;
}

RestrictionChainReport RestrictionChainCheck(const Instance& inst, const Subset& x,
                         const Budget& budget) {
  if (x.Size() > inst.tau) throw PreconditionError("need |X| <= tau");
  if (!x.IsSubsetOf(inst.Ground())) throw DomainError("X outside N");
  const SetFunction& f = *inst.oracle;
  const Subset ground = inst.Ground();
  RestrictionChainReport report;
  report.robust_opt = OptRobust(f, ground, inst.k, inst.tau, budget).value;
  report.restricted_opt =
      OptRobust(f, ground - x, inst.k - inst.tau, 0, budget).value;
  report.plain_opt = OptRobust(f, ground, inst.k - inst.tau, 0, budget).value;
  report.holds = report.robust_opt <= report.restricted_opt + kEpsCmp &&
                 report.restricted_opt <= report.plain_opt + kEpsCmp;
  return report;
}

std::optional<TupleCertificate> ParetoSubset(const std::vector<OraclePtr>& fs,
                                             const Subset& s, int m,
                                             const std::vector<double>& targets,
                                             const Budget& budget) {
  const int k = s.Size();
  if (fs.size() != targets.size()) {
    throw PreconditionError("need one target per function");
  }
  if (m < 1 || m > k) throw PreconditionError("need 1 <= m <= |S|");
  CheckBudget(SaturatingMul(Binomial(k, m), fs.size()), budget.opt,
              "pareto subset");
  const double scale = static_cast<double>(m - 1) / k;
  std::optional<TupleCertificate> found;
  ForEachCombination(s, m, [&](const Subset& x) {
    TupleCertificate cert{x, {}};
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const double value = fs[i]->Eval(x);
      if (value < scale * targets[i] - kEpsCmp) return true;
      cert.values.push_back(value);
    }
    found = std::move(cert);
    return false;
  });
  return found;
}

Subset PruneSet(const std::vector<OraclePtr>& fs, const Subset& s, int p) {
  const int l = static_cast<int>(fs.size());
  const int k = s.Size();
  if (l < 1) throw PreconditionError("need at least one function");
  if (p < 0) throw PreconditionError("p must be >= 0");
  if (k <= p + 2 * l) {
    throw PreconditionError("pruning needs |S| > p + 2l (|S|=" +
                            std::to_string(k) + ", p=" + std::to_string(p) +
                            ", l=" + std::to_string(l) + ")");
  }
  Subset current = s;
  for (int step = 0; step < p; ++step) {
    const std::vector<int> ids = current.Elements();
    const int size = static_cast<int>(ids.size());
    const int q = (size * (l - 1) + l - 1) / l;
    std::vector<std::vector<int>> rank(l, std::vector<int>(size));
    std::vector<int> order_h1;
    for (int i = 0; i < l; ++i) {
      std::vector<double> h(size);
      Subset prefix;
      double before = fs[i]->Eval(prefix);
      for (int j = 0; j < size; ++j) {
        prefix.Insert(ids[j]);
        const double after = fs[i]->Eval(prefix);
        h[j] = after - before;
        before = after;
      }
      const std::vector<int> order = RankOrder(h);
      for (int r = 0; r < size; ++r) rank[i][order[r]] = r;
      if (i == 0) order_h1 = order;
    }
    int drop = -1;
    for (int r = 0; r <= std::min(q, size - 1) && drop < 0; ++r) {
      const int j = order_h1[r];
      bool ok = true;
      for (int i = 1; i < l && ok; ++i) ok = rank[i][j] < q;
      if (ok) drop = j;
    }
    if (drop < 0) throw Error("pruning found no removable element");
    current.Erase(ids[drop]);
  }
  return current;
}

double PruneFactor(int k, int l, int p) {
  double factor = 1.0;
  for (int j = 0; j < p; ++j) {
    factor *= static_cast<double>(k - j - 2 * l) / (k - j - l);
  }
  return factor;
}

nlohmann::json ConjectureReport::ToJson() const {
  nlohmann::json by_m = nlohmann::json::object();
  for (std::size_t m = 1; m < worst_c_by_m.size(); ++m) {
    if (std::isfinite(worst_c_by_m[m])) {
      by_m[std::to_string(m)] = worst_c_by_m[m];
    }
  }
  return {{"l", l},         {"trials", trials},     {"k_max", k_max},
          {"seed", seed},   {"worst_c", worst_c},   {"worst_c_by_m", by_m}};
}

ConjectureReport ConjectureScan(int l, int trials, int k_max,
                                std::uint64_t seed) {
  if (l < 1) throw PreconditionError("conjecture scan needs l >= 1");
  if (k_max < 2 || k_max > 12) {
    throw PreconditionError("conjecture scan needs 2 <= k_max <= 12");
  }
  ConjectureReport report;
  report.l = l;
  report.trials = trials;
  report.k_max = k_max;
  report.seed = seed;
  report.worst_c = -kInf;
  report.worst_c_by_m.assign(k_max + 1, -kInf);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_k(2, k_max);
  std::uniform_int_distribution<int> weight(0, 9);
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    const int k = pick_k(rng);
    std::vector<OraclePtr> fs;
    for (int i = 0; i < l; ++i) {
      if (coin(rng)) {
        std::vector<double> w(k);
        for (double& v : w) v = weight(rng);
        fs.push_back(std::make_shared<ModularFunction>(std::move(w)));
      } else {
        const int universe = 2 * k;
        std::vector<std::vector<int>> sets(k);
        for (auto& set : sets) {
          for (int u = 0; u < universe; ++u) {
            if (unit(rng) < 0.3) set.push_back(u);
          }
        }
        fs.push_back(std::make_shared<CoverageFunction>(universe,
                                                        std::move(sets)));
      }
    }
    const Subset s = Subset::Range(k);
    std::vector<double> v(l);
    for (int i = 0; i < l; ++i) v[i] = fs[i]->Eval(s);
    for (int m = 1; m <= k; ++m) {
      double best_c = kInf;
      ForEachCombination(s, m, [&](const Subset& x) {
        double c = -kInf;
        for (int i = 0; i < l; ++i) {
          if (v[i] <= 0.0) continue;
          c = std::max(c, m - k * fs[i]->Eval(x) / v[i]);
        }
        best_c = std::min(best_c, c);
        return true;
      });
      if (!std::isfinite(best_c)) continue;
      report.worst_c_by_m[m] = std::max(report.worst_c_by_m[m], best_c);
      report.worst_c = std::max(report.worst_c, best_c);
    }
  }
  return report;
}

}  // namespace rsmax
