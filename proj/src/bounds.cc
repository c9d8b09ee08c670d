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

#include "rsmax/bounds.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "rsmax/errors.h"

namespace rsmax {
namespace {

constexpr double kE = std::numbers::e;

std::string Format(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

}  // namespace

double Beta(double eta, double alpha) {
  if (!(eta >= 0.0 && eta <= 1.0) || !(alpha >= 0.0)) {
    throw DomainError("beta needs eta in [0,1] and alpha >= 0");
  }
  const double ea = std::exp(alpha);
  if (ea - eta == 0.0) return 1.0;
  return (ea - 1.0) / (ea - eta);
}

double BetaZeroClamped(double x) { return x <= 0.0 ? 0.0 : Beta(0.0, x); }

double TwoCopyBound(int k) {
  if (k <= 1) return 0.0;
  return BetaZeroClamped(static_cast<double>(k - 5) / (k - 1));
}

double ThreePhaseBound(int k) {
  if (k <= 1) return 0.0;
  const double c = static_cast<double>(k - 4) / (k - 1);
  return std::max(0.0, 0.5 - 3.0 / (2.0 * std::exp(c)) + std::exp(-c / 2.0));
}

double CopiesBlockBound(int k, int tau) {
  if (k <= tau) return 0.0;
  return BetaZeroClamped(static_cast<double>(k - 2 * tau * tau - 3 * tau) /
                         (k - tau));
}

double CopiesGeometricBound(int k, int tau) {
  if (k <= tau || tau < 1) return 0.0;
  const double used = 2.0 * tau * (std::log2(2.0 * tau) + 1.5);
  return BetaZeroClamped((k - used) / (k - tau));
}

double BiobjectiveBound(int k, int m) {
  if (k <= 0) return 0.0;
  return BetaZeroClamped(static_cast<double>(k - 2 * m - 2) / k);
}

double GreedyFactor(int k) {
  if (k <= 0) return 0.0;
  return 1.0 - std::pow(1.0 - 1.0 / k, k);
}

double GeneralRobustBound(double alpha, int tau) { return alpha / (tau + 1); }

double ThreePhaseLimit() {
  return 0.5 - 3.0 / (2.0 * kE) + std::exp(-0.5);
}

double BlocksLimit() { return (kE - 1.0) / (2.0 * kE - 1.0); }

std::vector<BoundRow> BoundTable(const std::vector<int>& ks,
                                 const std::vector<int>& taus,
                                 const std::vector<int>& ms) {
  std::vector<BoundRow> rows;
  for (int k : ks) {
    for (int tau : taus) {
      for (int m : ms) {
        if (k <= 0 || tau < 0 || m <= 0) {
          throw ConfigError("bounds need k > 0, tau >= 0, m > 0");
        }
        BoundRow row;
        row.k = k;
        row.tau = tau;
        row.m = m;
        if (tau == 1) {
          row.two_copy = TwoCopyBound(k);
          row.three_phase = ThreePhaseBound(k);
          row.biobjective = BiobjectiveBound(k, m);
        }
        if (tau >= 1) {
          row.copies_block = CopiesBlockBound(k, tau);
          row.copies_geometric = CopiesGeometricBound(k, tau);
          row.blocks = BlocksLimit();
        }
        row.general = GeneralRobustBound(GreedyFactor(k), tau);
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string BoundTableCsv(const std::vector<BoundRow>& rows) {
  std::string out =
      "k,tau,m,two_copy,three_phase,copies_block,copies_geometric,"
      "biobjective_no_omega,blocks_limit,general_greedy_base\n";
  for (const BoundRow& r : rows) {
    out += std::to_string(r.k) + ',' + std::to_string(r.tau) + ',' +
           std::to_string(r.m) + ',' + Format(r.two_copy) + ',' +
           Format(r.three_phase) + ',' + Format(r.copies_block) + ',' +
           Format(r.copies_geometric) + ',' + Format(r.biobjective) + ',' +
           Format(r.blocks) + ',' + Format(r.general) + '\n';
  }
  return out;
}

nlohmann::json BoundTableJson(const std::vector<BoundRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const BoundRow& r : rows) {
    out.push_back({{"k", r.k},
                   {"tau", r.tau},
                   {"m", r.m},
                   {"two_copy", r.two_copy},
                   {"three_phase", r.three_phase},
                   {"copies_block", r.copies_block},
                   {"copies_geometric", r.copies_geometric},
                   {"biobjective_no_omega", r.biobjective},
                   {"blocks_limit", r.blocks},
                   {"general_greedy_base", r.general}});
  }
  return out;
}

}  // namespace rsmax
