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

#ifndef RSMAX_BOUNDS_H_
#define RSMAX_BOUNDS_H_

#include <string>
#include <vector>

#include "json.hpp"

namespace rsmax {

// beta(eta, alpha) = (e^alpha - 1) / (e^alpha - eta) for eta in [0, 1] and
// alpha >= 0. Throws DomainError outside that range; beta(1, 0) is 1.
double Beta(double eta, double alpha);

// beta(0, x) for x >= 0 and 0 for negative x.
double BetaZeroClamped(double x);

// Finite-k guarantees. Each is 0 when its argument leaves the valid range.
double TwoCopyBound(int k);                  // beta(0, (k-5)/(k-1))
double ThreePhaseBound(int k);               // 0.5 - 3/(2e^c) + e^(-c/2)
double CopiesBlockBound(int k, int tau);     // beta(0, (k-2tau^2-3tau)/(k-tau))
double CopiesGeometricBound(int k, int tau); // beta(0, (k-2tau(log2 2tau+1.5))/(k-tau))
// beta(0, (k-2m-2)/k) without the unpinned -Omega(1/m) term.
double BiobjectiveBound(int k, int m);
double GreedyFactor(int k);                  // 1 - (1 - 1/k)^k
double GeneralRobustBound(double alpha, int tau);  // alpha / (tau + 1)

// Limits as k grows.
double ThreePhaseLimit();   // 0.5 - 3/(2e) + e^(-1/2)
double BlocksLimit();       // (e - 1) / (2e - 1)

struct BoundRow {
  int k = 0;
  int tau = 0;
  int m = 0;
  double two_copy = 0.0;
  double three_phase = 0.0;
  double copies_block = 0.0;
  double copies_geometric = 0.0;
  double biobjective = 0.0;
  double blocks = 0.0;
  double general = 0.0;
};

// One row per (k, tau, m). Guarantees that need tau = 1 are 0 elsewhere.
std::vector<BoundRow> BoundTable(const std::vector<int>& ks,
                                 const std::vector<int>& taus,
                                 const std::vector<int>& ms);

std::string BoundTableCsv(const std::vector<BoundRow>& rows);
nlohmann::json BoundTableJson(const std::vector<BoundRow>& rows);

}  // namespace rsmax

#endif  // RSMAX_BOUNDS_H_
