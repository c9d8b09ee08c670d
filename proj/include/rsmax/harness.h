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

#ifndef RSMAX_HARNESS_H_
#define RSMAX_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsmax/algorithms.h"
#include "rsmax/bruteforce.h"
#include "rsmax/instance.h"

namespace rsmax {

struct AlgorithmRequest {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
};

// Parsed from
//   {"instances": [{"generator": "random-coverage", "n": 8, "k": 3,
//                   "tau": 1, "seeds": [1, 2]}, ...],
//    "algorithms": [{"id": "greedy"}, {"id": "biobjective", "m": 2}],
//    "budget": {"minimizer": 1e7, "opt": 1e8}, "threads": 4,
//    "compute_opt": true, "tolerance": 1e-9}
// An instance entry with "seeds" expands to one instance per seed.
struct ExperimentConfig {
  std::vector<Instance> instances;
  std::vector<AlgorithmRequest> algorithms;
  Budget budget;
  int threads = 1;
  bool compute_opt = true;
  double tolerance = 1e-9;
};

// Throws ConfigError on any malformed entry or unknown algorithm id.
// $RSMAX_BUDGET takes precedence over the "budget" key.
ExperimentConfig ParseConfig(const nlohmann::json& j);
ExperimentConfig LoadConfig(const std::string& path);

struct RunRecord {
  std::string instance;
  std::string algorithm;
  std::string params;
  int k = 0;
  int tau = 0;
  // "ok", or the error that stopped the algorithm.
  std::string status = "ok";
  std::optional<double> f;
  std::optional<double> g;
  // Empty when not computed; opt_status says why.
  std::optional<double> opt;
  std::string opt_status = "ok";
  std::optional<double> ratio;
  std::optional<std::int64_t> queries;
  double ms = 0.0;
  std::string chosen;
  std::string trace_digest;
};

// Runs every instance against every algorithm on fresh oracle clones. Rows
// follow config order (instances outer) regardless of the thread count.
std::vector<RunRecord> RunExperiment(const ExperimentConfig& config);

// Columns instance,algorithm,params,k,tau,f,g,opt,ratio,queries,ms.
// `with_timing` = false blanks the ms column for determinism checks.
std::string RecordsToCsv(const std::vector<RunRecord>& records,
                         bool with_timing = true);
nlohmann::json RecordsToJson(const std::vector<RunRecord>& records);

// Writes results.csv and results.json into `dir`, creating it if needed.
void WriteResults(const std::vector<RunRecord>& records,
                  const std::string& dir);

// Hex digest of a trace, for spotting behavioral changes between runs.
std::string TraceDigest(const std::vector<TraceStep>& trace);

}  // namespace rsmax

#endif  // RSMAX_HARNESS_H_
