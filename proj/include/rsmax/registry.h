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

#ifndef RSMAX_REGISTRY_H_
#define RSMAX_REGISTRY_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "rsmax/algorithms.h"
#include "rsmax/instance.h"

namespace rsmax {

// greedy, greedy-threshold, naive-topk, two-copy, copies-block,
// copies-geometric, ignore-first, three-phase, biobjective, blocks,
// constant-tau, general.
const std::vector<std::string>& AlgorithmIds();
bool HasAlgorithm(const std::string& id);

// Runs `id` with parameters from `params` (keys m, eps, delta, tau-prime).
// Unknown ids and malformed or unexpected parameters raise ConfigError;
// algorithm preconditions raise PreconditionError.
RobustResult RunAlgorithm(const std::string& id, const Instance& inst,
                          const nlohmann::json& params,
                          const Budget& budget = Budget::Default());

// Throws ConfigError for an unknown id or parameters it does not accept.
void ValidateAlgorithmRequest(const std::string& id,
                              const nlohmann::json& params);

// "key=value;..." in key order, "" for no parameters.
std::string CanonicalParams(const nlohmann::json& params);

// Builds an instance from a generator name and its parameters; shared by
// the harness config and the `gen` command. Generators: greedy-failure,
// partial-copies, random-coverage, random-modular, modular, copies,
// hardness, file.
Instance GenerateInstance(const std::string& generator,
                          const nlohmann::json& params);
const std::vector<std::string>& GeneratorNames();

}  // namespace rsmax

#endif  // RSMAX_REGISTRY_H_
