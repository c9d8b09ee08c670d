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

#include "rsmax/registry.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "rsmax/errors.h"
#include "rsmax/instance_json.h"

namespace rsmax {
namespace {

using Json = nlohmann::json;

void CheckKeys(const Json& params, const std::set<std::string>& allowed,
               const std::string& owner) {
  if (params.is_null()) return;
  if (!params.is_object()) {
    throw ConfigError(owner + ": parameters must be an object");
  }
  for (const auto& [key, value] : params.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError(owner + ": unexpected parameter '" + key + "'");
    }
  }
}

bool Has(const Json& params, const char* key) {
  return params.is_object() && params.contains(key);
}

int GetInt(const Json& params, const char* key, const std::string& owner,
           std::optional<int> fallback = std::nullopt) {
  if (!Has(params, key)) {
    if (fallback.has_value()) return *fallback;
    throw ConfigError(owner + ": missing integer parameter '" + key + "'");
  }
  const Json& v = params.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError(owner + ": parameter '" + key + "' must be an integer");
  }
  return v.get<int>();
}

double GetDouble(const Json& params, const char* key, const std::string& owner,
                 std::optional<double> fallback = std::nullopt) {
  if (!Has(params, key)) {
    if (fallback.has_value()) return *fallback;
    throw ConfigError(owner + ": missing numeric parameter '" + key + "'");
  }
  const Json& v = params.at(key);
  if (!v.is_number()) {
    throw ConfigError(owner + ": parameter '" + key + "' must be a number");
  }
  return v.get<double>();
}

std::uint64_t GetSeed(const Json& params, const std::string& owner) {
  if (!Has(params, "seed")) return 1;
  const Json& v = params.at("seed");
  if (!v.is_number_unsigned() && !v.is_number_integer()) {
    throw ConfigError(owner + ": seed must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

using Runner = std::function<RobustResult(const Instance&, const Json&,
                                          const Budget&)>;

struct Entry {
  std::set<std::string> keys;
  Runner run;
};

const std::map<std::string, Entry>& Registry() {
  static const auto* registry = new std::map<std::string, Entry>{
      {"greedy",
       {{}, [](const Instance& i, const Json&, const Budget&) {
          return Greedy(i);
        }}},
      {"greedy-threshold",
       {{"eps"},
        [](const Instance& i, const Json& p, const Budget&) {
          return GreedyThreshold(i, GetDouble(p, "eps", "greedy-threshold",
                                              0.1));
        }}},
      {"naive-topk",
       {{}, [](const Instance& i, const Json&, const Budget&) {
          return NaiveTopK(i);
        }}},
      {"two-copy",
       {{}, [](const Instance& i, const Json&, const Budget&) {
          return TwoCopy(i);
        }}},
      {"copies-block",
       {{}, [](const Instance& i, const Json&, const Budget&) {
          return CopiesBlock(i);
        }}},
      {"copies-geometric",
       {{}, [](const Instance& i, const Json&, const Budget&) {
          return CopiesGeometric(i);
        }}},
      {"ignore-first",
       {{}, [](const Instance& i, const Json&, const Budget&) {
          return IgnoreFirst(i);
        }}},
      {"three-phase",
       {{}, [](const Instance& i, const Json&, const Budget&) {
          return ThreePhase(i);
        }}},
      {"biobjective",
       {{"m"},
        [](const Instance& i, const Json& p, const Budget&) {
          return BiobjectiveRobust(i, GetInt(p, "m", "biobjective", 2));
        }}},
      {"blocks",
       {{"tau-prime"},
        [](const Instance& i, const Json& p, const Budget&) {
          std::optional<int> tp;
          if (Has(p, "tau-prime")) tp = GetInt(p, "tau-prime", "blocks");
          return BlocksGreedy(i, tp);
        }}},
      {"constant-tau",
       {{"delta"},
        [](const Instance& i, const Json& p, const Budget& b) {
          const BruteForceMultiObjectiveSolver solver(b);
          return ConstantTauScheme(
              i, solver, GetDouble(p, "delta", "constant-tau", 0.05));
        }}},
      {"general",
       {{}, [](const Instance& i, const Json&, const Budget& b) {
          return GeneralRobust(i, IndependenceGreedy, b);
        }}},
  };
  return *registry;
}

Instance Generate(const std::string& generator, const Json& p) {
  const std::string& g = generator;
  if (g == "greedy-failure") {
    CheckKeys(p, {"k", "tau", "label"}, g);
    return GreedyFailureInstance(GetInt(p, "k", g));
  }
  if (g == "partial-copies") {
    CheckKeys(p, {"k", "tau", "label"}, g);
    return PartialCopiesInstance(GetInt(p, "k", g));
  }
  if (g == "random-coverage") {
    CheckKeys(p,
              {"n", "universe", "density", "seed", "k", "tau", "max_weight",
               "label"},
              g);
    const int n = GetInt(p, "n", g);
    const int universe = GetInt(p, "universe", g, 2 * n);
    const double density = GetDouble(p, "density", g, 0.3);
    const int k = GetInt(p, "k", g);
    const int tau = GetInt(p, "tau", g, 0);
    if (Has(p, "max_weight")) {
      return RandomWeightedCoverageInstance(n, universe, density,
                                            GetInt(p, "max_weight", g),
                                            GetSeed(p, g), k, tau);
    }
    return RandomCoverageInstance(n, universe, density, GetSeed(p, g), k, tau);
  }
  if (g == "random-modular") {
    CheckKeys(p, {"n", "max_weight", "seed", "k", "tau", "label"}, g);
    return RandomModularInstance(GetInt(p, "n", g),
                                 GetInt(p, "max_weight", g, 9), GetSeed(p, g),
                                 GetInt(p, "k", g), GetInt(p, "tau", g, 0));
  }
  if (g == "modular") {
    CheckKeys(p, {"weights", "k", "tau", "label"}, g);
    if (!Has(p, "weights") || !p.at("weights").is_array()) {
      throw ConfigError("modular: 'weights' must be an array");
    }
    std::vector<double> weights;
    for (const Json& w : p.at("weights")) {
      if (!w.is_number()) throw ConfigError("modular: weights must be numbers");
      weights.push_back(w.get<double>());
    }
    return ModularInstance(std::move(weights), GetInt(p, "k", g),
                           GetInt(p, "tau", g, 0));
  }
  if (g == "copies" || g == "hardness") {
    CheckKeys(p, {"base", "copies", "k", "tau", "label"}, g);
    if (!Has(p, "base") || !p.at("base").is_object() ||
        !p.at("base").contains("generator")) {
      throw ConfigError(g + ": 'base' must be a generator object");
    }
    Json base = p.at("base");
    const std::string name = base.at("generator").get<std::string>();
    base.erase("generator");
    const Instance inner = GenerateInstance(name, base);
    if (g == "copies") return AugmentWithCopies(inner, GetInt(p, "copies", g));
    return HardnessAugment(inner, GetInt(p, "tau", g));
  }
  if (g == "file") {
    CheckKeys(p, {"path", "k", "tau", "label"}, g);
    if (!Has(p, "path") || !p.at("path").is_string()) {
      throw ConfigError("file: 'path' must be a string");
    }
    return LoadInstance(p.at("path").get<std::string>());
  }
  throw ConfigError("unknown generator '" + g + "'");
}

}  // namespace

const std::vector<std::string>& AlgorithmIds() {
  static const auto* ids = new std::vector<std::string>{
      "greedy",      "greedy-threshold", "naive-topk",       "two-copy",
      "copies-block", "copies-geometric", "ignore-first",    "three-phase",
      "biobjective", "blocks",           "constant-tau",     "general"};
  return *ids;
}

bool HasAlgorithm(const std::string& id) { return Registry().contains(id); }

RobustResult RunAlgorithm(const std::string& id, const Instance& inst,
                          const Json& params, const Budget& budget) {
  const auto it = Registry().find(id);
  if (it == Registry().end()) {
    throw ConfigError("unknown algorithm id '" + id + "'");
  }
  CheckKeys(params, it->second.keys, id);
  return it->second.run(inst, params, budget);
}

void ValidateAlgorithmRequest(const std::string& id, const Json& params) {
  const auto it = Registry().find(id);
  if (it == Registry().end()) {
    throw ConfigError("unknown algorithm id '" + id + "'");
  }
  CheckKeys(params, it->second.keys, id);
  if (!params.is_object()) return;
  for (const auto& [key, value] : params.items()) {
    if (key == "m" || key == "tau-prime") {
      GetInt(params, key.c_str(), id);
    } else {
      GetDouble(params, key.c_str(), id);
    }
  }
}

std::string CanonicalParams(const Json& params) {
  if (!params.is_object()) return "";
  std::string out;
  for (const auto& [key, value] : params.items()) {
    if (!out.empty()) out += ';';
    out += key + '=';
    if (value.is_number_float()) {
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), "%.12g", value.get<double>());
      out += buffer;
    } else if (value.is_string()) {
      out += value.get<std::string>();
    } else {
      out += value.dump();
    }
  }
  return out;
}

Instance GenerateInstance(const std::string& generator, const Json& params) {
  Instance inst;
  try {
    inst = Generate(generator, params);
  } catch (const PreconditionError& e) {
    throw ConfigError(generator + ": " + e.what());
  } catch (const Json::exception& e) {
    throw ConfigError(generator + ": " + e.what());
  }
  if (Has(params, "k")) inst.k = GetInt(params, "k", generator);
  if (Has(params, "tau")) inst.tau = GetInt(params, "tau", generator);
  if (Has(params, "label")) {
    if (!params.at("label").is_string()) {
      throw ConfigError(generator + ": 'label' must be a string");
    }
    inst.label = params.at("label").get<std::string>();
  }
  try {
    inst.Validate();
  } catch (const PreconditionError& e) {
    throw ConfigError(generator + ": " + e.what());
  }
  return inst;
}

const std::vector<std::string>& GeneratorNames() {
  static const auto* names = new std::vector<std::string>{
      "greedy-failure", "partial-copies", "random-coverage", "random-modular",
      "modular",        "copies",         "hardness",        "file"};
  return *names;
}

}  // namespace rsmax
