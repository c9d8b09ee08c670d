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

#include "rsmax/instance_json.h"

#include <fstream>

#include "rsmax/errors.h"

namespace rsmax {
namespace {

void CheckSize(const nlohmann::json& j, int actual) {
  if (j.contains("n") && j.at("n").get<int>() != actual) {
    throw ConfigError("declared n=" + std::to_string(j.at("n").get<int>()) +
                      " but the data describes " + std::to_string(actual) +
                      " elements");
  }
}

}  // namespace

OraclePtr OracleFromJson(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    OraclePtr oracle;
    if (kind == "modular") {
      oracle = std::make_shared<ModularFunction>(
          j.at("weights").get<std::vector<double>>());
    } else if (kind == "coverage") {
      auto sets = j.at("sets").get<std::vector<std::vector<int>>>();
      const int universe = j.at("universe").get<int>();
      if (j.contains("universe_weights")) {
        oracle = std::make_shared<CoverageFunction>(
            universe, std::move(sets),
            j.at("universe_weights").get<std::vector<double>>());
      } else {
        oracle = std::make_shared<CoverageFunction>(
            universe, std::move(sets), j.value("unit_weight", 1.0));
      }
    } else if (kind == "explicit") {
      oracle = std::make_shared<ExplicitFunction>(
          j.at("n").get<int>(), j.at("table").get<std::vector<double>>());
    } else if (kind == "copies") {
      oracle = std::make_shared<CopyAugmentedFunction>(
          OracleFromJson(j.at("base")), j.at("copies").get<int>());
    } else if (kind == "additive-extension") {
      oracle = std::make_shared<AdditiveExtensionFunction>(
          OracleFromJson(j.at("base")), j.at("extra").get<int>(),
          j.at("weight").get<double>());
    } else if (kind == "restricted") {
      const auto pinned = j.at("pinned").get<std::vector<int>>();
      oracle = Restrict(OracleFromJson(j.at("base")),
                        Subset::FromElements(pinned));
    } else {
      throw ConfigError("unknown oracle kind '" + kind + "'");
    }
    CheckSize(j, oracle->ground_size());
    return oracle;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed oracle: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("invalid oracle: ") + e.what());
  }
}

Instance InstanceFromJson(const nlohmann::json& j) {
  Instance inst;
  inst.oracle = OracleFromJson(j);
  try {
    inst.k = j.at("k").get<int>();
    inst.tau = j.value("tau", 0);
    inst.label = j.value("label", inst.oracle->Descriptor());
    if (j.contains("copy_map")) {
      CopyMap map;
      map.copies = j.at("copy_map").get<std::vector<std::vector<int>>>();
      map.original_size = static_cast<int>(map.copies.size());
      inst.copies = std::move(map);
    }
    if (j.contains("constraint")) {
      inst.constraint = SystemFromJson(j.at("constraint"), inst.n());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed instance: ") + e.what());
  }
  try {
    inst.Validate();
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
  return inst;
}

nlohmann::json InstanceToJson(const Instance& inst) {
  nlohmann::json j = inst.oracle->ToJson();
  j["k"] = inst.k;
  j["tau"] = inst.tau;
  j["label"] = inst.label;
  if (inst.copies.has_value()) j["copy_map"] = inst.copies->copies;
  if (inst.constraint != nullptr) j["constraint"] = inst.constraint->ToJson();
  return j;
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open instance file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return InstanceFromJson(j);
}

void SaveInstance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << InstanceToJson(inst).dump(2) << "\n";
}

}  // namespace rsmax
