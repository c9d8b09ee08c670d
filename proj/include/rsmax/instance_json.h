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

#ifndef RSMAX_INSTANCE_JSON_H_
#define RSMAX_INSTANCE_JSON_H_

#include <string>

#include "json.hpp"
#include "rsmax/instance.h"

namespace rsmax {

// Instance files look like
//   {"kind": "coverage", "n": 3, "universe": 4, "sets": [[0, 1], [1], [3]],
//    "unit_weight": 1.0, "k": 2, "tau": 1, "label": "..."}
// with "kind" one of coverage, modular ("weights"), explicit ("table", 2^n
// values indexed by bit mask), or the wrappers copies ("copies", "base"),
// additive-extension ("extra", "weight", "base") and restricted ("pinned",
// "base"). Optional keys: "copy_map" (list of copy ids per original) and
// "constraint" (see SystemFromJson()).
OraclePtr OracleFromJson(const nlohmann::json& j);
Instance InstanceFromJson(const nlohmann::json& j);
nlohmann::json InstanceToJson(const Instance& inst);

Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& inst, const std::string& path);

}  // namespace rsmax

#endif  // RSMAX_INSTANCE_JSON_H_
