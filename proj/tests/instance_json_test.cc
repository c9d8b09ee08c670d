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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "rsmax/errors.h"
#include "rsmax/instance.h"
#include "test_util.h"

namespace rsmax {
namespace {

using ::rsmax::testing::MaskSet;
using Json = nlohmann::json;

void ExpectSameFunction(const Instance& a, const Instance& b) {
  ASSERT_EQ(a.n(), b.n());
  EXPECT_EQ(a.k, b.k);
  EXPECT_EQ(a.tau, b.tau);
  EXPECT_EQ(a.label, b.label);
  const int n = std::min(a.n(), 14);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    ASSERT_EQ(a.oracle->Eval(MaskSet(m)), b.oracle->Eval(MaskSet(m))) << m;
  }
}

TEST(InstanceJsonTest, RoundTripsShippedFamilies) {
  const std::vector<Instance> instances = {
      GreedyFailureInstance(4),
      PartialCopiesInstance(4),
      RandomCoverageInstance(9, 18, 0.3, 4, 3, 1),
      RandomWeightedCoverageInstance(9, 18, 0.3, 7, 4, 3, 1),
      RandomModularInstance(7, 9, 2, 3, 1),
      ModularInstance({3, 1, 2}, 2, 1),
      AugmentWithCopies(RandomCoverageInstance(6, 12, 0.3, 1, 4, 1), 1),
      HardnessAugment(ModularInstance({3, 1, 2}, 2, 0), 1)};
  for (const Instance& inst : instances) {
    const Json j = InstanceToJson(inst);
    const Instance back = InstanceFromJson(j);
    ExpectSameFunction(inst, back);
    EXPECT_EQ(InstanceToJson(back), j) << inst.label;
    EXPECT_EQ(back.copies.has_value(), inst.copies.has_value());
    if (inst.copies.has_value()) {
      EXPECT_EQ(back.copies->copies, inst.copies->copies);
    }
  }
}

TEST(InstanceJsonTest, HandWrittenCoverage) {
  const Instance inst = InstanceFromJson(Json::parse(R"({
    "kind": "coverage", "n": 3, "universe": 4,
    "sets": [[0, 1], [1], [3]], "k": 2, "tau": 1, "label": "toy"})"));
  EXPECT_EQ(inst.n(), 3);
  EXPECT_EQ(inst.oracle->Eval({0, 1}), 2.0);
  EXPECT_EQ(inst.oracle->Eval({0, 2}), 3.0);
  EXPECT_EQ(inst.label, "toy");
}

TEST(InstanceJsonTest, ConstraintRoundTrip) {
  Instance inst = RandomCoverageInstance(6, 12, 0.3, 1, 3, 1);
  inst.constraint = MakePartitionMatroid({{0, 1, 2}, {3, 4, 5}}, {1, 2});
  const Instance back = InstanceFromJson(InstanceToJson(inst));
  ASSERT_NE(back.constraint, nullptr);
  for (std::uint32_t m = 0; m < 64; ++m) {
    EXPECT_EQ(back.constraint->IsIndependent(MaskSet(m)),
              inst.constraint->IsIndependent(MaskSet(m)));
  }
}

TEST(InstanceJsonTest, ExplicitTable) {
  const Instance inst = InstanceFromJson(Json::parse(R"({
    "kind": "explicit", "n": 2, "table": [0, 1, 1, 1.5], "k": 2, "tau": 0})"));
  EXPECT_EQ(inst.oracle->Eval({0, 1}), 1.5);
  EXPECT_THROW(InstanceFromJson(Json::parse(R"({
    "kind": "explicit", "n": 2, "table": [0, 1, 1], "k": 2})")),
               Error);
}

TEST(InstanceJsonTest, Errors) {
  EXPECT_THROW(InstanceFromJson(Json::parse(R"({"kind": "matrix"})")),
               ConfigError);
  EXPECT_THROW(InstanceFromJson(Json::parse(R"({"kind": "modular"})")),
               ConfigError);
  EXPECT_THROW(InstanceFromJson(Json::parse(
                   R"({"kind": "modular", "weights": [1, 2], "k": 5})")),
               Error);
  EXPECT_THROW(LoadInstance("/nonexistent/instance.json"), ConfigError);
}

TEST(InstanceJsonTest, FileRoundTrip) {
  const auto path =
      std::filesystem::temp_directory_path() / "rsmax_instance.json";
  const Instance inst = PartialCopiesInstance(6);
  SaveInstance(inst, path.string());
  ExpectSameFunction(inst, LoadInstance(path.string()));
}

}  // namespace
}  // namespace rsmax
