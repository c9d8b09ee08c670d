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

#include "rsmax/harness.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "rsmax/errors.h"
#include "rsmax/registry.h"

namespace rsmax {
namespace {

using Json = nlohmann::json;

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

const char* kHeader = "instance,algorithm,params,k,tau,f,g,opt,ratio,queries,ms";

TEST(RegistryTest, AllIdsResolve) {
  EXPECT_EQ(AlgorithmIds().size(), 12u);
  for (const char* id :
       {"greedy", "greedy-threshold", "naive-topk", "two-copy", "copies-block",
        "copies-geometric", "ignore-first", "three-phase", "biobjective",
        "blocks", "constant-tau", "general"}) {
    EXPECT_TRUE(HasAlgorithm(id)) << id;
  }
  EXPECT_FALSE(HasAlgorithm("lazy-greedy"));
  EXPECT_THROW(ValidateAlgorithmRequest("lazy-greedy", Json::object()),
               ConfigError);
  EXPECT_THROW(ValidateAlgorithmRequest("greedy", {{"m", 2}}), ConfigError);
  EXPECT_NO_THROW(ValidateAlgorithmRequest("biobjective", {{"m", 2}}));
  EXPECT_THROW(ValidateAlgorithmRequest("biobjective", {{"m", "two"}}),
               ConfigError);
}

TEST(RegistryTest, RunsEachAlgorithmOnASuitableInstance) {
  const Instance coverage = GenerateInstance(
      "random-coverage", {{"n", 12}, {"k", 8}, {"tau", 1}, {"seed", 3}});
  const Instance copies = GenerateInstance(
      "copies", {{"base", {{"generator", "random-coverage"},
                           {"n", 8}, {"k", 6}, {"tau", 1}, {"seed", 2}}},
                 {"copies", 1}});
  for (const std::string& id : AlgorithmIds()) {
    const Instance& inst =
        id == "two-copy" || id.rfind("copies", 0) == 0 ? copies : coverage;
    const RobustResult r = RunAlgorithm(id, inst, Json::object());
    EXPECT_LE(r.chosen.Size(), inst.k) << id;
    EXPECT_GE(r.g_value, 0.0) << id;
  }
}

TEST(RegistryTest, CanonicalParams) {
  EXPECT_EQ(CanonicalParams(Json::object()), "");
  EXPECT_EQ(CanonicalParams({{"m", 2}, {"eps", 0.1}}), "eps=0.1;m=2");
}

TEST(RegistryTest, Generators) {
  EXPECT_EQ(GenerateInstance("greedy-failure", {{"k", 4}}).n(), 8);
  EXPECT_EQ(GenerateInstance("partial-copies", {{"k", 6}}).n(), 19);
  const Instance m = GenerateInstance(
      "modular", {{"weights", {3, 1, 2}}, {"k", 2}, {"label", "tiny"}});
  EXPECT_EQ(m.label, "tiny");
  EXPECT_EQ(m.oracle->Eval({0, 2}), 5.0);
  EXPECT_THROW(GenerateInstance("nope", Json::object()), ConfigError);
  EXPECT_THROW(GenerateInstance("greedy-failure", {{"k", 4}, {"bogus", 1}}),
               ConfigError);
  EXPECT_THROW(GenerateInstance("random-coverage", {{"k", 2}}), ConfigError);
}

Json SmallConfig() {
  return Json::parse(R"({
    "instances": [
      {"generator": "random-coverage", "n": 8, "k": 3, "tau": 1,
       "seeds": [1, 2]},
      {"generator": "greedy-failure", "k": 4}
    ],
    "algorithms": ["greedy", {"id": "biobjective", "m": 2}, "naive-topk"],
    "threads": 3
  })");
}

TEST(ConfigTest, ParsesAndExpandsSeeds) {
  const ExperimentConfig config = ParseConfig(SmallConfig());
  ASSERT_EQ(config.instances.size(), 3u);
  ASSERT_EQ(config.algorithms.size(), 3u);
  EXPECT_EQ(config.algorithms[1].params, Json({{"m", 2}}));
  EXPECT_EQ(config.threads, 3);
  EXPECT_TRUE(config.compute_opt);
  EXPECT_NE(config.instances[0].label, config.instances[1].label);
}

TEST(ConfigTest, Errors) {
  EXPECT_THROW(ParseConfig(Json::array()), ConfigError);
  EXPECT_THROW(ParseConfig({{"algorithms", {"magic"}}}), ConfigError);
  EXPECT_THROW(ParseConfig({{"extra", 1}}), ConfigError);
  EXPECT_THROW(ParseConfig({{"threads", 0}}), ConfigError);
  EXPECT_THROW(ParseConfig({{"budget", {{"opt", -3}}}}), ConfigError);
  EXPECT_THROW(ParseConfig({{"instances", {{{"n", 3}}}}}), ConfigError);
  EXPECT_THROW(LoadConfig("/nonexistent/config.json"), ConfigError);
  const auto bad = std::filesystem::temp_directory_path() / "rsmax_bad.json";
  std::ofstream(bad) << "{not json";
  EXPECT_THROW(LoadConfig(bad.string()), ConfigError);
}

TEST(RunExperimentTest, EmptyAlgorithmListGivesHeaderOnly) {
  Json j = SmallConfig();
  j["algorithms"] = Json::array();
  const auto records = RunExperiment(ParseConfig(j));
  EXPECT_TRUE(records.empty());
  EXPECT_EQ(RecordsToCsv(records), std::string(kHeader) + "\n");
}

TEST(RunExperimentTest, SingleGreedyRow) {
  const ExperimentConfig config = ParseConfig(Json::parse(R"({
    "instances": [{"generator": "random-coverage", "n": 8, "k": 3,
                   "tau": 1, "seed": 5}],
    "algorithms": ["greedy"]})"));
  const auto records = RunExperiment(config);
  ASSERT_EQ(records.size(), 1u);
  const RunRecord& r = records[0];
  EXPECT_EQ(r.status, "ok");
  ASSERT_TRUE(r.ratio.has_value());
  EXPECT_LE(*r.ratio, 1.0 + 1e-9);
  EXPECT_GE(*r.ratio, 0.0);
  EXPECT_EQ(*r.ratio, *r.g / *r.opt);
  EXPECT_LE(*r.queries, 8 * 3);
}

TEST(RunExperimentTest, RowsAndDeterminism) {
  const ExperimentConfig config = ParseConfig(SmallConfig());
  const auto first = RunExperiment(config);
  ASSERT_EQ(first.size(), 9u);
  // Instances outer, algorithms inner, whatever the thread count.
  EXPECT_EQ(first[0].algorithm, "greedy");
  EXPECT_EQ(first[1].algorithm, "biobjective");
  EXPECT_EQ(first[1].params, "m=2");
  EXPECT_EQ(first[3].instance, config.instances[1].label);
  // greedy-failure(4): greedy gets 0 and naive top-k 3/4.
  EXPECT_EQ(*first[6].g, 0.0);
  EXPECT_DOUBLE_EQ(*first[6].opt, 0.75);
  EXPECT_DOUBLE_EQ(*first[8].g, 0.75);
  ExperimentConfig serial = config;
  serial.threads = 1;
  const auto second = RunExperiment(serial);
  EXPECT_EQ(RecordsToCsv(first, false), RecordsToCsv(second, false));
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].trace_digest, second[i].trace_digest);
    EXPECT_EQ(first[i].chosen, second[i].chosen);
  }
  const std::vector<std::string> lines = Lines(RecordsToCsv(first, false));
  ASSERT_EQ(lines.size(), 10u);
  EXPECT_EQ(lines[0], kHeader);
  EXPECT_EQ(lines[1].back(), ',');  // timing blanked
}

TEST(RunExperimentTest, BudgetExceededIsPerRow) {
  Json j = Json::parse(R"({
    "instances": [{"generator": "random-coverage", "n": 14, "k": 6,
                   "tau": 2, "seed": 1}],
    "algorithms": ["greedy", "general"],
    "budget": {"minimizer": 10, "opt": 10}})");
  const auto records = RunExperiment(ParseConfig(j));
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].opt_status, "budget-exceeded");
  EXPECT_FALSE(records[0].opt.has_value());
  EXPECT_FALSE(records[0].ratio.has_value());
  const std::string csv = RecordsToCsv(records, false);
  EXPECT_NE(csv.find(",budget-exceeded,"), std::string::npos);
  EXPECT_NE(records[1].status, "ok");
}

TEST(RunExperimentTest, WritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "rsmax_results";
  std::filesystem::remove_all(dir);
  const auto records = RunExperiment(ParseConfig(SmallConfig()));
  WriteResults(records, dir.string());
  std::ifstream csv(dir / "results.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, kHeader);
  std::ifstream json(dir / "results.json");
  const Json parsed = Json::parse(json);
  ASSERT_EQ(parsed.size(), records.size());
  EXPECT_EQ(parsed[0]["algorithm"], "greedy");
  EXPECT_TRUE(parsed[0].contains("trace_digest"));
}

TEST(TraceDigestTest, SensitiveToOrder) {
  std::vector<TraceStep> a(2);
  a[0].rule = "greedy";
  a[0].added = {1};
  a[1].rule = "greedy";
  a[1].added = {2};
  a[1].iteration = 1;
  std::vector<TraceStep> b = a;
  std::swap(b[0].added, b[1].added);
  EXPECT_NE(TraceDigest(a), TraceDigest(b));
  EXPECT_EQ(TraceDigest(a), TraceDigest(a));
  EXPECT_EQ(TraceDigest(a).size(), 16u);
}

}  // namespace
}  // namespace rsmax
