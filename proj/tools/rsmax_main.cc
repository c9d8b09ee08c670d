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

// Command-line front end: gen, run, verify, bounds, conjecture.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsmax/bounds.h"
#include "rsmax/bruteforce.h"
#include "rsmax/checks.h"
#include "rsmax/errors.h"
#include "rsmax/harness.h"
#include "rsmax/instance_json.h"
#include "rsmax/registry.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

// key=value pairs; values are parsed as JSON and fall back to strings.
Json ParseParams(const std::vector<std::string>& pairs) {
  Json params = Json::object();
  for (const std::string& pair : pairs) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw rsmax::ConfigError("parameter '" + pair + "' is not key=value");
    }
    const std::string key = pair.substr(0, eq);
    const std::string text = pair.substr(eq + 1);
    Json value = Json::parse(text, nullptr, false);
    params[key] = value.is_discarded() ? Json(text) : value;
  }
  return params;
}

rsmax::Subset ParseSet(const std::string& text) {
  rsmax::Subset s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      s.Insert(std::stoi(item));
    } catch (const std::exception&) {
      throw rsmax::ConfigError("bad element '" + item + "' in set '" + text +
                               "'");
    }
  }
  return s;
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
  if (!out) throw rsmax::Error("cannot write '" + path + "'");
}

int RunVerify(const std::string& check, const std::string& instance_path,
              const std::string& set_text, const std::string& x_text,
              int samples, std::uint64_t seed) {
  const rsmax::Instance inst = rsmax::LoadInstance(instance_path);
  Json report = {{"check", check}, {"instance", inst.label}};
  bool ok = true;
  if (check == "oracle") {
    const rsmax::OracleCheckReport r =
        rsmax::CheckOracle(*inst.oracle, samples, seed);
    report["samples"] = r.samples;
    report["monotonicity_violations"] = r.monotonicity_violations;
    report["submodularity_violations"] = r.submodularity_violations;
    report["empty_is_zero"] = r.empty_is_zero;
    report["worst_violation"] = r.worst_violation;
    if (!r.first_failure.empty()) report["first_failure"] = r.first_failure;
    ok = r.ok();
  } else if (check == "minimizer") {
    if (set_text.empty()) throw rsmax::ConfigError("minimizer needs --set");
    const rsmax::Subset a = ParseSet(set_text);
    const rsmax::MinimizerResult r =
        rsmax::FindMinimizer(*inst.oracle, a, inst.tau, true);
    report["set"] = a.ToString();
    report["minimizer"] = r.z.ToString();
    report["g"] = r.value;
    Json all = Json::array();
    for (const rsmax::Subset& z : r.all_minimizers) all.push_back(z.ToString());
    report["all_minimizers"] = all;
  } else if (check == "opt") {
    const rsmax::OptResult r = rsmax::OptRobust(inst);
    report["opt_set"] = r.set.ToString();
    report["opt"] = r.value;
  } else if (check == "chain") {
    const rsmax::RestrictionChainReport r =
        rsmax::RestrictionChainCheck(inst, ParseSet(x_text));
    report["robust_opt"] = r.robust_opt;
    report["restricted_opt"] = r.restricted_opt;
    report["plain_opt"] = r.plain_opt;
    report["holds"] = r.holds;
    ok = r.holds;
  } else {
    throw rsmax::ConfigError("unknown check '" + check +
                             "' (oracle, minimizer, opt, chain)");
  }
  report["ok"] = ok;
  std::cout << report.dump(2) << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw rsmax::ConfigError("bad integer '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust submodular maximization toolkit"};
  app.require_subcommand(1);

  std::string generator;
  std::vector<std::string> gen_params;
  std::string gen_out = "-";
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("generator", generator, "Generator name")->required();
  gen->add_option("params", gen_params, "key=value generator parameters");
  gen->add_option("-o,--output", gen_out, "Output path (- for stdout)");

  std::string config_path;
  std::string out_dir;
  int threads = 0;
  bool check_ratios = false;
  CLI::App* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("-c,--config", config_path, "Config JSON")->required();
  run->add_option("-o,--output", out_dir, "Output directory")->required();
  run->add_option("--threads", threads, "Override the config thread count");
  run->add_flag("--check", check_ratios,
                "Exit 1 when a ratio exceeds 1 or an algorithm failed");

  std::string check;
  std::string instance_path;
  std::string set_text;
  std::string x_text;
  int samples = 1000;
  std::uint64_t seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "Exact checks on an instance");
  verify->add_option("check", check, "oracle, minimizer, opt or chain")
      ->required();
  verify->add_option("-i,--instance", instance_path, "Instance JSON")
      ->required();
  verify->add_option("--set", set_text, "Comma-separated set A");
  verify->add_option("--x", x_text, "Comma-separated removal set X");
  verify->add_option("--samples", samples, "Oracle check samples");
  verify->add_option("--seed", seed, "Oracle check seed");

  std::string ks = "10";
  std::string taus = "1";
  std::string ms = "2";
  bool bounds_json = false;
  CLI::App* bounds = app.add_subcommand("bounds", "Tabulate guarantees");
  bounds->add_option("--k", ks, "Comma-separated k values");
  bounds->add_option("--tau", taus, "Comma-separated tau values");
  bounds->add_option("--m", ms, "Comma-separated m values");
  bounds->add_flag("--json", bounds_json, "Emit JSON instead of CSV");

  int l = 3;
  int trials = 200;
  int k_max = 8;
  std::uint64_t conj_seed = 1;
  std::string conj_out = "-";
  CLI::App* conjecture =
      app.add_subcommand("conjecture", "Scan for the tuple constant");
  conjecture->add_option("--l", l, "Number of functions");
  conjecture->add_option("--trials", trials, "Random trials");
  conjecture->add_option("--seed", conj_seed, "Seed");
  conjecture->add_option("--k-max", k_max, "Largest witness size (<= 12)");
  conjecture->add_option("-o,--output", conj_out, "Report path (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (gen->parsed()) {
      const rsmax::Instance inst =
          rsmax::GenerateInstance(generator, ParseParams(gen_params));
      WriteText(gen_out, rsmax::InstanceToJson(inst).dump(2) + "\n");
      return kExitOk;
    }
    if (run->parsed()) {
      rsmax::ExperimentConfig config = rsmax::LoadConfig(config_path);
      if (threads > 0) config.threads = threads;
      const std::vector<rsmax::RunRecord> records =
          rsmax::RunExperiment(config);
      rsmax::WriteResults(records, out_dir);
      int failed = 0;
      for (const rsmax::RunRecord& r : records) {
        const bool bad_ratio =
            r.ratio.has_value() && *r.ratio > 1.0 + config.tolerance;
        if (bad_ratio || r.status.rfind("error", 0) == 0) ++failed;
      }
      std::printf("%zu rows written to %s (%d flagged)\n", records.size(),
                  out_dir.c_str(), failed);
      return check_ratios && failed > 0 ? kExitCheckFailed : kExitOk;
    }
    if (verify->parsed()) {
      return RunVerify(check, instance_path, set_text, x_text, samples, seed);
    }
    if (bounds->parsed()) {
      const auto rows = rsmax::BoundTable(ParseIntList(ks), ParseIntList(taus),
                                          ParseIntList(ms));
      if (bounds_json) {
        std::cout << rsmax::BoundTableJson(rows).dump(2) << '\n';
      } else {
        std::cout << rsmax::BoundTableCsv(rows);
      }
      return kExitOk;
    }
    if (conjecture->parsed()) {
      const rsmax::ConjectureReport report =
          rsmax::ConjectureScan(l, trials, k_max, conj_seed);
      WriteText(conj_out, report.ToJson().dump(2) + "\n");
      return kExitOk;
    }
  } catch (const rsmax::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const rsmax::PreconditionError& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailed;
  }
  return kExitOk;
}
