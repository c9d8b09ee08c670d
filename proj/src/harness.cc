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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "rsmax/errors.h"
#include "rsmax/registry.h"

namespace rsmax {
namespace {

using Json = nlohmann::json;

std::string Number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string CsvField(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::uint64_t BudgetValue(const Json& j, const char* key,
                          std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number() || v.get<double>() < 1.0) {
    throw ConfigError(std::string("budget.") + key +
                      " must be a positive number");
  }
  return static_cast<std::uint64_t>(v.get<double>());
}

void ParseInstanceEntry(const Json& entry, std::vector<Instance>& out) {
  if (!entry.is_object()) throw ConfigError("instance entries must be objects");
  Json params = entry;
  std::string generator;
  if (params.contains("generator")) {
    if (!params.at("generator").is_string()) {
      throw ConfigError("'generator' must be a string");
    }
    generator = params.at("generator").get<std::string>();
    params.erase("generator");
  } else if (params.contains("file")) {
    generator = "file";
    params["path"] = params.at("file");
    params.erase("file");
  } else {
    throw ConfigError("instance entry needs 'generator' or 'file'");
  }
  std::vector<Json> expanded;
  if (params.contains("seeds")) {
    if (!params.at("seeds").is_array()) {
      throw ConfigError("'seeds' must be an array");
    }
    const Json seeds = params.at("seeds");
    params.erase("seeds");
    for (const Json& seed : seeds) {
      Json p = params;
      p["seed"] = seed;
      expanded.push_back(std::move(p));
    }
  } else {
    expanded.push_back(params);
  }
  for (const Json& p : expanded) {
    Instance inst = GenerateInstance(generator, p);
    if (!p.contains("label")) {
      inst.label += "[k=" + std::to_string(inst.k) +
                    ",tau=" + std::to_string(inst.tau) + "]";
    }
    out.push_back(std::move(inst));
  }
}

RunRecord RunOne(const Instance& shared, const AlgorithmRequest& request,
                 const std::optional<double>& opt,
                 const std::string& opt_status, const Budget& budget,
                 double tolerance) {
  RunRecord record;
  record.instance = shared.label;
  record.algorithm = request.id;
  record.params = CanonicalParams(request.params);
  record.k = shared.k;
  record.tau = shared.tau;
  record.opt = opt;
  record.opt_status = opt_status;
  const Instance inst = shared.Clone();
  const auto start = std::chrono::steady_clock::now();
  try {
    const RobustResult result =
        RunAlgorithm(request.id, inst, request.params, budget);
    record.f = result.f_value;
    if (!result.minimizer_infeasible) record.g = result.g_value;
    record.queries = result.queries;
    record.chosen = result.chosen.ToString();
    record.trace_digest = TraceDigest(result.trace);
    if (record.g.has_value() && opt.has_value()) {
      if (*opt > tolerance) {
        record.ratio = *record.g / *opt;
      } else if (*record.g <= tolerance) {
        record.ratio = 1.0;
      }
    }
    if (result.minimizer_infeasible) record.status = "minimizer-budget-exceeded";
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    record.status = std::string("error: ") + e.what();
  }
  record.ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return record;
}

template <typename Fn>
void ParallelFor(int count, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

ExperimentConfig ParseConfig(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> kKeys = {
      "instances", "algorithms", "budget", "threads", "compute_opt",
      "tolerance"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ConfigError("unexpected config key '" + key + "'");
    }
  }
  ExperimentConfig config;
  try {
    if (j.contains("instances")) {
      if (!j.at("instances").is_array()) {
        throw ConfigError("'instances' must be an array");
      }
      for (const Json& entry : j.at("instances")) {
        ParseInstanceEntry(entry, config.instances);
      }
    }
    if (j.contains("algorithms")) {
      if (!j.at("algorithms").is_array()) {
        throw ConfigError("'algorithms' must be an array");
      }
      for (const Json& entry : j.at("algorithms")) {
        AlgorithmRequest request;
        if (entry.is_string()) {
          request.id = entry.get<std::string>();
        } else if (entry.is_object() && entry.contains("id") &&
                   entry.at("id").is_string()) {
          request.id = entry.at("id").get<std::string>();
          request.params = entry;
          request.params.erase("id");
        } else {
          throw ConfigError("algorithm entries need a string 'id'");
        }
        ValidateAlgorithmRequest(request.id, request.params);
        config.algorithms.push_back(std::move(request));
      }
    }
    const Budget defaults;
    if (j.contains("budget")) {
      const Json& b = j.at("budget");
      if (!b.is_object()) throw ConfigError("'budget' must be an object");
      config.budget.minimizer = BudgetValue(b, "minimizer", defaults.minimizer);
      config.budget.opt = BudgetValue(b, "opt", defaults.opt);
    }
    if (std::getenv("RSMAX_BUDGET") != nullptr) config.budget = Budget::Default();
    if (j.contains("threads")) {
      if (!j.at("threads").is_number_integer() ||
          j.at("threads").get<int>() < 1) {
        throw ConfigError("'threads' must be a positive integer");
      }
      config.threads = j.at("threads").get<int>();
    }
    if (j.contains("compute_opt")) {
      if (!j.at("compute_opt").is_boolean()) {
        throw ConfigError("'compute_opt' must be a boolean");
      }
      config.compute_opt = j.at("compute_opt").get<bool>();
    }
    if (j.contains("tolerance")) {
      if (!j.at("tolerance").is_number() ||
          j.at("tolerance").get<double>() < 0.0) {
        throw ConfigError("'tolerance' must be a non-negative number");
      }
      config.tolerance = j.at("tolerance").get<double>();
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return config;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return ParseConfig(j);
}

std::vector<RunRecord> RunExperiment(const ExperimentConfig& config) {
  const int instances = static_cast<int>(config.instances.size());
  const int algorithms = static_cast<int>(config.algorithms.size());
  std::vector<std::optional<double>> opt(instances);
  std::vector<std::string> opt_status(instances, "not-computed");
  if (config.compute_opt && algorithms > 0) {
    ParallelFor(instances, config.threads, [&](int i) {
      const Instance inst = config.instances[i].Clone();
      try {
        opt[i] = OptRobust(inst, config.budget).value;
        opt_status[i] = "ok";
      } catch (const BudgetExceeded&) {
        opt_status[i] = "budget-exceeded";
      }
    });
  }
  std::vector<RunRecord> records(static_cast<std::size_t>(instances) *
                                 algorithms);
  ParallelFor(instances * algorithms, config.threads, [&](int job) {
    const int i = job / algorithms;
    const int a = job % algorithms;
    records[job] = RunOne(config.instances[i], config.algorithms[a], opt[i],
                          opt_status[i], config.budget, config.tolerance);
  });
  return records;
}

std::string RecordsToCsv(const std::vector<RunRecord>& records,
                         bool with_timing) {
  std::string out = "instance,algorithm,params,k,tau,f,g,opt,ratio,queries,ms\n";
  for (const RunRecord& r : records) {
    std::string opt;
    if (r.opt.has_value()) {
      opt = Number(*r.opt);
    } else if (r.opt_status == "budget-exceeded") {
      opt = "budget-exceeded";
    }
    char ms[32] = "";
    if (with_timing) std::snprintf(ms, sizeof(ms), "%.3f", r.ms);
    out += CsvField(r.instance) + ',' + CsvField(r.algorithm) + ',' +
           CsvField(r.params) + ',' + std::to_string(r.k) + ',' +
           std::to_string(r.tau) + ',' + (r.f ? Number(*r.f) : "") + ',' +
           (r.g ? Number(*r.g) : "") + ',' + opt + ',' +
           (r.ratio ? Number(*r.ratio) : "") + ',' +
           (r.queries ? std::to_string(*r.queries) : "") + ',' + ms + '\n';
  }
  return out;
}

Json RecordsToJson(const std::vector<RunRecord>& records) {
  Json out = Json::array();
  auto optional = [](const auto& v) -> Json {
    if (v.has_value()) return *v;
    return nullptr;
  };
  for (const RunRecord& r : records) {
    out.push_back({{"instance", r.instance},
                   {"algorithm", r.algorithm},
                   {"params", r.params},
                   {"k", r.k},
                   {"tau", r.tau},
                   {"status", r.status},
                   {"f", optional(r.f)},
                   {"g", optional(r.g)},
                   {"opt", optional(r.opt)},
                   {"opt_status", r.opt_status},
                   {"ratio", optional(r.ratio)},
                   {"queries", optional(r.queries)},
                   {"ms", r.ms},
                   {"chosen", r.chosen},
                   {"trace_digest", r.trace_digest}});
  }
  return out;
}

void WriteResults(const std::vector<RunRecord>& records,
                  const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  std::ofstream csv(base / "results.csv");
  csv << RecordsToCsv(records);
  std::ofstream json(base / "results.json");
  json << RecordsToJson(records).dump(2) << '\n';
  if (!csv || !json) throw Error("cannot write results to '" + dir + "'");
}

std::string TraceDigest(const std::vector<TraceStep>& trace) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const TraceStep& step : trace) {
    mix(static_cast<std::uint64_t>(step.iteration));
    for (char c : step.rule) mix(static_cast<unsigned char>(c));
    for (int e : step.added) mix(static_cast<std::uint64_t>(e) + 1);
    mix(0xffu);
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(h));
  return buffer;
}

}  // namespace rsmax
