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

#ifndef RSMAX_ORACLE_H_
#define RSMAX_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsmax/subset.h"

namespace rsmax {

// Absolute tolerance for every value comparison made by the algorithms.
inline constexpr double kEpsCmp = 1e-9;

// A set function on the ground set {0, ..., n-1} in the value-oracle model.
// Each Eval() call is one query. Functions that merely rewrite their argument
// and evaluate another function report that function's counter instead of
// their own.
class SetFunction {
 public:
  explicit SetFunction(int ground_size);
  virtual ~SetFunction() = default;

  SetFunction(const SetFunction&) = delete;
  SetFunction& operator=(const SetFunction&) = delete;

  // Throws DomainError when `a` has an id >= ground_size().
  double Eval(const Subset& a) const;

  int ground_size() const { return ground_size_; }

  virtual std::int64_t QueryCount() const;
  // The function whose counter QueryCount() reports.
  virtual const SetFunction* CounterSource() const { return this; }
  virtual std::string Descriptor() const = 0;

  // True for functions that are monotone submodular with f(empty) = 0 by
  // construction.
  virtual bool IsSubmodular() const { return false; }

 protected:
  virtual double EvalImpl(const Subset& a) const = 0;
  std::int64_t OwnQueryCount() const {
    return queries_.load(std::memory_order_relaxed);
  }

 private:
  int ground_size_;
  mutable std::atomic<std::int64_t> queries_{0};
};

class SubmodularOracle : public SetFunction {
 public:
  using SetFunction::SetFunction;

  bool IsSubmodular() const final { return true; }

  // Independent copy with a zeroed query counter.
  virtual std::shared_ptr<SubmodularOracle> Clone() const = 0;

  // Instance-file representation; see instance_json.h.
  virtual nlohmann::json ToJson() const = 0;
};

using OraclePtr = std::shared_ptr<const SubmodularOracle>;
using SetFunctionPtr = std::shared_ptr<const SetFunction>;

// f(A) = sum of w_i over i in A.
class ModularFunction : public SubmodularOracle {
 public:
  explicit ModularFunction(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }

  std::string Descriptor() const override;
  std::shared_ptr<SubmodularOracle> Clone() const override;
  nlohmann::json ToJson() const override;

 protected:
  double EvalImpl(const Subset& a) const override;

 private:
  std::vector<double> weights_;
  // weights_ zero-padded to a whole number of 64-bit words.
  std::vector<double> padded_;
};

// Weighted coverage: element i covers sets[i] within a universe of points
// 0..universe-1, and f(A) is the total weight of the covered points. Points
// either share one weight or carry their own.
class CoverageFunction : public SubmodularOracle {
 public:
  CoverageFunction(int universe, std::vector<std::vector<int>> sets,
                   double unit_weight = 1.0);
  CoverageFunction(int universe, std::vector<std::vector<int>> sets,
                   std::vector<double> universe_weights);

  int universe() const { return universe_; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  // Empty when every point has weight unit_weight().
  const std::vector<double>& universe_weights() const {
    return universe_weights_;
  }
  double unit_weight() const { return unit_weight_; }

  std::string Descriptor() const override;
  std::shared_ptr<SubmodularOracle> Clone() const override;
  nlohmann::json ToJson() const override;

 protected:
  double EvalImpl(const Subset& a) const override;

 private:
  void BuildMasks();

  int universe_;
  std::vector<std::vector<int>> sets_;
  double unit_weight_ = 1.0;
  std::vector<double> universe_weights_;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> masks_;  // ground_size() rows of row_words_.
  std::vector<double> padded_weights_;
};

// A function given by its full value table, indexed by the subset bit mask.
// Monotonicity and submodularity are the caller's responsibility; use
// CheckOracle() or CheckExhaustive() to confirm them.
class ExplicitFunction : public SubmodularOracle {
 public:
  static constexpr int kMaxGroundSize = 16;

  ExplicitFunction(int n, std::vector<double> table);

  const std::vector<double>& table() const { return table_; }

  std::string Descriptor() const override;
  std::shared_ptr<SubmodularOracle> Clone() const override;
  nlohmann::json ToJson() const override;

 protected:
  double EvalImpl(const Subset& a) const override;

 private:
  std::vector<double> table_;
};

// h(A) = f(A u S) - f(S). Queries go to f; f(S) is read once at construction.
class RestrictedFunction : public SubmodularOracle {
 public:
  RestrictedFunction(OraclePtr base, Subset pinned);

  const Subset& pinned() const { return pinned_; }
  double pinned_value() const { return pinned_value_; }

  std::int64_t QueryCount() const override;
  const SetFunction* CounterSource() const override;
  std::string Descriptor() const override;
  std::shared_ptr<SubmodularOracle> Clone() const override;
  nlohmann::json ToJson() const override;

 protected:
  double EvalImpl(const Subset& a) const override;

 private:
  OraclePtr base_;
  Subset pinned_;
  double pinned_value_;
};

// f extended with c copies of every element. Copy j of original x has id
// n + x * c + j, and h(A) = f(project(A)).
class CopyAugmentedFunction : public SubmodularOracle {
 public:
  CopyAugmentedFunction(OraclePtr base, int copies);

  int copies() const { return copies_; }
  int original_size() const { return base_->ground_size(); }
  const SubmodularOracle& base() const { return *base_; }
  int Original(int id) const;
  Subset Project(const Subset& a) const;

  std::string Descriptor() const override;
  std::shared_ptr<SubmodularOracle> Clone() const override;
  nlohmann::json ToJson() const override;

 protected:
  double EvalImpl(const Subset& a) const override;

 private:
  OraclePtr base_;
  int copies_;
};

// f on N plus `extra` fully additive elements of weight w each, appended at
// ids n..n+extra-1: h(A) = f(A n N) + w |A n X|.
class AdditiveExtensionFunction : public SubmodularOracle {
 public:
  AdditiveExtensionFunction(OraclePtr base, int extra, double weight);

  int extra() const { return extra_; }
  double weight() const { return weight_; }
  const SubmodularOracle& base() const { return *base_; }

  std::string Descriptor() const override;
  std::shared_ptr<SubmodularOracle> Clone() const override;
  nlohmann::json ToJson() const override;

 protected:
  double EvalImpl(const Subset& a) const override;

 private:
  OraclePtr base_;
  int extra_;
  double weight_;
  Subset base_mask_;
};

// h(A) = min_i f_i(A). Not submodular in general and deliberately not a
// SubmodularOracle. Reports the summed counters of the distinct underlying
// oracles.
class MinOfFamily : public SetFunction {
 public:
  explicit MinOfFamily(std::vector<SetFunctionPtr> family);

  const std::vector<SetFunctionPtr>& family() const { return family_; }

  std::int64_t QueryCount() const override;
  std::string Descriptor() const override;

 protected:
  double EvalImpl(const Subset& a) const override;

 private:
  std::vector<SetFunctionPtr> family_;
};

// h(X) = f(X u B). Monotone and submodular but h(empty) = f(B), so it is
// a plain SetFunction. Reports f's counter.
class ShiftedFunction : public SetFunction {
 public:
  ShiftedFunction(SetFunctionPtr base, Subset shift);

  std::int64_t QueryCount() const override;
  const SetFunction* CounterSource() const override;
  std::string Descriptor() const override;

 protected:
  double EvalImpl(const Subset& a) const override;

 private:
  SetFunctionPtr base_;
  Subset shift_;
};

// f(A u X) - f(A). Always two queries, even when X is inside A.
double Marginal(const SetFunction& f, const Subset& x, const Subset& a);
// f(A + x) - f(A).
double Marginal(const SetFunction& f, int x, const Subset& a);

OraclePtr Restrict(OraclePtr f, const Subset& pinned);
std::shared_ptr<const SetFunction> MakeMinOfFamily(
    std::vector<SetFunctionPtr> family);
std::shared_ptr<const SetFunction> Shift(SetFunctionPtr f, const Subset& b);

// Rejects plain set functions where a monotone submodular one is required.
const SubmodularOracle& RequireSubmodular(const SetFunction& f);

}  // namespace rsmax

#endif  // RSMAX_ORACLE_H_
