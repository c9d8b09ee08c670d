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

#include "rsmax/oracle.h"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <string>

#include "rsmax/errors.h"
#include "rsmax/kernels.h"

namespace rsmax {
namespace {

std::size_t WordsFor(int bits) {
  return std::max<std::size_t>(1, (static_cast<std::size_t>(bits) + 63) / 64);
}

std::vector<double> PadWeights(const std::vector<double>& weights) {
  std::vector<double> padded(64 * WordsFor(static_cast<int>(weights.size())),
                             0.0);
  std::copy(weights.begin(), weights.end(), padded.begin());
  return padded;
}

void CheckNonNegative(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!(v >= 0.0) || v == std::numeric_limits<double>::infinity()) {
      throw PreconditionError(std::string(what) +
                              " must be finite and non-negative");
    }
  }
}

}  // namespace

SetFunction::SetFunction(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 1) throw PreconditionError("ground set must be non-empty");
}

double SetFunction::Eval(const Subset& a) const {
  if (a.Highest() >= ground_size_) {
    throw DomainError("element " + std::to_string(a.Highest()) +
                      " outside ground set of size " +
                      std::to_string(ground_size_));
  }
  queries_.fetch_add(1, std::memory_order_relaxed);
  return EvalImpl(a);
}

std::int64_t SetFunction::QueryCount() const { return OwnQueryCount(); }

// ---------------------------------------------------------------------------

ModularFunction::ModularFunction(std::vector<double> weights)
    : SubmodularOracle(static_cast<int>(weights.size())),
      weights_(std::move(weights)) {
  CheckNonNegative(weights_, "modular weights");
  padded_ = PadWeights(weights_);
}

double ModularFunction::EvalImpl(const Subset& a) const {
  const auto words = a.Words();
  const std::size_t count = std::min(words.size(), padded_.size() / 64);
  return ActiveKernels().masked_sum(words.data(), padded_.data(), count);
}

std::string ModularFunction::Descriptor() const {
  return "modular(n=" + std::to_string(ground_size()) + ")";
}

std::shared_ptr<SubmodularOracle> ModularFunction::Clone() const {
  return std::make_shared<ModularFunction>(weights_);
}

nlohmann::json ModularFunction::ToJson() const {
  return {{"kind", "modular"}, {"n", ground_size()}, {"weights", weights_}};
}

// ---------------------------------------------------------------------------

CoverageFunction::CoverageFunction(int universe,
                                   std::vector<std::vector<int>> sets,
                                   double unit_weight)
    : SubmodularOracle(static_cast<int>(sets.size())),
      universe_(universe),
      sets_(std::move(sets)),
      unit_weight_(unit_weight) {
  CheckNonNegative({unit_weight}, "unit weight");
  BuildMasks();
}

CoverageFunction::CoverageFunction(int universe,
                                   std::vector<std::vector<int>> sets,
                                   std::vector<double> universe_weights)
    : SubmodularOracle(static_cast<int>(sets.size())),
      universe_(universe),
      sets_(std::move(sets)),
      universe_weights_(std::move(universe_weights)) {
  if (static_cast<int>(universe_weights_.size()) != universe_) {
    throw PreconditionError("need one weight per universe point");
  }
  CheckNonNegative(universe_weights_, "universe weights");
  padded_weights_ = PadWeights(universe_weights_);
  BuildMasks();
}

void CoverageFunction::BuildMasks() {
  if (universe_ < 0) throw PreconditionError("negative universe size");
  row_words_ = WordsFor(universe_);
  masks_.assign(row_words_ * sets_.size(), 0);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    std::sort(sets_[i].begin(), sets_[i].end());
    sets_[i].erase(std::unique(sets_[i].begin(), sets_[i].end()),
                   sets_[i].end());
    for (int u : sets_[i]) {
      if (u < 0 || u >= universe_) {
        throw PreconditionError("covered point outside the universe");
      }
      masks_[i * row_words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
}

double CoverageFunction::EvalImpl(const Subset& a) const {
  const KernelTable& kernels = ActiveKernels();
  std::array<std::uint64_t, 8> small{};
  std::vector<std::uint64_t> large;
  std::uint64_t* acc = small.data();
  if (row_words_ > small.size()) {
    large.assign(row_words_, 0);
    acc = large.data();
  }
  a.ForEach([&](int e) {
    kernels.or_accumulate(acc, masks_.data() + e * row_words_, row_words_);
  });
  if (universe_weights_.empty()) {
    return static_cast<double>(kernels.popcount(acc, row_words_)) *
           unit_weight_;
  }
  return kernels.masked_sum(acc, padded_weights_.data(), row_words_);
}

std::string CoverageFunction::Descriptor() const {
  return "coverage(n=" + std::to_string(ground_size()) +
         ",universe=" + std::to_string(universe_) + ")";
}

std::shared_ptr<SubmodularOracle> CoverageFunction::Clone() const {
  if (universe_weights_.empty()) {
    return std::make_shared<CoverageFunction>(universe_, sets_, unit_weight_);
  }
  return std::make_shared<CoverageFunction>(universe_, sets_,
                                            universe_weights_);
}

nlohmann::json CoverageFunction::ToJson() const {
  nlohmann::json j = {{"kind", "coverage"},
                      {"n", ground_size()},
                      {"universe", universe_},
                      {"sets", sets_}};
  if (universe_weights_.empty()) {
    j["unit_weight"] = unit_weight_;
  } else {
    j["universe_weights"] = universe_weights_;
  }
  return j;
}

// ---------------------------------------------------------------------------

ExplicitFunction::ExplicitFunction(int n, std::vector<double> table)
    : SubmodularOracle(n), table_(std::move(table)) {
  if (n > kMaxGroundSize) {
    throw PreconditionError("explicit tables are limited to n <= 16");
  }
  if (table_.size() != (std::size_t{1} << n)) {
    throw PreconditionError("explicit table needs 2^n entries");
  }
  CheckNonNegative(table_, "table values");
  if (table_[0] != 0.0) throw PreconditionError("f(empty) must be 0");
}

double ExplicitFunction::EvalImpl(const Subset& a) const {
  return table_[a.Word(0)];
}

std::string ExplicitFunction::Descriptor() const {
  return "explicit(n=" + std::to_string(ground_size()) + ")";
}

std::shared_ptr<SubmodularOracle> ExplicitFunction::Clone() const {
  return std::make_shared<ExplicitFunction>(ground_size(), table_);
}

nlohmann::json ExplicitFunction::ToJson() const {
  return {{"kind", "explicit"}, {"n", ground_size()}, {"table", table_}};
}

// ---------------------------------------------------------------------------

RestrictedFunction::RestrictedFunction(OraclePtr base, Subset pinned)
    : SubmodularOracle(base->ground_size()),
      base_(std::move(base)),
      pinned_(std::move(pinned)) {
  pinned_value_ = base_->Eval(pinned_);
}

double RestrictedFunction::EvalImpl(const Subset& a) const {
  return base_->Eval(a | pinned_) - pinned_value_;
}

std::int64_t RestrictedFunction::QueryCount() const {
  return base_->QueryCount();
}

const SetFunction* RestrictedFunction::CounterSource() const {
  return base_->CounterSource();
}

std::string RestrictedFunction::Descriptor() const {
  return base_->Descriptor() + "|" + pinned_.ToString();
}

std::shared_ptr<SubmodularOracle> RestrictedFunction::Clone() const {
  return std::make_shared<RestrictedFunction>(base_->Clone(), pinned_);
}

nlohmann::json RestrictedFunction::ToJson() const {
  return {{"kind", "restricted"},
          {"n", ground_size()},
          {"base", base_->ToJson()},
          {"pinned", pinned_.Elements()}};
}

// ---------------------------------------------------------------------------

CopyAugmentedFunction::CopyAugmentedFunction(OraclePtr base, int copies)
    : SubmodularOracle([&] {
        if (copies < 1) throw PreconditionError("need at least one copy");
        const long long n = base->ground_size();
        const long long total = n * (copies + 1LL);
        if (total > std::numeric_limits<int>::max() / 2) {
          throw PreconditionError("copy augmentation overflows id range");
        }
        return static_cast<int>(total);
      }()),
      base_(std::move(base)),
      copies_(copies) {}

int CopyAugmentedFunction::Original(int id) const {
  const int n = base_->ground_size();
  return id < n ? id : (id - n) / copies_;
}

Subset CopyAugmentedFunction::Project(const Subset& a) const {
  Subset out;
  a.ForEach([&](int e) { out.Insert(Original(e)); });
  return out;
}

double CopyAugmentedFunction::EvalImpl(const Subset& a) const {
  return base_->Eval(Project(a));
}

std::string CopyAugmentedFunction::Descriptor() const {
  return base_->Descriptor() + "+copies(" + std::to_string(copies_) + ")";
}

std::shared_ptr<SubmodularOracle> CopyAugmentedFunction::Clone() const {
  return std::make_shared<CopyAugmentedFunction>(base_->Clone(), copies_);
}

nlohmann::json CopyAugmentedFunction::ToJson() const {
  return {{"kind", "copies"},
          {"n", ground_size()},
          {"copies", copies_},
          {"base", base_->ToJson()}};
}

// ---------------------------------------------------------------------------

AdditiveExtensionFunction::AdditiveExtensionFunction(OraclePtr base, int extra,
                                                     double weight)
    : SubmodularOracle(base->ground_size() + extra),
      base_(std::move(base)),
      extra_(extra),
      weight_(weight),
      base_mask_(Subset::Range(base_->ground_size())) {
  if (extra < 0) throw PreconditionError("negative extension size");
  CheckNonNegative({weight}, "extension weight");
}

double AdditiveExtensionFunction::EvalImpl(const Subset& a) const {
  const Subset inside = a & base_mask_;
  const int outside = a.Size() - inside.Size();
  return base_->Eval(inside) + weight_ * outside;
}

std::string AdditiveExtensionFunction::Descriptor() const {
  return base_->Descriptor() + "+additive(" + std::to_string(extra_) + ")";
}

std::shared_ptr<SubmodularOracle> AdditiveExtensionFunction::Clone() const {
  return std::make_shared<AdditiveExtensionFunction>(base_->Clone(), extra_,
                                                     weight_);
}

nlohmann::json AdditiveExtensionFunction::ToJson() const {
  return {{"kind", "additive-extension"},
          {"n", ground_size()},
          {"extra", extra_},
          {"weight", weight_},
          {"base", base_->ToJson()}};
}

// ---------------------------------------------------------------------------

MinOfFamily::MinOfFamily(std::vector<SetFunctionPtr> family)
    : SetFunction([&] {
        if (family.empty()) throw PreconditionError("empty function family");
        return family.front()->ground_size();
      }()),
      family_(std::move(family)) {
  for (const SetFunctionPtr& f : family_) {
    if (f->ground_size() != ground_size()) {
      throw PreconditionError("family members disagree on the ground set");
    }
  }
}

double MinOfFamily::EvalImpl(const Subset& a) const {
  double best = std::numeric_limits<double>::infinity();
  for (const SetFunctionPtr& f : family_) best = std::min(best, f->Eval(a));
  return best;
}

std::int64_t MinOfFamily::QueryCount() const {
  std::set<const SetFunction*> seen;
  std::int64_t total = 0;
  for (const SetFunctionPtr& f : family_) {
    const SetFunction* source = f->CounterSource();
    if (seen.insert(source).second) total += source->QueryCount();
  }
  return total;
}

std::string MinOfFamily::Descriptor() const {
  std::string out = "min(";
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (i > 0) out += ",";
    out += family_[i]->Descriptor();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

ShiftedFunction::ShiftedFunction(SetFunctionPtr base, Subset shift)
    : SetFunction(base->ground_size()),
      base_(std::move(base)),
      shift_(std::move(shift)) {}

double ShiftedFunction::EvalImpl(const Subset& a) const {
  return base_->Eval(a | shift_);
}

std::int64_t ShiftedFunction::QueryCount() const {
  return base_->QueryCount();
}

const SetFunction* ShiftedFunction::CounterSource() const {
  return base_->CounterSource();
}

std::string ShiftedFunction::Descriptor() const {
  return base_->Descriptor() + "+" + shift_.ToString();
}

// ---------------------------------------------------------------------------

double Marginal(const SetFunction& f, const Subset& x, const Subset& a) {
  return f.Eval(a | x) - f.Eval(a);
}

double Marginal(const SetFunction& f, int x, const Subset& a) {
  return f.Eval(a.With(x)) - f.Eval(a);
}

OraclePtr Restrict(OraclePtr f, const Subset& pinned) {
  return std::make_shared<RestrictedFunction>(std::move(f), pinned);
}

std::shared_ptr<const SetFunction> MakeMinOfFamily(
    std::vector<SetFunctionPtr> family) {
  return std::make_shared<MinOfFamily>(std::move(family));
}

std::shared_ptr<const SetFunction> Shift(SetFunctionPtr f, const Subset& b) {
  return std::make_shared<ShiftedFunction>(std::move(f), b);
}

const SubmodularOracle& RequireSubmodular(const SetFunction& f) {
  if (!f.IsSubmodular()) {
    throw PreconditionError(f.Descriptor() +
                            " is not a monotone submodular oracle");
  }
  return static_cast<const SubmodularOracle&>(f);
}

}  // namespace rsmax
