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

#ifndef RSMAX_ERRORS_H_
#define RSMAX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rsmax {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element id outside the ground set of the function it was passed to.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A caller-side contract violation: bad parameters, regime violations,
// missing copies and the like.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation would exceed its enumeration budget. Brute-force
// routines never fall back to sampling; they raise this instead.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed instance/config files or unknown identifiers.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rsmax

#endif  // RSMAX_ERRORS_H_
