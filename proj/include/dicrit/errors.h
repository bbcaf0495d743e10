// Copyright 2026 The dicrit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DICRIT_ERRORS_H_
#define DICRIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dicrit {

// Malformed input to a builder or parser.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact search would exceed its configured vertex budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem hypothesis required by a constructive finder does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Something the mathematics guarantees did not happen. Carries a state dump.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Default vertex budget for exact solvers; DICRIT_BUDGET overrides it.
inline constexpr int kDefaultVertexBudget = 16;

int VertexBudget();
void CheckBudget(int order, const std::string& what);

}  // namespace dicrit

#endif  // DICRIT_ERRORS_H_
