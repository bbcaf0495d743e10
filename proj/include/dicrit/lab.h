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

#ifndef DICRIT_LAB_H_
#define DICRIT_LAB_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dicrit/digraph.h"

namespace dicrit {

inline constexpr int kEnumerationBudget = 7;

struct EnumerationSpec {
  int n = 0;
  bool oriented_only = false;
  int min_out_degree = 0;
  int min_digirth = 0;  // 0 or 2 mean no constraint
  bool connected = false;
  bool strongly_connected = false;
  bool up_to_iso = true;
};

// With jobs > 1 the callback runs concurrently on worker threads.
using VisitFn = std::function<void(const Digraph&)>;

// Visits every digraph on spec.n vertices matching the filters, one per
// isomorphism class when up_to_iso. Throws BudgetExceeded past the
// enumeration budget.
std::int64_t Enumerate(const EnumerationSpec& spec, const VisitFn& visit,
                       int jobs = 1);

// Pair (i,j), i<j, contributes 2*A[i][j] + A[j][i]; pairs are ordered by j,
// then i. The canonical labelling minimises this sequence lexicographically.
std::vector<std::uint8_t> AdjacencyCode(const Digraph& d);
bool IsCanonical(const Digraph& d);
// Brute force over all n! labellings; intended for n <= 8.
Digraph CanonicalForm(const Digraph& d);

// One item of a suite corpus.
struct Instance {
  std::string label;
  Digraph digraph;
  std::map<std::string, int> params;
  std::optional<Digraph> pattern;  // tree for the tree-finder suites
};

enum class Outcome { kPass, kFail, kRefused };

struct Verdict {
  std::string suite;
  std::map<std::string, int> params;
  Outcome outcome = Outcome::kPass;
  std::int64_t checked = 0;
  std::int64_t elapsed_ms = 0;
  std::optional<Instance> counterexample;
  std::string violation;
  std::string refusal;
  std::vector<std::string> log;
  std::int64_t witnesses = 0;
  std::int64_t invalid_witnesses = 0;
};

struct SuiteOptions {
  int max_n = -1;  // -1: suite default
  int jobs = 1;
};

// Per-run counters a predicate may bump.
struct CheckContext {
  std::atomic<std::int64_t> witnesses{0};
  std::atomic<std::int64_t> invalid_witnesses{0};

  void Log(std::string line) {
    std::lock_guard<std::mutex> lock(mu);
    log.push_back(std::move(line));
  }
  std::mutex mu;
  std::vector<std::string> log;
};

std::vector<std::string> SuiteIds();
// Throws std::invalid_argument for an unknown id.
Verdict Verify(const std::string& suite, const SuiteOptions& options = {});
// Re-runs the suite predicate; returns the violation, or nullopt if it holds.
std::optional<std::string> Replay(const std::string& suite,
                                  const Instance& instance);

std::string OutcomeName(Outcome o);
// `SUITE <id> <pass|fail|refused> checked=<n> elapsed=<ms>`
std::string VerdictLine(const Verdict& v);

}  // namespace dicrit

#endif  // DICRIT_LAB_H_
