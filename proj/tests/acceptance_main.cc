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
// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dicrit/bounds.h"
#include "dicrit/constructions.h"
#include "dicrit/dicolouring.h"
#include "dicrit/lab.h"
#include "dicrit/subdivision.h"
#include "oracles.h"

namespace {

using namespace dicrit;

// Wall-clock ceilings in milliseconds, one per criterion.
constexpr std::int64_t kLimitMs[11] = {0,          60'000,    60'000,  600'000,
                                       300'000,    1'800'000, 1'800'000, 300'000,
                                       300'000,    1'000,     900'000};

// Collects the first few reasons a criterion failed.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  void Note(const std::string& s) { info_ << (info_.tellp() > 0 ? "; " : "") << s; }
  bool ok() const { return failures_ == 0; }
  std::string detail() const { return ok() ? info_.str() : notes_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
  std::ostringstream info_;
};

void Criterion1(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    c.Expect(DichromaticNumber(BidirectedComplete(n)).chi == n,
             "chi(bid K" + std::to_string(n) + ") != " + std::to_string(n));
  }
  std::int64_t total = 0;
  for (int n = 1; n <= 4; ++n) {
    Enumerate({.n = n}, [&](const Digraph& d) {
      ++total;
      const int chi = DichromaticNumber(d).chi;
      c.Expect((chi == 1) == IsAcyclic(d), "chi = 1 disagrees with acyclicity");
      c.Expect(chi == oracle::BruteChi(d), "solver disagrees with brute force");
    });
  }
  c.Note(std::to_string(total) + " digraphs n<=4");
}

void Criterion2(Check& c) {
  const Digraph d10 = CycleWithDominatingVertex(10);
  c.Expect(DichromaticNumber(d10).chi == 3, "chi(D10) != 3");
  c.Expect(CheckDicritical(d10, 3).dicritical, "D10 not 3-dicritical");
  c.Expect(!ContainsSubdivision(d10, Spindle(3, 3)).has_value(),
           "D10 contains a C(3,3) subdivision");
}

void Criterion3(Check& c) {
  for (int n : {7, 9, 11}) {
    const Digraph d = AntidirectedCritical(3, n);
    const std::string tag = "D_3," + std::to_string(n);
    c.Expect(CheckDicritical(d, 3).dicritical, tag + " not 3-dicritical");
    const int longest = LongestDirectedPath(d).order();
    c.Expect(longest <= 9, tag + " has a directed path on " + std::to_string(longest));
    c.Note(tag + " longest=" + std::to_string(longest));
  }
  const Digraph d47 = AntidirectedCritical(4, 7);
  c.Expect(d47 == UniversalJoin(AntidirectedCritical(3, 7)), "D_4,7 != join(D_3,7)");
  c.Expect(CheckDicritical(d47, 4).dicritical, "D_4,7 not 4-dicritical");
}

void Criterion4(Check& c) {
  const std::vector<std::pair<Digraph, int>> fixtures{
      {DirectedCycle(5), 2},
      {BidirectedComplete(3), 3},
      {CycleWithDominatingVertex(10), 3},
      {AntidirectedCritical(3, 7), 3}};
  std::int64_t sets = 0;
  for (const auto& [d, k] : fixtures) {
    const ComponentBoundCheck r = CheckComponentBound(d, k, 3);
    c.Expect(r.holds, "component bound fails");
    sets += r.checked_sets;
  }
  c.Note(std::to_string(sets) + " sets");
}

void Criterion5(Check& c) {
  const Verdict v = Verify("T6.2", {.max_n = 6});
  c.Expect(v.outcome == Outcome::kPass, "T6.2 " + OutcomeName(v.outcome) + " " + v.violation);
  c.Expect(v.checked > 0 && v.witnesses == v.checked, "T6.2 witness count mismatch");
  c.Expect(v.invalid_witnesses == 0, "T6.2 invalid witness");
  const Verdict weak = Verify("T6.2-weakened", {.max_n = 3});
  c.Expect(weak.outcome == Outcome::kFail, "T6.2-weakened did not fail");
  c.Expect(weak.counterexample &&
               CanonicalForm(weak.counterexample->digraph) == CanonicalForm(DirectedCycle(3)),
           "T6.2-weakened counterexample is not C3");
  c.Note("checked=" + std::to_string(v.checked));
}

void Criterion6(Check& c) {
  // Nothing qualifies below 7 vertices, so n = 7 is run as well.
  for (int n : {6, 7}) {
    const Verdict v = Verify("T6.4", {.max_n = n});
    c.Expect(v.outcome == Outcome::kPass, "T6.4 " + OutcomeName(v.outcome) + " " + v.violation);
    c.Expect(v.invalid_witnesses == 0, "T6.4 invalid witness");
    c.Note("n<=" + std::to_string(n) + " checked=" + std::to_string(v.checked));
  }
  c.Expect(Verify("T6.4-weakened").outcome == Outcome::kFail, "T6.4-weakened did not fail");
}

void Criterion7(Check& c) {
  for (int k = 3; k <= 5; ++k) {
    const Digraph d = CirculantTwoJumps(k);
    c.Expect(d.min_out_degree() == 2 && d.order() == 2 * k - 1, "circulant shape");
    c.Expect(!FindSpindle(d, k).has_value(), "circulant contains C(k,k)");
    c.Note("k=" + std::to_string(k) + " digirth=" + Digirth(d).ToString() +
           " (stated k-1=" + std::to_string(k - 1) + ")");
  }
}

void Criterion8(Check& c) {
  const Verdict v = Verify("T5");
  c.Expect(v.outcome == Outcome::kPass, "T5 " + OutcomeName(v.outcome) + " " + v.violation);
  c.Expect(v.invalid_witnesses == 0, "T5 invalid witness");
  c.Note("instances=" + std::to_string(v.checked) +
         " fallback=" + std::to_string(v.log.size()));
}

void Criterion9(Check& c) {
  c.Expect(CheckKnBound(64).holds, "kn bound check");
  c.Expect(MaderBoundGeneral(1, 0, 1) == 1, "mader(1,0,1)");
  c.Expect(MaderBoundGeneral(3, 3, 1) == 9, "mader(3,3,1)");
  c.Expect(MaderBoundGeneral(2, 2, 1) == 5, "mader(2,2,1)");
  c.Expect(SubdivisionBound(1, 0) == Rational(1), "subdivision_bound(1,0)");
  c.Expect(SubdivisionBound(2, 1) == Rational(31, 3), "subdivision_bound(2,1)");
  c.Expect(SubdivisionBound(3, 3) == Rational(767, 3), "subdivision_bound(3,3)");
}

void Criterion10(Check& c) {
  std::int64_t witnesses = 0;
  for (const std::string& id : SuiteIds()) {
    const Verdict v = Verify(id);
    c.Expect(v.invalid_witnesses == 0, id + " produced an invalid witness");
    c.Expect(v.outcome != Outcome::kRefused, id + " refused");
    witnesses += v.witnesses;
  }
  const std::vector<Digraph> patterns{DirectedCycle(3), Spindle(1, 2), Spindle(2, 2),
                                      OutStar(2, 1)};
  std::int64_t pairs = 0;
  for (int n = 1; n <= 5; ++n) {
    Enumerate({.n = n}, [&](const Digraph& d) {
      for (const Digraph& f : patterns) {
        ++pairs;
        const auto w = ContainsSubdivision(d, f);
        c.Expect(w.has_value() == oracle::BruteContainsSubdivision(d, f),
                 "oracle disagreement");
        if (w) {
          ++witnesses;
          c.Expect(ValidateWitness(*w).valid, "invalid witness");
        }
      }
    });
  }
  c.Note(std::to_string(witnesses) + " witnesses validated, " + std::to_string(pairs) +
         " oracle pairs");
}

}  // namespace

int main() {
  const std::vector<std::function<void(Check&)>> criteria{
      Criterion1, Criterion2, Criterion3, Criterion4, Criterion5,
      Criterion6, Criterion7, Criterion8, Criterion9, Criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i](c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    c.Expect(ms <= kLimitMs[id], "over time limit " + std::to_string(kLimitMs[id]) + " ms");
    std::cout << "CRITERION " << id << " " << (c.ok() ? "PASS" : "FAIL") << " "
              << c.detail() << " (" << ms << " ms)" << std::endl;
    if (!c.ok()) ++failed;
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
