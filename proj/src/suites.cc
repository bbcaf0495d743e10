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

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <tuple>

#include "dicrit/bounds.h"
#include "dicrit/constructions.h"
#include "dicrit/dicolouring.h"
#include "dicrit/lab.h"
#include "dicrit/subdivision.h"

namespace dicrit {

namespace {

using Emit = std::function<void(const Instance&)>;
using Predicate =
    std::function<std::optional<std::string>(const Instance&, CheckContext&)>;
using Corpus = std::function<void(int max_n, int jobs, const Emit&)>;

struct Suite {
  std::string id;
  int default_max_n;
  Corpus corpus;
  Predicate check;
};

// Bumps the witness counters; returns a violation for an invalid witness.
std::optional<std::string> Audit(const SubdivisionWitness& w,
                                 CheckContext& ctx) {
  ctx.witnesses.fetch_add(1);
  const WitnessCheck check = ValidateWitness(w);
  if (check.valid) return std::nullopt;
  ctx.invalid_witnesses.fetch_add(1);
  return "invalid witness: " + check.violation;
}

Corpus Enumerated(EnumerationSpec spec, int min_n = 1) {
  return [spec, min_n](int max_n, int jobs, const Emit& emit) {
    for (int n = min_n; n <= max_n; ++n) {
      EnumerationSpec s = spec;
      s.n = n;
      Enumerate(s, [&](const Digraph& d) { emit(Instance{"", d, {}, {}}); },
                jobs);
    }
  };
}

// Enumerated digraphs that are k-dicritical for k = chi (or a fixed k).
Corpus EnumeratedDicritical(std::optional<int> fixed_k) {
  return [fixed_k](int max_n, int jobs, const Emit& emit) {
    for (int n = 1; n <= max_n; ++n) {
      EnumerationSpec s;
      s.n = n;
      s.strongly_connected = true;
      Enumerate(s, [&](const Digraph& d) {
        const int k = fixed_k ? *fixed_k : DichromaticNumber(d).chi;
        if (k < 2 || !CheckDicritical(d, k).dicritical) return;
        emit(Instance{"", d, {{"k", k}}, {}});
      }, jobs);
    }
  };
}

Corpus Fixed(std::vector<Instance> items) {
  return [items = std::move(items)](int, int, const Emit& emit) {
    for (const Instance& i : items) emit(i);
  };
}

Instance Fixture(std::string label, Digraph d, std::map<std::string, int> p) {
  return Instance{std::move(label), std::move(d), std::move(p), {}};
}

Digraph JumpCirculant(int n) {
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    arcs.emplace_back(i, (i + 1) % n);
    arcs.emplace_back(i, (i + 2) % n);
  }
  return Digraph::FromArcs(n, arcs);
}

Predicate SpindleHolds(int k) {
  return [k](const Instance& in, CheckContext& ctx) -> std::optional<std::string> {
    const auto w = FindSpindle(in.digraph, k);
    if (!w) return "no subdivision of C(" + std::to_string(k) + "," +
                    std::to_string(k) + ")";
    return Audit(*w, ctx);
  };
}

Predicate OutStarEverywhere(int k, int l) {
  return [k, l](const Instance& in, CheckContext& ctx) -> std::optional<std::string> {
    for (Vertex u = 0; u < in.digraph.order(); ++u) {
      const auto w = FindOutStar(in.digraph, u, k, l);
      if (!w) {
        return "no out-star S_" + std::to_string(k) + "^(" + std::to_string(l) +
               ") centred at " + std::to_string(u);
      }
      if (auto bad = Audit(*w, ctx)) return bad;
    }
    return std::nullopt;
  };
}

int StarThreshold(int k, int l) {
  int total = 0, power = 1;
  for (int i = 0; i < l; ++i) {
    total += power;
    power *= k;
  }
  return total + 1;  // (k^l - 1)/(k - 1) + 1
}

Corpus StarCorpus(const std::vector<std::pair<int, int>>& kl, int slack) {
  return [kl, slack](int max_n, int jobs, const Emit& emit) {
    for (const auto& [k, l] : kl) {
      for (int n = 1; n <= max_n; ++n) {
        EnumerationSpec s;
        s.n = n;
        s.min_out_degree = k - slack;
        s.min_digirth = slack ? 0 : StarThreshold(k, l);
        Enumerate(s, [&](const Digraph& d) {
          emit(Instance{"", d, {{"k", k}, {"l", l}}, {}});
        }, jobs);
      }
    }
  };
}

Predicate OutStarFromParams() {
  return [](const Instance& in, CheckContext& ctx) {
    return OutStarEverywhere(in.params.at("k"), in.params.at("l"))(in, ctx);
  };
}

std::vector<Instance> CriticalFixtures() {
  std::vector<Instance> out;
  for (int n = 2; n <= 5; ++n) {
    out.push_back(Fixture("C" + std::to_string(n), DirectedCycle(n), {{"k", 2}}));
  }
  for (int n = 1; n <= 4; ++n) {
    out.push_back(Fixture("bidK" + std::to_string(n), BidirectedComplete(n),
                          {{"k", n}}));
  }
  out.push_back(Fixture("D10", CycleWithDominatingVertex(10), {{"k", 3}}));
  out.push_back(Fixture("D_3,5", AntidirectedCritical(3, 5), {{"k", 3}}));
  out.push_back(Fixture("D_3,7", AntidirectedCritical(3, 7), {{"k", 3}}));
  return out;
}

Predicate JoinIsCritical(int shift) {
  return [shift](const Instance& in, CheckContext&) -> std::optional<std::string> {
    const int k = in.params.at("k");
    if (!CheckDicritical(in.digraph, k).dicritical) {
      return "fixture is not " + std::to_string(k) + "-dicritical";
    }
    const int want = k + shift;
    if (!CheckDicritical(UniversalJoin(in.digraph), want).dicritical) {
      return "join is not " + std::to_string(want) + "-dicritical";
    }
    return std::nullopt;
  };
}

Predicate ComponentBoundHolds() {
  return [](const Instance& in, CheckContext&) -> std::optional<std::string> {
    const ComponentBoundCheck c = CheckComponentBound(in.digraph, in.params.at("k"), 3);
    if (c.holds) return std::nullopt;
    std::string s = "cc bound fails for S = {";
    for (Vertex v : c.violating_set->members) {
      s += (s.back() == '{' ? "" : ",") + std::to_string(v);
    }
    return s + "}";
  };
}

std::vector<Instance> DknFixtures() {
  std::vector<Instance> out;
  for (int n : {3, 5, 7, 9, 11}) {
    out.push_back(Fixture("D_3," + std::to_string(n), AntidirectedCritical(3, n),
                          {{"k", 3}, {"n", n}}));
  }
  for (int n : {3, 5, 7, 9}) {
    out.push_back(Fixture("D_4," + std::to_string(n), AntidirectedCritical(4, n),
                          {{"k", 4}, {"n", n}}));
  }
  return out;
}

Predicate DknHolds(bool weakened) {
  return [weakened](const Instance& in, CheckContext&) -> std::optional<std::string> {
    const int k = in.params.at("k");
    if (!CheckDicritical(in.digraph, k).dicritical) {
      return "not " + std::to_string(k) + "-dicritical";
    }
    const int bound = weakened ? 2 * k - 2 : 3 * k;
    const int longest = LongestDirectedPath(in.digraph).order();
    if (longest > bound) {
      return "directed path on " + std::to_string(longest) + " > " +
             std::to_string(bound) + " vertices";
    }
    return std::nullopt;
  };
}

Corpus KnCorpus() {
  return [](int max_n, int, const Emit& emit) {
    for (int n = 1; n <= max_n; ++n) emit(Instance{"n=" + std::to_string(n), {}, {{"n", n}}, {}});
  };
}

Predicate KnHolds(bool weakened) {
  return [weakened](const Instance& in, CheckContext&) -> std::optional<std::string> {
    const int n = in.params.at("n");
    const ScaledPower f = KnRecurrenceValue(n);
    if (weakened) {
      const ScaledPower naive(1, Rational(n * n, 2));
      if (f > naive) return "F(" + std::to_string(n) + ") > 4^(n^2/2)";
      return std::nullopt;
    }
    if (f > KnClosedForm(n)) return "F(" + std::to_string(n) + ") > g(n)";
    const KnBoundCheck check = CheckKnBound(n);
    if (!check.holds) {
      return "induction identity fails at n = " +
             std::to_string(check.first_failure.value_or(-1));
    }
    return std::nullopt;
  };
}

Corpus CirculantCorpus(bool weakened) {
  return [weakened](int, int, const Emit& emit) {
    for (int k : {3, 4, 5}) {
      const int n = weakened ? 2 * k + 1 : 2 * k - 1;
      emit(Instance{"circulant Z/" + std::to_string(n), JumpCirculant(n),
                    {{"k", k}}, {}});
    }
  };
}

Predicate CirculantHolds() {
  return [](const Instance& in, CheckContext& ctx) -> std::optional<std::string> {
    const int k = in.params.at("k");
    const Digraph& d = in.digraph;
    ctx.Log("k=" + std::to_string(k) + " n=" + std::to_string(d.order()) +
            " measured digirth " + Digirth(d).ToString() +
            " (stated k-1 = " + std::to_string(k - 1) + ")");
    if (d.min_out_degree() != 2) return std::string("min out-degree is not 2");
    if (const auto w = FindSpindle(d, k)) {
      if (auto bad = Audit(*w, ctx)) return bad;
      return "found a subdivision of C(" + std::to_string(k) + "," +
             std::to_string(k) + ")";
    }
    return std::nullopt;
  };
}

// Tree instances carry counts as params "u->v" plus "mode" (0 oriented,
// 1 bidirected).
Instance TreeInstance(std::string label, Digraph host, Digraph tree,
                      const std::map<Arc, int>& counts, bool bidirected) {
  Instance in{std::move(label), std::move(host), {{"mode", bidirected ? 1 : 0}},
              std::move(tree)};
  for (const auto& [a, c] : counts) {
    in.params[std::to_string(a.first) + "->" + std::to_string(a.second)] = c;
  }
  return in;
}

std::map<Arc, int> TreeCounts(const Instance& in) {
  std::map<Arc, int> counts;
  for (const Arc& a : in.pattern->arcs()) {
    counts[a] = in.params.at(std::to_string(a.first) + "->" + std::to_string(a.second));
  }
  return counts;
}

std::vector<Digraph> SmallOrientedTrees() {
  return {
      Digraph::FromArcs(1, {}),
      Digraph::FromArcs(2, {{0, 1}}),
      Digraph::FromArcs(3, {{0, 1}, {1, 2}}),  // directed path
      Digraph::FromArcs(3, {{0, 1}, {0, 2}}),  // out-star
      Digraph::FromArcs(3, {{1, 0}, {2, 0}}),  // in-star
  };
}

void AllCountVectors(const Digraph& tree, int max_count,
                     const std::function<void(const std::map<Arc, int>&)>& f) {
  const std::vector<Arc> arcs = tree.arcs();
  std::map<Arc, int> counts;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == arcs.size()) {
      f(counts);
      return;
    }
    for (int c = 0; c <= max_count; ++c) {
      counts[arcs[i]] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

Corpus TreeCorpus() {
  return [](int, int, const Emit& emit) {
    const Digraph arc = Digraph::FromArcs(2, {{0, 1}});
    for (int m = 5; m <= 9; ++m) {
      for (int c = 0; c <= m - 2; ++c) {
        emit(TreeInstance("C" + std::to_string(m) + " arc count " + std::to_string(c),
                          DirectedCycle(m), arc, {{{0, 1}, c}}, false));
      }
    }
    const Digraph paley = Paley7();
    for (const Digraph& t : SmallOrientedTrees()) {
      AllCountVectors(t, 2, [&](const std::map<Arc, int>& counts) {
        emit(TreeInstance("paley7 tree n=" + std::to_string(t.order()), paley, t,
                          counts, false));
      });
    }
    // Bidirected trees: hosts with digirth >= 2(c+1) and enough colours.
    const Digraph bid2 = BidirectedComplete(2);
    const Digraph bid_path3 = Digraph::FromArcs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    for (int m = 2; m <= 9; ++m) {
      for (int c = 0; 2 * (c + 1) <= m; ++c) {
        emit(TreeInstance("C" + std::to_string(m) + " digon count " + std::to_string(c),
                          DirectedCycle(m), bid2, UniformCounts(bid2, c), true));
      }
    }
    emit(TreeInstance("paley7 bid P3", paley, bid_path3,
                      UniformCounts(bid_path3, 0), true));
    emit(TreeInstance("D10 bid P3", CycleWithDominatingVertex(10), bid_path3,
                      UniformCounts(bid_path3, 0), true));
  };
}

Corpus TreeBoundaryCorpus() {
  return [](int, int, const Emit& emit) {
    const Digraph arc = Digraph::FromArcs(2, {{0, 1}});
    for (int m = 5; m <= 9; ++m) {
      emit(TreeInstance("C" + std::to_string(m) + " arc count " + std::to_string(m - 1),
                        DirectedCycle(m), arc, {{{0, 1}, m - 1}}, false));
    }
  };
}

Predicate TreeHolds() {
  return [](const Instance& in, CheckContext& ctx) -> std::optional<std::string> {
    const bool bidirected = in.params.at("mode") == 1;
    const std::map<Arc, int> counts = TreeCounts(in);
    TreeSearchResult r;
    try {
      r = FindTreeSubdivision(in.digraph, *in.pattern, counts,
                              bidirected ? TreeMode::kBidirected : TreeMode::kOriented);
    } catch (const PreconditionError& e) {
      return std::string("precondition rejected: ") + e.what();
    }
    if (!r.witness) return "finder failed: " + r.failure;
    if (!r.via_peeling) ctx.Log("exhaustive fallback used: " + in.label);
    if (auto bad = Audit(*r.witness, ctx)) return bad;
    for (const auto& [a, path] : r.witness->arc_paths) {
      const int want = counts.at(a) + 1;
      if (bidirected ? path.length() < want : path.length() != want) {
        return "arc path has the wrong length";
      }
    }
    return std::nullopt;
  };
}

Predicate ArcStrong() {
  return [](const Instance& in, CheckContext&) -> std::optional<std::string> {
    if (IsTwoArcStrong(in.digraph)) return std::nullopt;
    return std::string("not 2-arc-strong");
  };
}

Predicate LongPathHolds() {
  return [](const Instance& in, CheckContext&) -> std::optional<std::string> {
    const Digraph& d = in.digraph;
    const int n = d.order();
    if (n == 0) return std::nullopt;
    const int want = std::min(n, d.min_out_degree() + d.min_in_degree() + 1);
    const int got = LongestDirectedPath(d).order();
    if (got >= want) return std::nullopt;
    return "longest directed path has " + std::to_string(got) + " < " +
           std::to_string(want) + " vertices";
  };
}

Corpus BiconnectedOriented(bool require_biconnected) {
  return [require_biconnected](int max_n, int jobs, const Emit& emit) {
    for (int n = 1; n <= max_n; ++n) {
      EnumerationSpec s;
      s.n = n;
      s.oriented_only = true;
      s.connected = true;
      Enumerate(s, [&](const Digraph& d) {
        if (require_biconnected && !IsBiconnected(d)) return;
        emit(Instance{"", d, {}, {}});
      }, jobs);
    }
  };
}

Predicate DiracHolds() {
  return [](const Instance& in, CheckContext&) -> std::optional<std::string> {
    const OrientedPathCycle pc = LongestOrientedPathAndCycle(in.digraph);
    const int t = pc.path_order - 1;
    const int c = pc.cycle_order;
    if (c * c >= 4 * t) return std::nullopt;
    return "longest cycle " + std::to_string(c) + " < 2 sqrt(" + std::to_string(t) + ")";
  };
}

const std::vector<Suite>& Registry() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> s;
    EnumerationSpec oriented2;
    oriented2.oriented_only = true;
    oriented2.min_out_degree = 2;
    s.push_back({"T6.2", 7, Enumerated(oriented2), SpindleHolds(2)});
    EnumerationSpec oriented1;
    oriented1.oriented_only = true;
    oriented1.min_out_degree = 1;
    s.push_back({"T6.2-weakened", 3, Enumerated(oriented1), SpindleHolds(2)});

    EnumerationSpec girth4;
    girth4.min_out_degree = 2;
    girth4.min_digirth = 4;
    s.push_back({"T6.4", 7, Enumerated(girth4), OutStarEverywhere(2, 2)});
    EnumerationSpec out2;
    out2.min_out_degree = 2;
    s.push_back({"T6.4-weakened", 4, Enumerated(out2), OutStarEverywhere(2, 2)});

    s.push_back({"T6.3", 5, StarCorpus({{2, 1}, {3, 1}, {2, 2}}, 0),
                 OutStarFromParams()});
    s.push_back({"T6.3-weakened", 3, StarCorpus({{2, 1}}, 1), OutStarFromParams()});

    s.push_back({"T3.2", 0, Fixed(DknFixtures()), DknHolds(false)});
    s.push_back({"T3.2-weakened", 0, Fixed(DknFixtures()), DknHolds(true)});

    s.push_back({"L3.1", 0, Fixed(CriticalFixtures()), JoinIsCritical(1)});
    s.push_back({"L3.1-weakened", 0, Fixed(CriticalFixtures()), JoinIsCritical(0)});

    s.push_back({"C3.3.1", 5,
                 [](int max_n, int jobs, const Emit& emit) {
                   emit(Fixture("C5", DirectedCycle(5), {{"k", 2}}));
                   emit(Fixture("bidK3", BidirectedComplete(3), {{"k", 3}}));
                   emit(Fixture("D10", CycleWithDominatingVertex(10), {{"k", 3}}));
                   emit(Fixture("D_3,7", AntidirectedCritical(3, 7), {{"k", 3}}));
                   EnumeratedDicritical(std::nullopt)(max_n, jobs, emit);
                 },
                 ComponentBoundHolds()});
    s.push_back({"C3.3.1-weakened", 0,
                 Fixed({Fixture("C3+C3", DirectedCycle(3).DisjointUnion(DirectedCycle(3)),
                                {{"k", 2}})}),
                 ComponentBoundHolds()});

    s.push_back({"P2.3", 64, KnCorpus(), KnHolds(false)});
    s.push_back({"P2.3-weakened", 64, KnCorpus(), KnHolds(true)});

    s.push_back({"S7", 0, CirculantCorpus(false), CirculantHolds()});
    s.push_back({"S7-weakened", 0, CirculantCorpus(true), CirculantHolds()});

    s.push_back({"T5", 0, TreeCorpus(), TreeHolds()});
    s.push_back({"T5-weakened", 0, TreeBoundaryCorpus(), TreeHolds()});

    s.push_back({"ARCSTRONG", 5, EnumeratedDicritical(3), ArcStrong()});
    s.push_back({"ARCSTRONG-weakened", 4, EnumeratedDicritical(2), ArcStrong()});

    EnumerationSpec connected;
    connected.connected = true;
    s.push_back({"B81", 5, Enumerated(connected), LongPathHolds()});
    s.push_back({"B81-weakened", 4, Enumerated(EnumerationSpec{}), LongPathHolds()});

    s.push_back({"DIRAC", 6, BiconnectedOriented(true), DiracHolds()});
    s.push_back({"DIRAC-weakened", 4, BiconnectedOriented(false), DiracHolds()});
    return s;
  }();
  return suites;
}

const Suite& FindSuite(const std::string& id) {
  for (const Suite& s : Registry()) {
    if (s.id == id) return s;
  }
  throw std::invalid_argument("unknown suite `" + id + "`");
}

// Orders counterexamples: smaller digraph first, then by adjacency code,
// then by parameters.
auto InstanceKey(const Instance& in) {
  return std::make_tuple(in.digraph.order(), in.digraph.size(),
                         AdjacencyCode(in.digraph), in.params, in.label);
}

std::string DescribeInstance(const Instance& in) {
  if (!in.label.empty()) return in.label;
  std::string s = "n=" + std::to_string(in.digraph.order()) + " arcs=";
  bool first = true;
  for (const auto& [u, v] : in.digraph.arcs()) {
    s += (first ? "" : ",") + std::to_string(u) + ">" + std::to_string(v);
    first = false;
  }
  return s;
}

}  // namespace

std::vector<std::string> SuiteIds() {
  std::vector<std::string> ids;
  for (const Suite& s : Registry()) ids.push_back(s.id);
  return ids;
}

Verdict Verify(const std::string& id, const SuiteOptions& options) {
  const Suite& suite = FindSuite(id);
  Verdict v;
  v.suite = id;
  const int max_n = options.max_n >= 0 ? options.max_n : suite.default_max_n;
  if (suite.default_max_n > 0) v.params["max_n"] = max_n;
  const auto start = std::chrono::steady_clock::now();
  CheckContext ctx;
  std::mutex mu;
  std::optional<std::string> refusal;
  auto emit = [&](const Instance& in) {
    std::optional<std::string> bad;
    try {
      bad = suite.check(in, ctx);
    } catch (const BudgetExceeded& e) {
      std::lock_guard<std::mutex> lock(mu);
      if (!refusal) refusal = e.what();
      return;
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    std::lock_guard<std::mutex> lock(mu);
    ++v.checked;
    if (bad && (!v.counterexample || InstanceKey(in) < InstanceKey(*v.counterexample))) {
      v.counterexample = in;
      if (v.counterexample->label.empty()) {
        v.counterexample->label = DescribeInstance(in);
      }
      v.violation = *bad;
    }
  };
  try {
    suite.corpus(max_n, std::max(1, options.jobs), emit);
  } catch (const BudgetExceeded& e) {
    if (!refusal) refusal = e.what();
  }
  v.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  v.witnesses = ctx.witnesses.load();
  v.invalid_witnesses = ctx.invalid_witnesses.load();
  v.log = ctx.log;
  std::sort(v.log.begin(), v.log.end());
  if (v.counterexample) {
    v.outcome = Outcome::kFail;
  } else if (refusal) {
    v.outcome = Outcome::kRefused;
    v.refusal = *refusal;
  } else {
    v.outcome = Outcome::kPass;
  }
  return v;
}

std::optional<std::string> Replay(const std::string& id, const Instance& instance) {
  CheckContext ctx;
  return FindSuite(id).check(instance, ctx);
}

std::string OutcomeName(Outcome o) {
  switch (o) {
    case Outcome::kPass:
      return "pass";
    case Outcome::kFail:
      return "fail";
    case Outcome::kRefused:
      return "refused";
  }
  return "unknown";
}

std::string VerdictLine(const Verdict& v) {
  return "SUITE " + v.suite + " " + OutcomeName(v.outcome) +
         " checked=" + std::to_string(v.checked) +
         " elapsed=" + std::to_string(v.elapsed_ms);
}

}  // namespace dicrit
