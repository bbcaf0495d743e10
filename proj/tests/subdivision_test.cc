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

#include <gtest/gtest.h>

#include "dicrit/constructions.h"
#include "dicrit/dg_format.h"
#include "dicrit/lab.h"
#include "dicrit/subdivision.h"
#include "dicrit/witness_json.h"
#include "oracles.h"

namespace dicrit {
namespace {

Digraph WithArc(const Digraph& d, Vertex u, Vertex v) {
  std::vector<Arc> arcs = d.arcs();
  arcs.emplace_back(u, v);
  return Digraph::FromArcs(d.order(), arcs);
}

SubdivisionWitness Identity(const Digraph& f) {
  SubdivisionWitness w{f, f, {}, {}};
  for (Vertex v = 0; v < f.order(); ++v) w.branch_map.push_back(v);
  for (const Arc& a : f.arcs()) w.arc_paths[a] = DirectedPath{{a.first, a.second}};
  return w;
}

TEST(ValidateWitnessTest, Identity) {
  EXPECT_TRUE(ValidateWitness(Identity(Spindle(2, 3))).valid);
  EXPECT_TRUE(ValidateWitness(Identity(Paley7())).valid);
}

TEST(ValidateWitnessTest, SharedInternalVertex) {
  // Both star arcs routed through host vertex 3.
  const Digraph host = Digraph::FromArcs(4, {{0, 3}, {3, 1}, {3, 2}});
  SubdivisionWitness w{OutStar(2, 1), host, {0, 1, 2}, {}};
  w.arc_paths[{0, 1}] = DirectedPath{{0, 3, 1}};
  w.arc_paths[{0, 2}] = DirectedPath{{0, 3, 2}};
  const WitnessCheck c = ValidateWitness(w);
  EXPECT_FALSE(c.valid);
  EXPECT_FALSE(c.violation.empty());
}

TEST(ValidateWitnessTest, Negatives) {
  const SubdivisionWitness good = *ContainsSubdivision(DirectedCycle(5), DirectedCycle(3));
  ASSERT_TRUE(ValidateWitness(good).valid);

  SubdivisionWitness missing = good;
  missing.arc_paths.erase(missing.arc_paths.begin());
  EXPECT_FALSE(ValidateWitness(missing).valid);

  SubdivisionWitness wrong_end = good;
  auto& path = wrong_end.arc_paths.begin()->second;
  path.vertices.back() = (path.vertices.back() + 1) % 5;
  EXPECT_FALSE(ValidateWitness(wrong_end).valid);

  SubdivisionWitness not_arc = good;
  not_arc.arc_paths.begin()->second.vertices = {not_arc.branch_map[0],
                                                not_arc.branch_map[1]};
  if (!DirectedCycle(5).has_arc(not_arc.branch_map[0], not_arc.branch_map[1])) {
    EXPECT_FALSE(ValidateWitness(not_arc).valid);
  }

  SubdivisionWitness clash = good;
  clash.branch_map[1] = clash.branch_map[0];
  EXPECT_FALSE(ValidateWitness(clash).valid);
}

TEST(ContainsSubdivisionTest, KnownCases) {
  EXPECT_FALSE(ContainsSubdivision(CycleWithDominatingVertex(10), Spindle(3, 3)));
  EXPECT_FALSE(ContainsSubdivision(BidirectedComplete(2), Spindle(1, 2)));
  const auto w = ContainsSubdivision(DirectedCycle(5), DirectedCycle(3));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(ValidateWitness(*w).valid);
  int total = 0;
  for (const auto& [arc, p] : w->arc_paths) total += p.length();
  EXPECT_EQ(total, 5);
}

TEST(ContainsSubdivisionTest, MinCounts) {
  const Digraph c3 = DirectedCycle(3);
  EXPECT_TRUE(ContainsSubdivision(DirectedCycle(6), c3, UniformCounts(c3, 1)));
  EXPECT_FALSE(ContainsSubdivision(DirectedCycle(5), c3, UniformCounts(c3, 1)));
  EXPECT_THROW(ContainsSubdivision(DirectedCycle(5), c3, {{{0, 2}, 1}}),
               std::invalid_argument);
}

TEST(ContainsSubdivisionTest, ExactCopy) {
  const Digraph c3 = DirectedCycle(3);
  const auto w = FindExactCopy(DirectedCycle(6), c3, UniformCounts(c3, 1));
  ASSERT_TRUE(w.has_value());
  for (const auto& [arc, p] : w->arc_paths) EXPECT_EQ(p.length(), 2);
  EXPECT_FALSE(FindExactCopy(DirectedCycle(7), c3, UniformCounts(c3, 1)));
}

TEST(ContainsSubdivisionTest, Refuses) {
  EXPECT_THROW(ContainsSubdivision(DirectedCycle(VertexBudget() + 1), DirectedCycle(3)),
               BudgetExceeded);
}

TEST(ContainsSubdivisionTest, MatchesOracle) {
  const std::vector<Digraph> patterns{DirectedCycle(3), Spindle(1, 2), Spindle(2, 2),
                                      OutStar(2, 1)};
  for (int n = 2; n <= 4; ++n) {
    Enumerate({.n = n}, [&](const Digraph& d) {
      for (const Digraph& f : patterns) {
        const auto w = ContainsSubdivision(d, f);
        ASSERT_EQ(w.has_value(), oracle::BruteContainsSubdivision(d, f)) << WriteDg(d);
        if (w) ASSERT_TRUE(ValidateWitness(*w).valid);
      }
    });
  }
}

TEST(ContainsSubdivisionTest, MonotoneUnderArcAddition) {
  const Digraph f = Spindle(2, 2);
  Enumerate({.n = 4, .oriented_only = true}, [&](const Digraph& d) {
    if (!ContainsSubdivision(d, f)) return;
    for (Vertex u = 0; u < d.order(); ++u) {
      for (Vertex v = 0; v < d.order(); ++v) {
        if (u == v || d.has_arc(u, v)) continue;
        ASSERT_TRUE(ContainsSubdivision(WithArc(d, u, v), f));
      }
    }
  });
}

TEST(DisjointPathsTest, KnownCases) {
  const DisjointPathsResult two = DisjointPaths(Spindle(2, 2), 0, VertexSet{{1}}, 2);
  ASSERT_TRUE(two.system.has_value());
  ASSERT_EQ(two.system->paths.size(), 2u);
  for (const DirectedPath& p : two.system->paths) {
    EXPECT_EQ(p.length(), 2);
    EXPECT_EQ(p.term(), 1);
  }

  const DisjointPathsResult cut = DisjointPaths(DirectedCycle(5), 0, VertexSet{{3}}, 2);
  EXPECT_FALSE(cut.system.has_value());
  ASSERT_TRUE(cut.cut.has_value());
  EXPECT_EQ(cut.cut->size(), 1);
  const Vertex s = cut.cut->members[0];
  EXPECT_TRUE(s == 1 || s == 2 || s == 3);

  const DisjointPathsResult k4 =
      DisjointPaths(BidirectedComplete(4), 0, VertexSet{{3}}, 2);
  ASSERT_TRUE(k4.system.has_value());
  EXPECT_EQ(k4.system->paths.size(), 2u);
}

TEST(DisjointPathsTest, SharingModes) {
  // Two arcs straight into a single target: fine when shared, not otherwise.
  const Digraph d = Digraph::FromArcs(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_TRUE(DisjointPaths(d, 0, VertexSet{{2}}, 2).system.has_value());
  const DisjointPathsResult distinct =
      DisjointPaths(d, 0, VertexSet{{2}}, 2, TargetSharing::kDistinct);
  EXPECT_FALSE(distinct.system.has_value());
  ASSERT_TRUE(distinct.cut.has_value());
  EXPECT_LT(distinct.cut->size(), 2);
  EXPECT_TRUE(
      DisjointPaths(d, 0, VertexSet{{1, 2}}, 2, TargetSharing::kDistinct).system);
}

TEST(DisjointPathsTest, CutMeetsEveryPath) {
  // Whatever comes back as a cut has to separate the source from the targets.
  Enumerate({.n = 5, .oriented_only = true, .min_out_degree = 1}, [&](const Digraph& d) {
    const DisjointPathsResult r = DisjointPaths(d, 0, VertexSet{{4}}, 2);
    if (r.system) {
      ASSERT_EQ(r.system->paths.size(), 2u);
      for (const DirectedPath& p : r.system->paths) ASSERT_TRUE(IsDirectedPathIn(d, p));
      return;
    }
    ASSERT_TRUE(r.cut.has_value());
    const VertexMask keep = d.all_mask() & ~SetToMask(*r.cut);
    if (keep & Bit(4)) {
      // Reachability avoiding the cut.
      VertexMask seen = Bit(0), frontier = Bit(0);
      while (frontier) {
        VertexMask next = 0;
        for (Vertex v = 0; v < d.order(); ++v) {
          if (!(frontier & Bit(v))) continue;
          next |= d.out_mask(v) & keep & ~seen;
        }
        seen |= next;
        frontier = next;
      }
      ASSERT_FALSE(seen & Bit(4));
    }
  });
}

TEST(OutStarTest, KnownCases) {
  const auto w = FindOutStar(CirculantTwoJumps(5), 0, 2, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(ValidateWitness(*w).valid);
  EXPECT_EQ(w->branch_map[0], 0);
  EXPECT_FALSE(FindOutStar(DirectedCycle(3), 0, 2, 1));
  for (Vertex u = 0; u < 7; ++u) {
    const auto star = FindOutStar(Paley7(), u, 3, 1);
    ASSERT_TRUE(star.has_value());
    EXPECT_TRUE(ValidateWitness(*star).valid);
  }
}

TEST(OutStarTest, FallbackFindsWhatFlowMisses) {
  // From 0: short path 0->1->2, long one 0->3->4->5; only one vertex is at
  // distance >= 2 via each branch once 2 is also reachable directly.
  const Digraph d = Digraph::FromArcs(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {0, 2}});
  const auto w = FindOutStar(d, 0, 2, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(ValidateWitness(*w).valid);
}

TEST(SpindleTest, KnownCases) {
  for (int k = 3; k <= 5; ++k) EXPECT_FALSE(FindSpindle(CirculantTwoJumps(k), k)) << k;
  EXPECT_FALSE(FindSpindle(DirectedCycle(8), 2));
  const auto w = FindSpindle(Spindle(3, 3), 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(ValidateWitness(*w).valid);
  EXPECT_EQ(w->branch_map[0], 0);
  EXPECT_EQ(w->branch_map[1], 1);
  EXPECT_FALSE(FindSpindle(CycleWithDominatingVertex(10), 3));
}

TEST(SpindleTest, AgreesWithGeneralSearch) {
  Enumerate({.n = 5, .oriented_only = true, .min_out_degree = 1}, [&](const Digraph& d) {
    const auto fast = FindSpindle(d, 2);
    const auto slow = ContainsSubdivision(d, Spindle(2, 2));
    ASSERT_EQ(fast.has_value(), slow.has_value());
    if (fast) ASSERT_TRUE(ValidateWitness(*fast).valid);
  });
}

TEST(TreeFinderTest, KnownCases) {
  const Digraph p2 = DirectedPathDigraph(2);
  const TreeSearchResult c5 =
      FindTreeSubdivision(DirectedCycle(5), p2, UniformCounts(p2, 3), TreeMode::kOriented);
  ASSERT_TRUE(c5.witness.has_value()) << c5.failure;
  EXPECT_TRUE(ValidateWitness(*c5.witness).valid);
  EXPECT_EQ(c5.witness->arc_paths.at({0, 1}).length(), 4);

  const Digraph star = OutStar(2, 1);
  for (int c = 0; c <= 2; ++c) {
    const TreeSearchResult r =
        FindTreeSubdivision(Paley7(), star, UniformCounts(star, c), TreeMode::kOriented);
    ASSERT_TRUE(r.witness.has_value()) << r.failure;
    EXPECT_TRUE(ValidateWitness(*r.witness).valid);
  }

  try {
    FindTreeSubdivision(TransitiveTournament(4), p2, UniformCounts(p2, 0),
                        TreeMode::kOriented);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("chi precondition"), std::string::npos);
  }
}

TEST(TreeFinderTest, PreconditionMessages) {
  const Digraph p2 = DirectedPathDigraph(2);
  // digirth 3 < k = 4
  EXPECT_THROW(FindTreeSubdivision(DirectedCycle(3), p2, UniformCounts(p2, 3),
                                   TreeMode::kOriented),
               PreconditionError);
  // not a tree
  EXPECT_THROW(FindTreeSubdivision(Paley7(), DirectedCycle(3),
                                   UniformCounts(DirectedCycle(3), 0), TreeMode::kOriented),
               PreconditionError);
  // oriented tree in bidirected mode
  EXPECT_THROW(FindTreeSubdivision(BidirectedComplete(3), p2, UniformCounts(p2, 0),
                                   TreeMode::kBidirected),
               PreconditionError);
}

TEST(TreeFinderTest, Bidirected) {
  const Digraph k2 = BidirectedComplete(2);
  const TreeSearchResult r =
      FindTreeSubdivision(BidirectedComplete(3), k2, UniformCounts(k2, 0), TreeMode::kBidirected);
  ASSERT_TRUE(r.witness.has_value()) << r.failure;
  EXPECT_TRUE(ValidateWitness(*r.witness).valid);
  // digirth 5 >= 2k with k = 2
  const TreeSearchResult c5 =
      FindTreeSubdivision(DirectedCycle(5), k2, UniformCounts(k2, 1), TreeMode::kBidirected);
  ASSERT_TRUE(c5.witness.has_value()) << c5.failure;
  EXPECT_TRUE(ValidateWitness(*c5.witness).valid);
}

TEST(TreeFinderTest, BoundaryFailureIsReported) {
  // count = digirth - 1 is outside the guarantee: C5 has no path on 6 vertices.
  const Digraph p2 = DirectedPathDigraph(2);
  const TreeSearchResult r =
      FindTreeSubdivision(DirectedCycle(5), p2, UniformCounts(p2, 4), TreeMode::kOriented);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_FALSE(r.failure.empty());
}

TEST(WitnessJsonTest, RoundTrip) {
  const Digraph host = CirculantTwoJumps(5);
  const SubdivisionWitness w = *FindOutStar(host, 0, 2, 2);
  const std::string text = WitnessToJson(w);
  const SubdivisionWitness back = WitnessFromJson(text, host);
  EXPECT_EQ(back.branch_map, w.branch_map);
  EXPECT_EQ(back.arc_paths, w.arc_paths);
  EXPECT_EQ(back.pattern, w.pattern);
  EXPECT_EQ(WitnessToJson(back), text);
  EXPECT_THROW(WitnessFromJson("{not json", host), ConstructionError);
  EXPECT_THROW(WitnessFromJson("{}", host), ConstructionError);
}

}  // namespace
}  // namespace dicrit
