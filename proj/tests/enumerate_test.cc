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

#include <algorithm>
#include <mutex>
#include <set>

#include "dicrit/constructions.h"
#include "dicrit/lab.h"
#include "oracles.h"

namespace dicrit {
namespace {

std::int64_t Count(const EnumerationSpec& spec, int jobs = 1) {
  return Enumerate(spec, [](const Digraph&) {}, jobs);
}

TEST(EnumerateTest, KnownCases) {
  EXPECT_EQ(Count({.n = 2}), 3);
  EXPECT_EQ(Count({.n = 3, .oriented_only = true}), 7);
  EXPECT_EQ(Count({.n = 4, .oriented_only = true}), 42);
}

TEST(EnumerateTest, MatchesOrbitOracle) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(Count({.n = n}), oracle::CountClasses(n, false)) << n;
    EXPECT_EQ(Count({.n = n, .oriented_only = true}), oracle::CountClasses(n, true)) << n;
  }
}

TEST(EnumerateTest, KnownCounts) {
  // Published totals for digraphs and oriented graphs up to isomorphism.
  EXPECT_EQ(Count({.n = 5}), 9608);
  EXPECT_EQ(Count({.n = 5, .oriented_only = true}), 582);
  EXPECT_EQ(Count({.n = 6, .oriented_only = true}), 21480);
}

TEST(EnumerateTest, LabelledCounts) {
  EXPECT_EQ(Count({.n = 3, .up_to_iso = false}), 64);
  EXPECT_EQ(Count({.n = 3, .oriented_only = true, .up_to_iso = false}), 27);
}

TEST(EnumerateTest, OneRepresentativePerClass) {
  std::set<std::uint64_t> codes;
  std::int64_t visited = 0;
  Enumerate({.n = 4}, [&](const Digraph& d) {
    EXPECT_TRUE(IsCanonical(d));
    codes.insert(oracle::MatrixCanonicalCode(d));
    ++visited;
  });
  EXPECT_EQ(static_cast<std::int64_t>(codes.size()), visited);
}

TEST(EnumerateTest, FiltersMatchPostFiltering) {
  std::int64_t want = 0;
  Enumerate({.n = 5, .oriented_only = true}, [&](const Digraph& d) {
    if (d.min_out_degree() >= 1 && Digirth(d) >= Length(4) && IsConnected(d)) ++want;
  });
  EXPECT_EQ(Count({.n = 5, .oriented_only = true, .min_out_degree = 1, .min_digirth = 4,
                   .connected = true}),
            want);
  std::int64_t strong = 0;
  Enumerate({.n = 4}, [&](const Digraph& d) {
    if (IsStronglyConnected(d)) ++strong;
  });
  EXPECT_EQ(Count({.n = 4, .strongly_connected = true}), strong);
}

TEST(EnumerateTest, JobsIndependent) {
  const EnumerationSpec spec{.n = 5, .oriented_only = true, .min_out_degree = 1};
  std::vector<std::vector<std::uint8_t>> one, four;
  std::mutex mu;
  Enumerate(spec, [&](const Digraph& d) { one.push_back(AdjacencyCode(d)); }, 1);
  Enumerate(spec, [&](const Digraph& d) {
    std::lock_guard<std::mutex> lock(mu);
    four.push_back(AdjacencyCode(d));
  }, 4);
  std::sort(one.begin(), one.end());
  std::sort(four.begin(), four.end());
  EXPECT_EQ(one, four);
}

TEST(EnumerateTest, Refuses) {
  EXPECT_THROW(Count({.n = kEnumerationBudget + 1}), BudgetExceeded);
}

TEST(CanonicalFormTest, InvariantUnderRelabelling) {
  const Digraph d = AntidirectedCritical(3, 5);  // 7 vertices
  const Digraph canon = CanonicalForm(d);
  EXPECT_TRUE(IsCanonical(canon));
  EXPECT_EQ(oracle::MatrixCanonicalCode(canon), oracle::MatrixCanonicalCode(d));
  std::vector<Vertex> perm{0, 1, 2, 3, 4, 5, 6};
  for (int step = 0; step < 40; ++step) {
    for (int skip = 0; skip < 97; ++skip) std::next_permutation(perm.begin(), perm.end());
    std::vector<Arc> arcs;
    for (const auto& [u, v] : d.arcs()) arcs.emplace_back(perm[u], perm[v]);
    ASSERT_EQ(CanonicalForm(Digraph::FromArcs(7, arcs)), canon);
  }
}

TEST(CanonicalFormTest, AdjacencyCodeLayout) {
  // pairs ordered (0,1), (0,2), (1,2)
  const Digraph d = Digraph::FromArcs(3, {{0, 1}, {2, 0}, {1, 2}, {2, 1}});
  EXPECT_EQ(AdjacencyCode(d), (std::vector<std::uint8_t>{2, 1, 3}));
}

}  // namespace
}  // namespace dicrit
