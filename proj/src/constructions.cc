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

#include "dicrit/constructions.h"

#include <array>
#include <utility>

namespace dicrit {

namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

void AddDigon(std::vector<Arc>& arcs, Vertex u, Vertex v) {
  arcs.emplace_back(u, v);
  arcs.emplace_back(v, u);
}

}  // namespace

Digraph DirectedCycle(int n) {
  Require(n >= 2, "directed cycle needs n >= 2");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return Digraph::FromArcs(n, arcs);
}

Digraph DirectedPathDigraph(int n) {
  Require(n >= 1, "directed path needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
  return Digraph::FromArcs(n, arcs);
}

Digraph TransitiveTournament(int n) {
  Require(n >= 1, "transitive tournament needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
  }
  return Digraph::FromArcs(n, arcs);
}

Digraph BidirectedComplete(int n) {
  Require(n >= 1, "bidirected complete digraph needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) AddDigon(arcs, i, j);
  }
  return Digraph::FromArcs(n, arcs);
}

Digraph Spindle(int k, int l) {
  Require(k >= 1 && l >= 1, "spindle needs k, l >= 1");
  Require(k + l >= 3,
          "C(1,1) would need two parallel arcs; simple digraphs cannot hold it");
  std::vector<Arc> arcs;
  Vertex next = 2;
  for (int len : {k, l}) {
    Vertex prev = 0;
    for (int step = 1; step < len; ++step) {
      arcs.emplace_back(prev, next);
      prev = next++;
    }
    arcs.emplace_back(prev, 1);
  }
  return Digraph::FromArcs(k + l, arcs);
}

Digraph OutStar(int k, int l) {
  Require(k >= 1 && l >= 1, "out-star needs k, l >= 1");
  std::vector<Arc> arcs;
  for (int branch = 0; branch < k; ++branch) {
    Vertex prev = 0;
    for (int step = 1; step <= l; ++step) {
      const Vertex v = branch * l + step;
      arcs.emplace_back(prev, v);
      prev = v;
    }
  }
  return Digraph::FromArcs(k * l + 1, arcs);
}

Digraph UniversalJoin(const Digraph& d) {
  std::vector<Arc> arcs = d.arcs();
  const Vertex u = d.order();
  for (Vertex v = 0; v < u; ++v) AddDigon(arcs, u, v);
  return Digraph::FromArcs(u + 1, arcs);
}

Digraph CycleWithDominatingVertex(int n) {
  Require(n >= 3, "D_n needs n >= 3");
  const int cycle = n - 1;
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < cycle; ++i) arcs.emplace_back(i, (i + 1) % cycle);
  for (Vertex i = 0; i < cycle; ++i) AddDigon(arcs, n - 1, i);
  return Digraph::FromArcs(n, arcs);
}

Digraph AntidirectedCritical(int k, int n) {
  Require(k >= 3, "D_{k,n} needs k >= 3");
  Require(n >= 3 && n % 2 == 1, "D_{k,n} needs odd n >= 3");
  std::vector<Arc> path_arcs;
  for (Vertex j = 0; j + 1 < n; ++j) {
    // 0-based: even j points forward, odd j is pointed at from j+1.
    if (j % 2 == 0) {
      path_arcs.emplace_back(j, j + 1);
    } else {
      path_arcs.emplace_back(j + 1, j);
    }
  }
  std::vector<Arc> arcs = path_arcs;
  AddDigon(arcs, 0, n - 1);
  const Vertex x1 = n;
  const Vertex x2 = n + 1;
  AddDigon(arcs, x1, x2);
  for (const auto& [u, v] : path_arcs) {
    for (Vertex x : {x1, x2}) {
      arcs.emplace_back(v, x);
      arcs.emplace_back(x, u);
    }
  }
  const int total = n + k - 1;
  for (Vertex x = n + 2; x < total; ++x) {
    for (Vertex w = 0; w < x; ++w) AddDigon(arcs, x, w);
  }
  return Digraph::FromArcs(total, arcs);
}

Digraph CirculantTwoJumps(int k) {
  Require(k >= 2, "circulant needs k >= 2");
  const int n = 2 * k - 1;
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    arcs.emplace_back(i, (i + 1) % n);
    arcs.emplace_back(i, (i + 2) % n);
  }
  return Digraph::FromArcs(n, arcs);
}

Digraph Paley7() {
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < 7; ++i) {
    for (int residue : {1, 2, 4}) arcs.emplace_back(i, (i + residue) % 7);
  }
  return Digraph::FromArcs(7, arcs);
}

namespace {

struct FamilyName {
  Family family;
  std::string_view tag;
  std::array<std::string_view, 2> aliases;
};

constexpr std::array<FamilyName, 11> kFamilyNames{{
    {Family::kDirectedCycle, "directed_cycle", {"cycle", "C"}},
    {Family::kDirectedPath, "directed_path", {"path", "P"}},
    {Family::kTransitiveTournament, "transitive_tournament", {"TT", "tt"}},
    {Family::kBidirectedComplete, "bidirected_complete", {"bidK", "K"}},
    {Family::kSpindle, "spindle", {"C_kl", "Ckl"}},
    {Family::kOutStar, "out_star", {"outstar", "S"}},
    {Family::kUniversalJoin, "universal_join", {"join", "join"}},
    {Family::kCycleWithDominatingVertex, "D_n", {"Dn", "dn"}},
    {Family::kAntidirectedCritical, "D_kn", {"Dkn", "dkn"}},
    {Family::kCirculantTwoJumps, "circulant_two_jumps", {"circulant", "circ"}},
    {Family::kPaley7, "paley_7_fixture", {"paley7", "paley"}},
}};

}  // namespace

std::optional<Family> ParseFamily(std::string_view tag) {
  for (const auto& name : kFamilyNames) {
    if (tag == name.tag || tag == name.aliases[0] || tag == name.aliases[1]) {
      return name.family;
    }
  }
  return std::nullopt;
}

std::string_view FamilyTag(Family family) {
  for (const auto& name : kFamilyNames) {
    if (name.family == family) return name.tag;
  }
  return "unknown";
}

Digraph Build(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto need = [&](std::size_t count) {
    Require(p.size() == count, std::string(FamilyTag(spec.family)) +
                                   " takes " + std::to_string(count) +
                                   " integer parameter(s), got " +
                                   std::to_string(p.size()));
  };
  switch (spec.family) {
    case Family::kDirectedCycle:
      need(1);
      return DirectedCycle(p[0]);
    case Family::kDirectedPath:
      need(1);
      return DirectedPathDigraph(p[0]);
    case Family::kTransitiveTournament:
      need(1);
      return TransitiveTournament(p[0]);
    case Family::kBidirectedComplete:
      need(1);
      return BidirectedComplete(p[0]);
    case Family::kSpindle:
      need(2);
      return Spindle(p[0], p[1]);
    case Family::kOutStar:
      need(2);
      return OutStar(p[0], p[1]);
    case Family::kUniversalJoin:
      need(0);
      Require(spec.base.has_value(), "universal_join needs a base digraph");
      return UniversalJoin(*spec.base);
    case Family::kCycleWithDominatingVertex:
      need(1);
      return CycleWithDominatingVertex(p[0]);
    case Family::kAntidirectedCritical:
      need(2);
      return AntidirectedCritical(p[0], p[1]);
    case Family::kCirculantTwoJumps:
      need(1);
      return CirculantTwoJumps(p[0]);
    case Family::kPaley7:
      need(0);
      return Paley7();
  }
  throw ConstructionError("unknown family");
}

Subdivision Subdivide(const Digraph& d, const std::map<Arc, int>& counts) {
  Subdivision result;
  std::vector<Arc> arcs;
  Vertex next = d.order();
  for (const Arc& arc : d.arcs()) {
    const auto it = counts.find(arc);
    if (it == counts.end()) {
      throw ConstructionError("no subdivision count for arc (" +
                              std::to_string(arc.first) + "," +
                              std::to_string(arc.second) + ")");
    }
    Require(it->second >= 0, "subdivision counts must be >= 0");
    DirectedPath path{{arc.first}};
    for (int i = 0; i < it->second; ++i) path.vertices.push_back(next++);
    path.vertices.push_back(arc.second);
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
      arcs.emplace_back(path.vertices[i], path.vertices[i + 1]);
    }
    result.arc_paths.emplace(arc, std::move(path));
  }
  result.digraph = Digraph::FromArcs(next, arcs);
  return result;
}

std::map<Arc, int> UniformCounts(const Digraph& d, int count) {
  std::map<Arc, int> counts;
  for (const Arc& arc : d.arcs()) counts.emplace(arc, count);
  return counts;
}

}  // namespace dicrit
