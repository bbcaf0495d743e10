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

// Explicit digraph families. Every builder documents its vertex labelling so
// that witnesses found in the outputs are reproducible.

#ifndef DICRIT_CONSTRUCTIONS_H_
#define DICRIT_CONSTRUCTIONS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dicrit/digraph.h"

namespace dicrit {

// Arcs i -> i+1 mod n. n >= 2 (n = 2 is the digon).
Digraph DirectedCycle(int n);
// Arcs i -> i+1 for i < n-1.
Digraph DirectedPathDigraph(int n);
// Arcs i -> j for every i < j.
Digraph TransitiveTournament(int n);
// All arcs between distinct vertices.
Digraph BidirectedComplete(int n);

// C(k,l): source 0, sink 1; the length-k path runs through 2..k, the
// length-l path through k+1..k+l-1. Throws ConstructionError for k = l = 1,
// which would need two parallel arcs.
Digraph Spindle(int k, int l);

// S_k^{+(l)}: centre 0; branch i (0-based) is 0 -> 1+i*l -> ... -> (i+1)*l.
Digraph OutStar(int k, int l);

// Adds vertex n(d) joined to every vertex of d by a digon.
Digraph UniversalJoin(const Digraph& d);

// D_n: directed cycle on 0..n-2 plus vertex n-1 joined to all of it by
// digons. n >= 3.
Digraph CycleWithDominatingVertex(int n);

// D_{k,n}, n odd >= 3, k >= 3. p_1..p_n are 0..n-1 forming the antidirected
// path with p_1 -> p_2 (so p_{2j+1} -> p_{2j} and p_{2j+1} -> p_{2j+2});
// digon [p_1,p_n]; x_1 = n and x_2 = n+1 joined by a digon; for each path arc
// uv, arcs v -> x_i and x_i -> u; x_3..x_{k-1} = n+2..n+k-2 form a bidirected
// clique joined by digons to every earlier vertex.
Digraph AntidirectedCritical(int k, int n);

// Vertex set Z/(2k-1), arcs i -> i+1 and i -> i+2. k >= 2.
Digraph CirculantTwoJumps(int k);

// Quadratic-residue tournament on Z/7: i -> j iff j - i is 1, 2 or 4.
Digraph Paley7();

enum class Family {
  kDirectedCycle,
  kDirectedPath,
  kTransitiveTournament,
  kBidirectedComplete,
  kSpindle,
  kOutStar,
  kUniversalJoin,
  kCycleWithDominatingVertex,
  kAntidirectedCritical,
  kCirculantTwoJumps,
  kPaley7,
};

struct FamilySpec {
  Family family;
  std::vector<int> params;
  // Base digraph for kUniversalJoin.
  std::optional<Digraph> base;
};

// Accepts the canonical tags (directed_cycle, directed_path,
// transitive_tournament, bidirected_complete, spindle, out_star,
// universal_join, D_n, D_kn, circulant_two_jumps, paley_7_fixture) and a few
// short aliases (cycle, path, TT, bidK, Dn, Dkn, circulant, paley7).
std::optional<Family> ParseFamily(std::string_view tag);
std::string_view FamilyTag(Family family);

// Throws ConstructionError naming the violated parameter constraint.
Digraph Build(const FamilySpec& spec);

struct Subdivision {
  Digraph digraph;
  // Each original arc uv mapped to its replacement path from u to v.
  std::map<Arc, DirectedPath> arc_paths;
};

// Replaces each arc uv by a path with counts[uv] new internal vertices. New
// vertices get ids n(d), n(d)+1, ... in lexicographic arc order. Throws
// ConstructionError when an arc has no count or a negative one.
Subdivision Subdivide(const Digraph& d, const std::map<Arc, int>& counts);

std::map<Arc, int> UniformCounts(const Digraph& d, int count);

}  // namespace dicrit

#endif  // DICRIT_CONSTRUCTIONS_H_
