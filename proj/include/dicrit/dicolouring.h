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

#ifndef DICRIT_DICOLOURING_H_
#define DICRIT_DICOLOURING_H_

#include <optional>
#include <vector>

#include "dicrit/digraph.h"

namespace dicrit {

// Colours are 1..k. Valid against a host iff no colour class induces a
// directed cycle.
struct Dicolouring {
  std::vector<int> colours;
  int k = 0;
};

struct DicolouringCheck {
  bool valid = false;
  // One monochromatic directed cycle when !valid.
  std::vector<Vertex> cycle;
};

// Throws std::invalid_argument when the colour map does not cover V(d).
DicolouringCheck CheckDicolouring(const Digraph& d, const Dicolouring& c);

// A k-dicolouring of d, or nullopt when none exists. Exact; refuses beyond
// the vertex budget.
std::optional<Dicolouring> FindDicolouring(const Digraph& d, int k);

struct DichromaticResult {
  int chi = 0;
  Dicolouring witness;
};

// Exact dichromatic number with a witness colouring.
DichromaticResult DichromaticNumber(const Digraph& d);

struct DicriticalityResult {
  bool dicritical = false;
  int chi = 0;
  // Set when chi < k: a (k-1)-dicolouring of d.
  std::optional<Dicolouring> lower_colouring;
  // Set when chi == k but some arc deletion keeps chi at k.
  std::optional<Arc> stubborn_arc;
  // Set when chi == k and an isolated vertex can be dropped without losing
  // any arc (so chi(d - v) = k).
  std::optional<Vertex> isolated_vertex;
};

// k-dicritical iff chi(d) = k, chi(d - e) <= k-1 for every arc e, and d has
// no isolated vertex unless it is a single vertex. A proper subdigraph either
// misses an arc, and then lies inside some d - e, or keeps every arc and
// misses only isolated vertices.
DicriticalityResult CheckDicritical(const Digraph& d, int k);

// Greedy in ascending vertex order: keep v when d[A + v] stays acyclic.
VertexSet MaximalAcyclicSet(const Digraph& d);
// Same, restricted to the vertices of `within`.
VertexMask MaximalAcyclicSubset(const Digraph& d, VertexMask within);

struct ComponentBoundCheck {
  bool holds = true;
  std::optional<VertexSet> violating_set;
  int checked_sets = 0;
};

// cc(d - S) <= (k-1)^|S| * 3^C(|S|,2) for every S with |S| <= max_s.
ComponentBoundCheck CheckComponentBound(const Digraph& d, int k, int max_s);

}  // namespace dicrit

#endif  // DICRIT_DICOLOURING_H_
