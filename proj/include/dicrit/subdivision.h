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

#ifndef DICRIT_SUBDIVISION_H_
#define DICRIT_SUBDIVISION_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dicrit/digraph.h"

namespace dicrit {

// Certificate that `host` contains a subdivision of `pattern`: pattern vertex
// f sits at branch_map[f], and each pattern arc uv is realised by a directed
// path from branch_map[u] to branch_map[v]. Internal path vertices are
// pairwise distinct and avoid the branch image.
struct SubdivisionWitness {
  Digraph pattern;
  Digraph host;
  std::vector<Vertex> branch_map;
  std::map<Arc, DirectedPath> arc_paths;
};

struct WitnessCheck {
  bool valid = false;
  std::string violation;  // first violated invariant, empty when valid
};

WitnessCheck ValidateWitness(const SubdivisionWitness& w);

// Subdivision search with per-arc minimum subdivision counts (absent entries
// mean 0). Exhaustive: nullopt means no subdivision exists. Refuses beyond
// the vertex budget.
std::optional<SubdivisionWitness> ContainsSubdivision(
    const Digraph& host, const Digraph& pattern,
    const std::map<Arc, int>& min_counts = {});

// A copy of the subdivision of `pattern` in which arc uv is subdivided exactly
// counts[uv] times, i.e. every arc path has exactly counts[uv] + 1 arcs.
std::optional<SubdivisionWitness> FindExactCopy(
    const Digraph& host, const Digraph& pattern,
    const std::map<Arc, int>& counts);

// Paths leaving a common source; internally disjoint as declared.
struct PathSystem {
  Vertex source = 0;
  std::vector<DirectedPath> paths;
};

enum class TargetSharing {
  kShared,    // paths may end at the same target vertex
  kDistinct,  // paths are disjoint except at the source
};

struct DisjointPathsResult {
  // Set when `count` paths exist.
  std::optional<PathSystem> system;
  // Otherwise a set S of fewer than `count` vertices, excluding the source,
  // meeting every path from the source to the targets.
  std::optional<VertexSet> cut;
};

// Unit vertex-capacity max flow with vertex splitting. Targets end paths.
DisjointPathsResult DisjointPaths(const Digraph& d, Vertex source,
                                  const VertexSet& targets, int count,
                                  TargetSharing sharing = TargetSharing::kShared);

// A copy of S_k^{+(l)} centred at u (pattern OutStar(k, l)). Tries the
// Menger route toward W = {v : dist(u,v) >= l} first, then falls back to an
// exhaustive search, so nullopt is definitive.
std::optional<SubdivisionWitness> FindOutStar(const Digraph& d, Vertex u,
                                              int k, int l);

// A subdivision of C(k,k) (pattern Spindle(k, k)); k >= 2. Pairs (x,y) are
// tried in lexicographic order, pruned by a two-path flow check.
std::optional<SubdivisionWitness> FindSpindle(const Digraph& d, int k);

enum class TreeMode { kBidirected, kOriented };

struct TreeSearchResult {
  std::optional<SubdivisionWitness> witness;
  // True when the witness came out of the acyclic-set peeling construction
  // rather than the exhaustive fallback.
  bool via_peeling = false;
  std::string failure;  // set when witness is empty
};

// Embeds the tree T with arc uv subdivided counts[uv] times.
//
// Oriented mode: T oriented, every arc path has exactly counts+1 arcs;
// requires digirth(d) >= max(counts)+1 and chi(d) >= n(T).
// Bidirected mode: T bidirected with a uniform count c; every arc path has at
// least c+1 arcs; requires digirth(d) >= 2(c+1) and chi(d) >= n(T).
//
// Throws PreconditionError naming the failed hypothesis, InvariantBreach if
// the peeling construction produces something inconsistent.
TreeSearchResult FindTreeSubdivision(const Digraph& d, const Digraph& tree,
                                     const std::map<Arc, int>& counts,
                                     TreeMode mode);

}  // namespace dicrit

#endif  // DICRIT_SUBDIVISION_H_
