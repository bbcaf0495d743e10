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

#ifndef DICRIT_DIGRAPH_H_
#define DICRIT_DIGRAPH_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dicrit/errors.h"

namespace dicrit {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;
using VertexMask = std::uint64_t;

inline constexpr int kMaskVertices = 64;

inline constexpr VertexMask Bit(Vertex v) { return VertexMask{1} << v; }

// A path length or cycle length that may be infinite (unreachable target,
// acyclic digraph, forest).
class Length {
 public:
  constexpr Length() = default;
  constexpr explicit Length(int value) : value_(value) {}
  static constexpr Length Infinite() { return Length(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  // Precondition: is_finite().
  constexpr int value() const { return *value_; }

  friend constexpr bool operator==(const Length&, const Length&) = default;
  friend constexpr std::strong_ordering operator<=>(const Length& a,
                                                    const Length& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return a.value() <=> b.value();
  }

  std::string ToString() const;

 private:
  std::optional<int> value_;
};

std::ostream& operator<<(std::ostream& os, const Length& len);

// Immutable simple digraph on vertices 0..n-1. No loops, no parallel arcs;
// a digon [u,v] is the pair of arcs uv and vu. Adjacency lists are sorted
// ascending, so every traversal in this library is deterministic.
class Digraph {
 public:
  Digraph() = default;

  // Throws ConstructionError naming the offending pair on a loop or an
  // out-of-range endpoint. Duplicate arcs collapse.
  static Digraph FromArcs(int n, std::span<const Arc> arcs);
  static Digraph FromArcs(int n, std::initializer_list<Arc> arcs) {
    return FromArcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int order() const { return n_; }
  int size() const { return m_; }

  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

  bool has_arc(Vertex u, Vertex v) const;

  // Bitmask adjacency, available when order() <= 64.
  bool has_masks() const { return n_ <= kMaskVertices; }
  VertexMask out_mask(Vertex v) const { return out_mask_[v]; }
  VertexMask in_mask(Vertex v) const { return in_mask_[v]; }
  VertexMask all_mask() const;

  // Arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  int min_out_degree() const;
  int min_in_degree() const;
  int max_degree() const;

  Digraph WithoutArc(Vertex u, Vertex v) const;
  // Induced subdigraph on the vertices of `keep` (ascending), relabelled
  // 0..|keep|-1 in that order.
  Digraph Induced(std::span<const Vertex> keep) const;
  Digraph WithoutVertices(std::span<const Vertex> drop) const;

  // Disjoint union; `other` is relabelled after this digraph's vertices.
  Digraph DisjointUnion(const Digraph& other) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  void BuildIndexes();

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<VertexMask> out_mask_;
  std::vector<VertexMask> in_mask_;
};

// Ordered sequence of distinct vertices; consecutive vertices must be joined
// by arcs when validated against a host.
struct DirectedPath {
  std::vector<Vertex> vertices;

  int order() const { return static_cast<int>(vertices.size()); }
  // Number of arcs; 0 for the empty or single-vertex path.
  int length() const { return vertices.empty() ? 0 : order() - 1; }
  Vertex init() const { return vertices.front(); }
  Vertex term() const { return vertices.back(); }

  friend bool operator==(const DirectedPath&, const DirectedPath&) = default;
};

bool IsDirectedPathIn(const Digraph& d, const DirectedPath& p);

// Sorted set of vertex ids.
struct VertexSet {
  std::vector<Vertex> members;

  bool contains(Vertex v) const;
  int size() const { return static_cast<int>(members.size()); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

VertexSet MaskToSet(VertexMask mask);
VertexMask SetToMask(const VertexSet& set);

struct UndirectedGraph {
  int n = 0;
  std::vector<std::vector<Vertex>> adj;  // sorted

  int edge_count() const;
  bool has_edge(Vertex u, Vertex v) const;
};

UndirectedGraph UnderlyingGraph(const Digraph& d);

Length Digirth(const Digraph& d);
Length Girth(const Digraph& d);
Length Distance(const Digraph& d, Vertex from, Vertex to);
// BFS distances from `from`; infinite entries for unreachable vertices.
std::vector<Length> Distances(const Digraph& d, Vertex from);

bool IsAcyclic(const Digraph& d);
bool IsOriented(const Digraph& d);

// A directed cycle of d[within] as its vertex sequence (first vertex not
// repeated), or nullopt when d[within] is acyclic. Requires masks.
std::optional<std::vector<Vertex>> FindDirectedCycle(const Digraph& d,
                                                     VertexMask within);
// Shortest directed cycle through v using only v and vertices of `within`,
// starting at v.
std::optional<std::vector<Vertex>> ShortestCycleThrough(const Digraph& d,
                                                        Vertex v,
                                                        VertexMask within);

struct StrongComponents {
  // Components in ascending order of their smallest vertex; each sorted.
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> terminal;
  std::vector<int> component_of;
};

StrongComponents FindStrongComponents(const Digraph& d);
bool IsStronglyConnected(const Digraph& d);
// Strongly connected after deleting any single arc.
bool IsTwoArcStrong(const Digraph& d);

int ConnectedComponentCount(const Digraph& d);
bool IsConnected(const Digraph& d);
// UG(d) is 2-connected: connected, at least 3 vertices, no cut vertex.
bool IsBiconnected(const Digraph& d);

// Maximum-order directed path, exact backtracking. Refuses (BudgetExceeded)
// when the order exceeds the vertex budget.
DirectedPath LongestDirectedPath(const Digraph& d);

struct OrientedPathCycle {
  int path_order = 0;
  int cycle_order = 0;  // 0 when UG is a forest
};

OrientedPathCycle LongestOrientedPathAndCycle(const Digraph& d);

}  // namespace dicrit

#endif  // DICRIT_DIGRAPH_H_
