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

#include "dicrit/digraph.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>

namespace dicrit {

int VertexBudget() {
  if (const char* env = std::getenv("DICRIT_BUDGET")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<int>(std::min<long>(value, kMaskVertices));
    }
  }
  return kDefaultVertexBudget;
}

void CheckBudget(int order, const std::string& what) {
  const int budget = VertexBudget();
  if (order > budget) {
    std::ostringstream msg;
    msg << what << ": " << order << " vertices exceeds the vertex budget of "
        << budget << " (set DICRIT_BUDGET to raise it)";
    throw BudgetExceeded(msg.str());
  }
}

std::string Length::ToString() const {
  return is_infinite() ? std::string("inf") : std::to_string(value());
}

std::ostream& operator<<(std::ostream& os, const Length& len) {
  return os << len.ToString();
}

Digraph Digraph::FromArcs(int n, std::span<const Arc> arcs) {
  if (n < 0) throw ConstructionError("negative vertex count");
  Digraph d;
  d.n_ = n;
  d.out_.assign(n, {});
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      std::ostringstream msg;
      msg << "arc (" << u << "," << v << ") has an endpoint outside 0.."
          << n - 1;
      throw ConstructionError(msg.str());
    }
    if (u == v) {
      std::ostringstream msg;
      msg << "arc (" << u << "," << v << ") is a self-loop";
      throw ConstructionError(msg.str());
    }
    d.out_[u].push_back(v);
  }
  d.BuildIndexes();
  return d;
}

void Digraph::BuildIndexes() {
  in_.assign(n_, {});
  m_ = 0;
  for (auto& list : out_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out_[u]) in_[v].push_back(u);
    m_ += static_cast<int>(out_[u].size());
  }
  if (n_ <= kMaskVertices) {
    out_mask_.assign(n_, 0);
    in_mask_.assign(n_, 0);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : out_[u]) {
        out_mask_[u] |= Bit(v);
        in_mask_[v] |= Bit(u);
      }
    }
  } else {
    out_mask_.clear();
    in_mask_.clear();
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

VertexMask Digraph::all_mask() const {
  return n_ >= kMaskVertices ? ~VertexMask{0} : Bit(n_) - 1;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

int Digraph::min_out_degree() const {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, out_degree(v));
  return n_ == 0 ? 0 : best;
}

int Digraph::min_in_degree() const {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, in_degree(v));
  return n_ == 0 ? 0 : best;
}

int Digraph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) {
    best = std::max(best, out_degree(v) + in_degree(v));
  }
  return best;
}

Digraph Digraph::WithoutArc(Vertex u, Vertex v) const {
  Digraph d = *this;
  auto& list = d.out_[u];
  list.erase(std::remove(list.begin(), list.end(), v), list.end());
  d.BuildIndexes();
  return d;
}

Digraph Digraph::Induced(std::span<const Vertex> keep) const {
  std::vector<int> index(n_, -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
  std::vector<Arc> kept;
  for (Vertex u : keep) {
    for (Vertex v : out_[u]) {
      if (index[v] >= 0) kept.emplace_back(index[u], index[v]);
    }
  }
  return FromArcs(static_cast<int>(keep.size()), kept);
}

Digraph Digraph::WithoutVertices(std::span<const Vertex> drop) const {
  std::vector<bool> dropped(n_, false);
  for (Vertex v : drop) dropped[v] = true;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n_; ++v) {
    if (!dropped[v]) keep.push_back(v);
  }
  return Induced(keep);
}

Digraph Digraph::DisjointUnion(const Digraph& other) const {
  std::vector<Arc> all = arcs();
  for (const auto& [u, v] : other.arcs()) all.emplace_back(u + n_, v + n_);
  return FromArcs(n_ + other.n_, all);
}

bool IsDirectedPathIn(const Digraph& d, const DirectedPath& p) {
  std::vector<bool> seen(d.order(), false);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    if (v < 0 || v >= d.order() || seen[v]) return false;
    seen[v] = true;
    if (i > 0 && !d.has_arc(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

VertexSet MaskToSet(VertexMask mask) {
  VertexSet set;
  while (mask) {
    set.members.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return set;
}

VertexMask SetToMask(const VertexSet& set) {
  VertexMask mask = 0;
  for (Vertex v : set.members) mask |= Bit(v);
  return mask;
}

int UndirectedGraph::edge_count() const {
  int twice = 0;
  for (const auto& list : adj) twice += static_cast<int>(list.size());
  return twice / 2;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

UndirectedGraph UnderlyingGraph(const Digraph& d) {
  UndirectedGraph g;
  g.n = d.order();
  g.adj.assign(g.n, {});
  for (Vertex v = 0; v < g.n; ++v) {
    auto& list = g.adj[v];
    std::set_union(d.out(v).begin(), d.out(v).end(), d.in(v).begin(),
                   d.in(v).end(), std::back_inserter(list));
  }
  return g;
}

std::vector<Length> Distances(const Digraph& d, Vertex from) {
  std::vector<Length> dist(d.order());
  std::vector<int> raw(d.order(), -1);
  std::queue<Vertex> queue;
  raw[from] = 0;
  queue.push(from);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex v : d.out(u)) {
      if (raw[v] < 0) {
        raw[v] = raw[u] + 1;
        queue.push(v);
      }
    }
  }
  for (Vertex v = 0; v < d.order(); ++v) {
    if (raw[v] >= 0) dist[v] = Length(raw[v]);
  }
  return dist;
}

Length Distance(const Digraph& d, Vertex from, Vertex to) {
  return Distances(d, from)[to];
}

Length Digirth(const Digraph& d) {
  Length best = Length::Infinite();
  for (Vertex v = 0; v < d.order(); ++v) {
    const auto dist = Distances(d, v);
    for (Vertex u : d.in(v)) {
      if (dist[u].is_finite()) best = std::min(best, Length(dist[u].value() + 1));
    }
    if (best == Length(2)) break;
  }
  return best;
}

Length Girth(const Digraph& d) {
  const UndirectedGraph g = UnderlyingGraph(d);
  Length best = Length::Infinite();
  for (Vertex root = 0; root < g.n; ++root) {
    std::vector<int> depth(g.n, -1), parent(g.n, -1);
    std::queue<Vertex> queue;
    depth[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex v : g.adj[u]) {
        if (depth[v] < 0) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          queue.push(v);
        } else if (parent[u] != v) {
          best = std::min(best, Length(depth[u] + depth[v] + 1));
        }
      }
    }
  }
  return best;
}

bool IsAcyclic(const Digraph& d) { return Digirth(d).is_infinite(); }

bool IsOriented(const Digraph& d) {
  for (const auto& [u, v] : d.arcs()) {
    if (d.has_arc(v, u)) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> FindDirectedCycle(const Digraph& d,
                                                     VertexMask within) {
  // 0 = unvisited, 1 = on the DFS stack, 2 = finished.
  std::vector<int> state(d.order(), 0);
  std::vector<Vertex> stack;
  std::optional<std::vector<Vertex>> cycle;
  std::function<bool(Vertex)> visit = [&](Vertex u) {
    state[u] = 1;
    stack.push_back(u);
    for (VertexMask next = d.out_mask(u) & within; next; next &= next - 1) {
      const Vertex v = std::countr_zero(next);
      if (state[v] == 1) {
        auto start = std::find(stack.begin(), stack.end(), v);
        cycle.emplace(start, stack.end());
        return true;
      }
      if (state[v] == 0 && visit(v)) return true;
    }
    stack.pop_back();
    state[u] = 2;
    return false;
  };
  for (VertexMask roots = within; roots; roots &= roots - 1) {
    const Vertex r = std::countr_zero(roots);
    if (state[r] == 0 && visit(r)) return cycle;
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> ShortestCycleThrough(const Digraph& d,
                                                        Vertex v,
                                                        VertexMask within) {
  within &= ~Bit(v);
  std::vector<Vertex> parent(d.order(), -1);
  std::vector<Vertex> order{v};
  VertexMask seen = Bit(v);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    if (u != v && d.has_arc(u, v)) {
      std::vector<Vertex> cycle;
      for (Vertex w = u; w != v; w = parent[w]) cycle.push_back(w);
      cycle.push_back(v);
      std::reverse(cycle.begin(), cycle.end());
      return cycle;
    }
    for (VertexMask next = d.out_mask(u) & within & ~seen; next;
         next &= next - 1) {
      const Vertex w = std::countr_zero(next);
      seen |= Bit(w);
      parent[w] = u;
      order.push_back(w);
    }
  }
  return std::nullopt;
}

StrongComponents FindStrongComponents(const Digraph& d) {
  const int n = d.order();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> found;
  int counter = 0;

  // Iterative Tarjan; frames hold (vertex, next out-neighbour position).
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<Vertex, std::size_t>> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [u, pos] = frames.back();
      if (pos < d.out(u).size()) {
        const Vertex v = d.out(u)[pos++];
        if (index[v] < 0) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
          frames.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      const Vertex done = u;
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex up = frames.back().first;
        low[up] = std::min(low[up], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<Vertex> members;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          members.push_back(w);
        } while (w != done);
        std::sort(members.begin(), members.end());
        found.push_back(std::move(members));
      }
    }
  }

  std::sort(found.begin(), found.end());
  StrongComponents result;
  result.components = std::move(found);
  result.component_of.assign(n, -1);
  for (int c = 0; c < static_cast<int>(result.components.size()); ++c) {
    for (Vertex v : result.components[c]) result.component_of[v] = c;
  }
  result.terminal.assign(result.components.size(), true);
  for (const auto& [u, v] : d.arcs()) {
    if (result.component_of[u] != result.component_of[v]) {
      result.terminal[result.component_of[u]] = false;
    }
  }
  return result;
}

bool IsStronglyConnected(const Digraph& d) {
  return d.order() > 0 && FindStrongComponents(d).components.size() == 1;
}

bool IsTwoArcStrong(const Digraph& d) {
  if (!IsStronglyConnected(d)) return false;
  for (const auto& [u, v] : d.arcs()) {
    if (!IsStronglyConnected(d.WithoutArc(u, v))) return false;
  }
  return true;
}

namespace {

int ComponentCountExcluding(const UndirectedGraph& g,
                            const std::vector<bool>& removed) {
  std::vector<bool> seen(g.n, false);
  int count = 0;
  for (Vertex s = 0; s < g.n; ++s) {
    if (seen[s] || removed[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.adj[u]) {
        if (!seen[v] && !removed[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return count;
}

}  // namespace

int ConnectedComponentCount(const Digraph& d) {
  return ComponentCountExcluding(UnderlyingGraph(d),
                                 std::vector<bool>(d.order(), false));
}

bool IsConnected(const Digraph& d) { return ConnectedComponentCount(d) == 1; }

bool IsBiconnected(const Digraph& d) {
  if (d.order() < 3 || !IsConnected(d)) return false;
  const UndirectedGraph g = UnderlyingGraph(d);
  std::vector<bool> removed(g.n, false);
  for (Vertex v = 0; v < g.n; ++v) {
    removed[v] = true;
    if (ComponentCountExcluding(g, removed) != 1) return false;
    removed[v] = false;
  }
  return true;
}

namespace {

// Vertices reachable from `from` along `adjacency` without touching `used`.
VertexMask ReachAvoiding(std::span<const VertexMask> adjacency, Vertex from,
                         VertexMask used) {
  VertexMask reached = 0;
  VertexMask frontier = adjacency[from] & ~used;
  while (frontier) {
    reached |= frontier;
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) {
      next |= adjacency[std::countr_zero(f)];
    }
    frontier = next & ~used & ~reached;
  }
  return reached;
}

class LongestPathSearch {
 public:
  explicit LongestPathSearch(std::vector<VertexMask> adjacency)
      : adj_(std::move(adjacency)), n_(static_cast<int>(adj_.size())) {}

  std::vector<Vertex> Path() {
    for (Vertex s = 0; s < n_ && static_cast<int>(best_.size()) < n_; ++s) {
      current_ = {s};
      Extend(s, Bit(s));
    }
    return best_;
  }

  int CycleOrder() {
    for (Vertex s = 0; s < n_; ++s) {
      // Cycles whose smallest vertex is s.
      blocked_ = Bit(s) - 1;
      start_ = s;
      current_ = {s};
      Close(s, Bit(s) | blocked_);
    }
    return best_cycle_;
  }

 private:
  void Extend(Vertex v, VertexMask used) {
    if (current_.size() > best_.size()) best_ = current_;
    if (static_cast<int>(best_.size()) == n_) return;
    const VertexMask reach = ReachAvoiding(adj_, v, used);
    if (current_.size() + std::popcount(reach) <= best_.size()) return;
    for (VertexMask next = adj_[v] & ~used; next; next &= next - 1) {
      const Vertex w = std::countr_zero(next);
      current_.push_back(w);
      Extend(w, used | Bit(w));
      current_.pop_back();
      if (static_cast<int>(best_.size()) == n_) return;
    }
  }

  void Close(Vertex v, VertexMask used) {
    const int order = static_cast<int>(current_.size());
    if (order >= 3 && (adj_[v] & Bit(start_)) && order > best_cycle_) {
      best_cycle_ = order;
    }
    const VertexMask reach = ReachAvoiding(adj_, v, used);
    if (order + std::popcount(reach) <= best_cycle_) return;
    for (VertexMask next = adj_[v] & ~used; next; next &= next - 1) {
      const Vertex w = std::countr_zero(next);
      current_.push_back(w);
      Close(w, used | Bit(w));
      current_.pop_back();
    }
  }

  std::vector<VertexMask> adj_;
  int n_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  int best_cycle_ = 0;
  Vertex start_ = 0;
  VertexMask blocked_ = 0;
};

}  // namespace

DirectedPath LongestDirectedPath(const Digraph& d) {
  CheckBudget(d.order(), "longest directed path");
  std::vector<VertexMask> adjacency(d.order());
  for (Vertex v = 0; v < d.order(); ++v) adjacency[v] = d.out_mask(v);
  return DirectedPath{LongestPathSearch(std::move(adjacency)).Path()};
}

OrientedPathCycle LongestOrientedPathAndCycle(const Digraph& d) {
  CheckBudget(d.order(), "longest oriented path/cycle");
  std::vector<VertexMask> adjacency(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    adjacency[v] = d.out_mask(v) | d.in_mask(v);
  }
  OrientedPathCycle result;
  result.path_order =
      static_cast<int>(LongestPathSearch(adjacency).Path().size());
  result.cycle_order = LongestPathSearch(adjacency).CycleOrder();
  return result;
}

}  // namespace dicrit
