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
#include <functional>
#include <stdexcept>

#include "dicrit/constructions.h"
#include "dicrit/subdivision.h"

namespace dicrit {

namespace {

// Small Edmonds-Karp network. Node 2v is v_in, 2v+1 is v_out, 2n the sink.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  void AddEdge(int from, int to, int cap) {
    adj_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  // Pushes up to `limit` unit augmentations; returns the flow value.
  int MaxFlow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit) {
      std::vector<int> via(adj_.size(), -1);
      std::vector<int> queue{s};
      std::vector<bool> seen(adj_.size(), false);
      seen[s] = true;
      for (std::size_t head = 0; head < queue.size() && !seen[t]; ++head) {
        for (int e : adj_[queue[head]]) {
          const int to = edges_[e].to;
          if (seen[to] || edges_[e].cap == 0) continue;
          seen[to] = true;
          via[to] = e;
          queue.push_back(to);
        }
      }
      if (!seen[t]) break;
      for (int v = t; v != s; v = edges_[via[v] ^ 1].to) {
        edges_[via[v]].cap -= 1;
        edges_[via[v] ^ 1].cap += 1;
      }
      ++flow;
    }
    return flow;
  }

  std::vector<bool> Reachable(int s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : adj_[v]) {
        if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = true;
          stack.push_back(edges_[e].to);
        }
      }
    }
    return seen;
  }

  // Flow on forward edge e (even index) given its original capacity.
  int FlowOn(int e) const { return edges_[e ^ 1].cap; }

  const std::vector<int>& out(int v) const { return adj_[v]; }
  int head(int e) const { return edges_[e].to; }
  void Consume(int e) {
    edges_[e ^ 1].cap -= 1;
  }

 private:
  struct Edge {
    int to;
    int cap;
  };
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
};

// Drops any repeated-vertex loop from a walk.
std::vector<Vertex> Shortcut(const std::vector<Vertex>& walk) {
  std::vector<Vertex> path;
  for (Vertex v : walk) {
    const auto it = std::find(path.begin(), path.end(), v);
    if (it != path.end()) path.erase(it + 1, path.end());
    else path.push_back(v);
  }
  return path;
}

}  // namespace

DisjointPathsResult DisjointPaths(const Digraph& d, Vertex source,
                                  const VertexSet& targets, int count,
                                  TargetSharing sharing) {
  const int n = d.order();
  if (source < 0 || source >= n) throw std::invalid_argument("source out of range");
  if (targets.contains(source)) {
    throw std::invalid_argument("source must not be a target");
  }
  std::vector<bool> is_target(n, false);
  for (Vertex t : targets.members) {
    if (t < 0 || t >= n) throw std::invalid_argument("target out of range");
    is_target[t] = true;
  }
  const bool shared = sharing == TargetSharing::kShared;
  const int big = std::max(count, 1) + n;
  const int sink = 2 * n;
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };

  FlowNetwork net(2 * n + 1);
  for (Vertex v = 0; v < n; ++v) {
    if (v == source) continue;
    if (is_target[v]) {
      net.AddEdge(in(v), sink, shared ? big : 1);
    } else {
      net.AddEdge(in(v), out(v), 1);
    }
  }
  for (const auto& [a, b] : d.arcs()) {
    if (is_target[a] || b == source) continue;
    const int cap = (shared && a == source && is_target[b]) ? 1 : big;
    net.AddEdge(out(a), in(b), cap);
  }
  const int flow = net.MaxFlow(out(source), sink, count);

  DisjointPathsResult result;
  if (flow >= count) {
    PathSystem system{source, {}};
    for (int p = 0; p < count; ++p) {
      std::vector<Vertex> walk{source};
      int node = out(source);
      while (node != sink) {
        int next = -1;
        for (int e : net.out(node)) {
          if (e % 2 == 0 && net.FlowOn(e) > 0) {
            net.Consume(e);
            next = net.head(e);
            break;
          }
        }
        if (next < 0) throw InvariantBreach("flow decomposition got stuck");
        if (next != sink && next % 2 == 0) walk.push_back(next / 2);
        node = next;
      }
      system.paths.push_back(DirectedPath{Shortcut(walk)});
    }
    result.system = std::move(system);
    return result;
  }

  const std::vector<bool> reach = net.Reachable(out(source));
  VertexSet cut;
  for (Vertex v = 0; v < n; ++v) {
    if (v == source) continue;
    if (is_target[v]) {
      if (shared) {
        if (!reach[in(v)] && d.has_arc(source, v)) cut.members.push_back(v);
      } else if (reach[in(v)]) {
        cut.members.push_back(v);
      }
    } else if (reach[in(v)] && !reach[out(v)]) {
      cut.members.push_back(v);
    }
  }
  if (cut.size() != flow) {
    throw InvariantBreach("min cut has " + std::to_string(cut.size()) +
                          " vertices but flow is " + std::to_string(flow));
  }
  result.cut = std::move(cut);
  return result;
}

namespace {

SubdivisionWitness WitnessFromPaths(const Digraph& host, const Digraph& pattern,
                                    const std::vector<Vertex>& pattern_to_host,
                                    std::map<Arc, DirectedPath> paths) {
  return SubdivisionWitness{pattern, host, pattern_to_host, std::move(paths)};
}

SubdivisionWitness OutStarWitness(const Digraph& d, Vertex u, int l,
                                  const std::vector<DirectedPath>& branches) {
  const int k = static_cast<int>(branches.size());
  const Digraph pattern = OutStar(k, l);
  std::vector<Vertex> image(pattern.order(), u);
  std::map<Arc, DirectedPath> paths;
  for (int i = 0; i < k; ++i) {
    Vertex prev = 0;
    for (int step = 1; step <= l; ++step) {
      const Vertex f = i * l + step;
      image[f] = branches[i].vertices[step];
      paths.emplace(Arc{prev, f},
                    DirectedPath{{branches[i].vertices[step - 1],
                                  branches[i].vertices[step]}});
      prev = f;
    }
  }
  return WitnessFromPaths(d, pattern, image, std::move(paths));
}

}  // namespace

std::optional<SubdivisionWitness> FindOutStar(const Digraph& d, Vertex u, int k,
                                              int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("out-star needs k, l >= 1");
  if (u < 0 || u >= d.order()) throw std::invalid_argument("u out of range");
  const std::vector<Length> dist = Distances(d, u);
  VertexSet far;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (dist[v] >= Length(l) && dist[v].is_finite()) far.members.push_back(v);
  }
  const DisjointPathsResult menger =
      DisjointPaths(d, u, far, k, TargetSharing::kDistinct);
  if (menger.system) {
    // Each path reaches a vertex at distance >= l, so it has >= l arcs.
    std::vector<DirectedPath> branches;
    for (const DirectedPath& p : menger.system->paths) {
      DirectedPath cut;
      cut.vertices.assign(p.vertices.begin(), p.vertices.begin() + l + 1);
      branches.push_back(std::move(cut));
    }
    return OutStarWitness(d, u, l, branches);
  }

  CheckBudget(d.order(), "out-star fallback search");
  if (d.out_degree(u) < k) return std::nullopt;
  // Exhaustive: k disjoint paths of exactly l arcs, first vertices increasing.
  std::vector<DirectedPath> branches;
  VertexMask used = Bit(u);
  std::function<bool(int, Vertex)> place = [&](int i, Vertex min_first) -> bool {
    if (i == k) return true;
    DirectedPath path{{u}};
    std::function<bool(Vertex)> extend = [&](Vertex cur) -> bool {
      if (path.length() == l) {
        branches.push_back(path);
        if (place(i + 1, path.vertices[1] + 1)) return true;
        branches.pop_back();
        return false;
      }
      for (Vertex next : d.out(cur)) {
        if (used & Bit(next)) continue;
        if (path.length() == 0 && next < min_first) continue;
        used |= Bit(next);
        path.vertices.push_back(next);
        const bool ok = extend(next);
        path.vertices.pop_back();
        used &= ~Bit(next);
        if (ok) return true;
      }
      return false;
    };
    return extend(u);
  };
  if (!place(0, 0)) return std::nullopt;
  return OutStarWitness(d, u, l, branches);
}

std::optional<SubdivisionWitness> FindSpindle(const Digraph& d, int k) {
  if (k < 2) throw std::invalid_argument("find_spindle needs k >= 2");
  CheckBudget(d.order(), "find_spindle");
  const int n = d.order();
  if (n < 2 * k) return std::nullopt;  // C(k,k) subdivisions have >= 2k vertices

  std::vector<Vertex> p1, p2;
  VertexMask used = 0;
  // DFS over simple paths from cur to y avoiding `used`; calls done() at y
  // when the path has >= k arcs.
  std::function<bool(std::vector<Vertex>&, Vertex, Vertex,
                     const std::function<bool()>&)>
      walk = [&](std::vector<Vertex>& path, Vertex y, Vertex min_second,
                 const std::function<bool()>& done) -> bool {
    const Vertex cur = path.back();
    for (Vertex next : d.out(cur)) {
      if (path.size() == 1 && next < min_second) continue;
      if (next == y) {
        if (static_cast<int>(path.size()) >= k) {
          path.push_back(y);
          const bool ok = done();
          path.pop_back();
          if (ok) return true;
        }
        continue;
      }
      if (used & Bit(next)) continue;
      used |= Bit(next);
      path.push_back(next);
      const bool ok = walk(path, y, min_second, done);
      path.pop_back();
      used &= ~Bit(next);
      if (ok) return true;
    }
    return false;
  };

  for (Vertex x = 0; x < n; ++x) {
    if (d.out_degree(x) < 2) continue;
    for (Vertex y = 0; y < n; ++y) {
      if (y == x || d.in_degree(y) < 2) continue;
      if (!DisjointPaths(d, x, VertexSet{{y}}, 2).system) continue;
      used = Bit(x) | Bit(y);
      p1 = {x};
      std::vector<Vertex> first, second;
      const bool found = walk(p1, y, 0, [&] {
        p2 = {x};
        return walk(p2, y, p1[1] + 1, [&] {
          first = p1;
          second = p2;
          return true;
        });
      });
      if (!found) continue;
      const Digraph pattern = Spindle(k, k);
      std::vector<Vertex> image(pattern.order());
      image[0] = x;
      image[1] = y;
      std::map<Arc, DirectedPath> paths;
      // Pattern branch j follows host path j; its last pattern arc absorbs
      // whatever length exceeds k.
      Vertex next_internal = 2;
      for (const std::vector<Vertex>* host_path : {&first, &second}) {
        const std::vector<Vertex>& hp = *host_path;
        Vertex prev = 0;
        for (int step = 1; step < k; ++step) {
          const Vertex f = next_internal++;
          image[f] = hp[step];
          paths.emplace(Arc{prev, f}, DirectedPath{{hp[step - 1], hp[step]}});
          prev = f;
        }
        paths.emplace(Arc{prev, 1},
                      DirectedPath{std::vector<Vertex>(hp.begin() + (k - 1),
                                                       hp.end())});
      }
      return WitnessFromPaths(d, pattern, image, std::move(paths));
    }
  }
  return std::nullopt;
}

}  // namespace dicrit
