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

#include "dicrit/subdivision.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

#include "subdivision_engine.h"

namespace dicrit {

namespace {

std::string ArcName(const Arc& a) {
  return std::to_string(a.first) + "->" + std::to_string(a.second);
}

}  // namespace

WitnessCheck ValidateWitness(const SubdivisionWitness& w) {
  auto bad = [](std::string why) { return WitnessCheck{false, std::move(why)}; };
  const int nf = w.pattern.order();
  const int nd = w.host.order();
  if (static_cast<int>(w.branch_map.size()) != nf) {
    return bad("branch_map has " + std::to_string(w.branch_map.size()) +
               " entries for " + std::to_string(nf) + " pattern vertices");
  }
  std::vector<int> owner(nd, -1);  // -1 free, -2 branch, else arc index
  for (Vertex f = 0; f < nf; ++f) {
    const Vertex v = w.branch_map[f];
    if (v < 0 || v >= nd) {
      return bad("branch vertex of " + std::to_string(f) + " out of range");
    }
    if (owner[v] != -1) {
      return bad("branch map not injective at host vertex " +
                 std::to_string(v));
    }
    owner[v] = -2;
  }
  for (const auto& [arc, path] : w.arc_paths) {
    if (!w.pattern.has_arc(arc.first, arc.second)) {
      return bad("arc_paths has an entry for non-arc " + ArcName(arc));
    }
  }
  int index = 0;
  for (const Arc& arc : w.pattern.arcs()) {
    const auto it = w.arc_paths.find(arc);
    if (it == w.arc_paths.end()) return bad("no path for arc " + ArcName(arc));
    const DirectedPath& p = it->second;
    if (p.order() < 2) return bad("path for " + ArcName(arc) + " is too short");
    if (p.init() != w.branch_map[arc.first] ||
        p.term() != w.branch_map[arc.second]) {
      return bad("path for " + ArcName(arc) + " has wrong endpoints");
    }
    for (Vertex v : p.vertices) {
      if (v < 0 || v >= nd) {
        return bad("path for " + ArcName(arc) + " leaves the host");
      }
    }
    if (!IsDirectedPathIn(w.host, p)) {
      return bad("path for " + ArcName(arc) + " is not a directed path");
    }
    for (int i = 1; i + 1 < p.order(); ++i) {
      const Vertex v = p.vertices[i];
      if (owner[v] == -2) {
        return bad("path for " + ArcName(arc) + " passes through branch vertex " +
                   std::to_string(v));
      }
      if (owner[v] >= 0) {
        return bad("paths share internal vertex " + std::to_string(v));
      }
      owner[v] = index;
    }
    ++index;
  }
  return {true, ""};
}

namespace detail {

SubdivisionEngine::SubdivisionEngine(const Digraph& host, const Digraph& pattern,
                                     const std::map<Arc, std::pair<int, int>>& bounds)
    : host_(host), pattern_(pattern) {
  const int nf = pattern.order();
  // Start with one routed arc per pattern arc, then smooth away pattern
  // vertices with in = out = 1 (and distinct neighbours) into longer chains.
  for (const Arc& a : pattern.arcs()) {
    const auto it = bounds.find(a);
    const auto [lo, hi] = it == bounds.end() ? std::pair{1, kUnbounded} : it->second;
    Route r;
    r.a = a.first;
    r.b = a.second;
    r.lo = lo;
    r.hi = hi;
    r.chain = {a};
    r.chain_lo = {lo};
    r.chain_hi = {hi};
    routes_.push_back(std::move(r));
  }
  active_.assign(nf, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex w = 0; w < nf && !changed; ++w) {
      if (!active_[w]) continue;
      int in_idx = -1, out_idx = -1, in_count = 0, out_count = 0;
      for (int i = 0; i < static_cast<int>(routes_.size()); ++i) {
        if (routes_[i].b == w) in_idx = i, ++in_count;
        if (routes_[i].a == w) out_idx = i, ++out_count;
      }
      if (in_count != 1 || out_count != 1) continue;
      Route& in = routes_[in_idx];
      Route& out = routes_[out_idx];
      if (in.a == out.b) continue;
      Route merged;
      merged.a = in.a;
      merged.b = out.b;
      merged.lo = in.lo + out.lo;
      merged.hi = std::min(kUnbounded, in.hi + out.hi);
      merged.chain = in.chain;
      merged.chain.insert(merged.chain.end(), out.chain.begin(), out.chain.end());
      merged.chain_lo = in.chain_lo;
      merged.chain_lo.insert(merged.chain_lo.end(), out.chain_lo.begin(),
                             out.chain_lo.end());
      merged.chain_hi = in.chain_hi;
      merged.chain_hi.insert(merged.chain_hi.end(), out.chain_hi.begin(),
                             out.chain_hi.end());
      merged.inner = in.inner;
      merged.inner.push_back(w);
      merged.inner.insert(merged.inner.end(), out.inner.begin(), out.inner.end());
      const int hi_idx = std::max(in_idx, out_idx);
      const int lo_idx = std::min(in_idx, out_idx);
      routes_.erase(routes_.begin() + hi_idx);
      routes_.erase(routes_.begin() + lo_idx);
      routes_.push_back(std::move(merged));
      active_[w] = false;
      changed = true;
    }
  }

  out_deg_.assign(nf, 0);
  in_deg_.assign(nf, 0);
  incident_.assign(nf, {});
  for (int i = 0; i < static_cast<int>(routes_.size()); ++i) {
    ++out_deg_[routes_[i].a];
    ++in_deg_[routes_[i].b];
    incident_[routes_[i].a].push_back(i);
    incident_[routes_[i].b].push_back(i);
  }

  // Highest degree first, then prefer vertices touching already placed ones.
  std::vector<bool> placed(nf, false);
  for (;;) {
    int best = -1, best_touch = -1, best_deg = -1;
    for (Vertex f = 0; f < nf; ++f) {
      if (!active_[f] || placed[f]) continue;
      int touch = 0;
      for (int i : incident_[f]) {
        const Vertex other = routes_[i].a == f ? routes_[i].b : routes_[i].a;
        if (placed[other]) ++touch;
      }
      const int deg = out_deg_[f] + in_deg_[f];
      const bool has_touch = touch > 0;
      const bool best_has_touch = best_touch > 0;
      if (best < 0 || has_touch > best_has_touch ||
          (has_touch == best_has_touch && deg > best_deg)) {
        best = f;
        best_touch = touch;
        best_deg = deg;
      }
    }
    if (best < 0) break;
    placed[best] = true;
    order_.push_back(best);
  }
}

std::optional<SubdivisionWitness> SubdivisionEngine::Run() {
  image_.assign(pattern_.order(), -1);
  route_paths_.assign(routes_.size(), {});
  used_ = 0;
  if (!MapNext(0)) return std::nullopt;

  SubdivisionWitness w{pattern_, host_, image_, {}};
  for (std::size_t i = 0; i < routes_.size(); ++i) {
    const Route& r = routes_[i];
    const std::vector<Vertex>& p = route_paths_[i];
    // Split the host path into one segment per chained pattern arc.
    const int segments = static_cast<int>(r.chain.size());
    std::vector<int> len(r.chain_lo);
    int extra = static_cast<int>(p.size()) - 1 - r.lo;
    for (int s = 0; s < segments && extra > 0; ++s) {
      const int give = std::min(extra, r.chain_hi[s] - len[s]);
      len[s] += give;
      extra -= give;
    }
    int pos = 0;
    for (int s = 0; s < segments; ++s) {
      DirectedPath seg;
      seg.vertices.assign(p.begin() + pos, p.begin() + pos + len[s] + 1);
      pos += len[s];
      if (s + 1 < segments) w.branch_map[r.inner[s]] = p[pos];
      w.arc_paths.emplace(r.chain[s], std::move(seg));
    }
  }
  return w;
}

bool SubdivisionEngine::MapNext(std::size_t idx) {
  if (idx == order_.size()) return true;
  const Vertex f = order_[idx];
  for (Vertex v = 0; v < host_.order(); ++v) {
    if (used_ & Bit(v)) continue;
    if (host_.out_degree(v) < out_deg_[f] || host_.in_degree(v) < in_deg_[f]) {
      continue;
    }
    image_[f] = v;
    used_ |= Bit(v);
    std::vector<int> pending;
    for (int i : incident_[f]) {
      const Vertex other = routes_[i].a == f ? routes_[i].b : routes_[i].a;
      if (image_[other] >= 0) pending.push_back(i);
    }
    if (RoutePending(pending, idx + 1)) return true;
    used_ &= ~Bit(v);
    image_[f] = -1;
  }
  return false;
}

bool SubdivisionEngine::RoutePending(std::vector<int> pending,
                                     std::size_t next_idx) {
  if (pending.empty()) return MapNext(next_idx);
  constexpr int kCountCap = 24;
  int best = -1;
  int best_count = kCountCap + 1;
  for (int j = 0; j < static_cast<int>(pending.size()); ++j) {
    int count = 0;
    ForEachPath(pending[j], [&](const std::vector<Vertex>&) {
      return ++count >= best_count;
    });
    if (count == 0) return false;
    if (count < best_count) {
      best_count = count;
      best = j;
    }
  }
  const int r = pending[best];
  pending.erase(pending.begin() + best);
  return ForEachPath(r, [&](const std::vector<Vertex>& path) {
    VertexMask inner = 0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) inner |= Bit(path[i]);
    used_ |= inner;
    route_paths_[r] = path;
    if (RoutePending(pending, next_idx)) return true;
    used_ &= ~inner;
    return false;
  });
}

bool SubdivisionEngine::ForEachPath(
    int r, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const Route& route = routes_[r];
  const Vertex x = image_[route.a];
  const Vertex y = image_[route.b];
  const VertexMask free = host_.all_mask() & ~used_;
  // dist[v]: arcs from v to y through free vertices only.
  std::vector<int> dist(host_.order(), kUnbounded);
  std::vector<Vertex> queue{y};
  dist[y] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex u : host_.in(v)) {
      if (!(free & Bit(u)) || dist[u] != kUnbounded) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  const int max_len = std::min(route.hi, std::popcount(free) + 1);
  std::vector<Vertex> path{x};
  std::function<bool(Vertex, int, VertexMask)> walk =
      [&](Vertex cur, int remaining, VertexMask avail) -> bool {
    if (remaining == 1) {
      if (!host_.has_arc(cur, y)) return false;
      path.push_back(y);
      const bool stop = visit(path);
      path.pop_back();
      return stop;
    }
    for (Vertex next : host_.out(cur)) {
      if (!(avail & Bit(next)) || dist[next] > remaining - 1) continue;
      path.push_back(next);
      const bool stop = walk(next, remaining - 1, avail & ~Bit(next));
      path.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (int len = std::max(route.lo, 1); len <= max_len; ++len) {
    if (walk(x, len, free)) return true;
  }
  return false;
}

}  // namespace detail

namespace {

void CheckHost(const Digraph& host, const std::string& what) {
  CheckBudget(host.order(), what);
}

std::map<Arc, std::pair<int, int>> BoundsFrom(const Digraph& pattern,
                                              const std::map<Arc, int>& counts,
                                              bool exact) {
  std::map<Arc, std::pair<int, int>> bounds;
  for (const auto& [arc, c] : counts) {
    if (!pattern.has_arc(arc.first, arc.second)) {
      throw std::invalid_argument("subdivision count for non-arc " +
                                  ArcName(arc));
    }
    if (c < 0) throw std::invalid_argument("subdivision counts must be >= 0");
  }
  for (const Arc& a : pattern.arcs()) {
    const auto it = counts.find(a);
    const int c = it == counts.end() ? 0 : it->second;
    if (exact && it == counts.end()) {
      throw std::invalid_argument("no subdivision count for arc " + ArcName(a));
    }
    bounds[a] = {c + 1, exact ? c + 1 : detail::kUnbounded};
  }
  return bounds;
}

}  // namespace

std::optional<SubdivisionWitness> ContainsSubdivision(
    const Digraph& host, const Digraph& pattern,
    const std::map<Arc, int>& min_counts) {
  CheckHost(host, "contains_subdivision");
  if (pattern.order() > host.order()) return std::nullopt;
  detail::SubdivisionEngine engine(host, pattern,
                                   BoundsFrom(pattern, min_counts, false));
  return engine.Run();
}

std::optional<SubdivisionWitness> FindExactCopy(
    const Digraph& host, const Digraph& pattern,
    const std::map<Arc, int>& counts) {
  CheckHost(host, "exact copy search");
  if (pattern.order() > host.order()) return std::nullopt;
  detail::SubdivisionEngine engine(host, pattern,
                                   BoundsFrom(pattern, counts, true));
  return engine.Run();
}

}  // namespace dicrit
