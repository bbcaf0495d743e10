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
#include <bit>
#include <functional>
#include <sstream>

#include "dicrit/dicolouring.h"
#include "dicrit/dg_format.h"
#include "dicrit/subdivision.h"

namespace dicrit {

namespace {

struct Leaf {
  Vertex leaf;
  Vertex parent;
};

// Simple path of exactly `len` arcs leaving y (forward) or entering y
// (backward), all other vertices inside `within`.
std::optional<std::vector<Vertex>> PathInside(const Digraph& d, Vertex y,
                                              int len, VertexMask within,
                                              bool forward) {
  std::vector<Vertex> path{y};
  VertexMask avail = within & ~Bit(y);
  std::function<bool()> grow = [&]() -> bool {
    if (static_cast<int>(path.size()) == len + 1) return true;
    const auto& next_list = forward ? d.out(path.back()) : d.in(path.back());
    for (Vertex next : next_list) {
      if (!(avail & Bit(next))) continue;
      avail &= ~Bit(next);
      path.push_back(next);
      if (grow()) return true;
      path.pop_back();
      avail |= Bit(next);
    }
    return false;
  };
  if (!grow()) return std::nullopt;
  if (!forward) std::reverse(path.begin(), path.end());
  return path;
}

// Directed cycle through y of length >= min_len with its other vertices in
// `within`, starting at y.
std::optional<std::vector<Vertex>> LongCycleThrough(const Digraph& d, Vertex y,
                                                    int min_len,
                                                    VertexMask within) {
  std::vector<Vertex> cycle{y};
  VertexMask avail = within & ~Bit(y);
  std::function<bool()> grow = [&]() -> bool {
    const Vertex cur = cycle.back();
    if (static_cast<int>(cycle.size()) >= min_len && cycle.size() > 1 &&
        d.has_arc(cur, y)) {
      return true;
    }
    for (Vertex next : d.out(cur)) {
      if (!(avail & Bit(next))) continue;
      avail &= ~Bit(next);
      cycle.push_back(next);
      if (grow()) return true;
      cycle.pop_back();
      avail |= Bit(next);
    }
    return false;
  };
  if (!grow()) return std::nullopt;
  return cycle;
}

std::string MaskString(VertexMask m) {
  std::string s = "{";
  for (Vertex v : MaskToSet(m).members) {
    if (s.size() > 1) s += ",";
    s += std::to_string(v);
  }
  return s + "}";
}

void CheckTreeShape(const Digraph& tree) {
  if (tree.order() < 1) throw PreconditionError("tree must have a vertex");
  const UndirectedGraph ug = UnderlyingGraph(tree);
  if (!IsConnected(tree) || ug.edge_count() != tree.order() - 1) {
    throw PreconditionError("tree precondition: UG(T) is not a tree");
  }
}

}  // namespace

TreeSearchResult FindTreeSubdivision(const Digraph& d, const Digraph& tree,
                                     const std::map<Arc, int>& counts,
                                     TreeMode mode) {
  CheckTreeShape(tree);
  const bool bidirected = mode == TreeMode::kBidirected;
  for (const Arc& a : tree.arcs()) {
    const auto it = counts.find(a);
    if (it == counts.end() || it->second < 0) {
      throw PreconditionError("counts precondition: arc " +
                              std::to_string(a.first) + "->" +
                              std::to_string(a.second) +
                              " needs a count >= 0");
    }
    if (bidirected && !tree.has_arc(a.second, a.first)) {
      throw PreconditionError("bidirected mode: T is not bidirected");
    }
  }
  for (const auto& [arc, c] : counts) {
    if (!tree.has_arc(arc.first, arc.second)) {
      throw PreconditionError("counts precondition: count given for non-arc");
    }
  }
  if (!bidirected && !IsOriented(tree)) {
    throw PreconditionError("oriented mode: T has a digon");
  }
  int max_count = 0;
  for (const auto& [arc, c] : counts) max_count = std::max(max_count, c);
  if (bidirected) {
    for (const auto& [arc, c] : counts) {
      if (c != max_count) {
        throw PreconditionError("bidirected mode: counts must be uniform");
      }
    }
  }
  const int k = max_count + 1;
  const Length digirth = Digirth(d);
  const int need_girth = bidirected ? 2 * k : k;
  if (digirth < Length(need_girth)) {
    throw PreconditionError("digirth precondition: digirth(D) = " +
                            digirth.ToString() + " < " +
                            std::to_string(need_girth));
  }
  const int nt = tree.order();
  const int chi = DichromaticNumber(d).chi;
  if (chi < nt) {
    throw PreconditionError("chi precondition: chi(D) = " + std::to_string(chi) +
                            " < n(T) = " + std::to_string(nt));
  }

  // Strip leaves, smallest id first.
  const UndirectedGraph ug = UnderlyingGraph(tree);
  std::vector<bool> alive(nt, true);
  std::vector<int> degree(nt);
  for (Vertex v = 0; v < nt; ++v) degree[v] = static_cast<int>(ug.adj[v].size());
  std::vector<Leaf> stripped;
  for (int remaining = nt; remaining > 1; --remaining) {
    Vertex f = 0;
    while (!alive[f] || degree[f] != 1) ++f;
    Vertex p = -1;
    for (Vertex w : ug.adj[f]) {
      if (alive[w]) p = w;
    }
    alive[f] = false;
    --degree[p];
    stripped.push_back({f, p});
  }
  const Vertex root =
      static_cast<Vertex>(std::find(alive.begin(), alive.end(), true) - alive.begin());

  // hosts[j] is the host for the tree on j vertices; acyclic[j] its maximal
  // acyclic set, hosts[j-1] = hosts[j] - acyclic[j].
  std::vector<VertexMask> hosts(nt + 1, 0), acyclic(nt + 1, 0);
  hosts[nt] = d.all_mask();
  for (int j = nt; j >= 2; --j) {
    acyclic[j] = MaximalAcyclicSubset(d, hosts[j]);
    hosts[j - 1] = hosts[j] & ~acyclic[j];
  }

  auto breach = [&](const std::string& what) {
    std::ostringstream dump;
    dump << what << "\nhost:\n" << WriteDg(d) << "tree:\n" << WriteDg(tree);
    for (int j = nt; j >= 1; --j) {
      dump << "level " << j << " host " << MaskString(hosts[j]) << " acyclic "
           << MaskString(acyclic[j]) << "\n";
    }
    return InvariantBreach(dump.str());
  };

  if (hosts[1] == 0) throw breach("empty host for the base vertex");

  SubdivisionWitness w{tree, d, std::vector<Vertex>(nt, -1), {}};
  w.branch_map[root] = std::countr_zero(hosts[1]);
  std::string stall;
  for (int j = 2; j <= nt && stall.empty(); ++j) {
    const auto [f, p] = stripped[nt - j];
    const Vertex y = w.branch_map[p];
    const VertexMask a = acyclic[j];
    const auto cycle = ShortestCycleThrough(d, y, a);
    if (!cycle) throw breach("no cycle through y in A + y (A not maximal?)");
    const int len_cycle = static_cast<int>(cycle->size());
    if (bidirected) {
      const int len = k;
      std::vector<Vertex> c = *cycle;
      if (len_cycle < 2 * len) {
        const auto longer = LongCycleThrough(d, y, 2 * len, a);
        if (!longer) {
          stall = "level " + std::to_string(j) + ": no cycle of length >= " +
                  std::to_string(2 * len) + " through " + std::to_string(y);
          break;
        }
        c = *longer;
      }
      w.branch_map[f] = c[len];
      DirectedPath out{std::vector<Vertex>(c.begin(), c.begin() + len + 1)};
      DirectedPath back{std::vector<Vertex>(c.begin() + len, c.end())};
      back.vertices.push_back(y);
      w.arc_paths.emplace(Arc{p, f}, std::move(out));
      w.arc_paths.emplace(Arc{f, p}, std::move(back));
      continue;
    }
    const bool forward = tree.has_arc(p, f);
    const Arc arc = forward ? Arc{p, f} : Arc{f, p};
    const int len = counts.at(arc) + 1;
    std::vector<Vertex> path;
    if (len_cycle >= len + 1) {
      if (forward) {
        path.assign(cycle->begin(), cycle->begin() + len + 1);
      } else {
        path.assign(cycle->end() - len, cycle->end());
        path.push_back(y);
      }
    } else {
      const auto found = PathInside(d, y, len, a | Bit(y), forward);
      if (!found) {
        stall = "level " + std::to_string(j) + ": no path of " +
                std::to_string(len) + " arcs " + (forward ? "from " : "to ") +
                std::to_string(y) + " inside the acyclic set";
        break;
      }
      path = *found;
    }
    w.branch_map[f] = forward ? path.back() : path.front();
    w.arc_paths.emplace(arc, DirectedPath{std::move(path)});
  }

  TreeSearchResult result;
  if (stall.empty()) {
    const WitnessCheck check = ValidateWitness(w);
    if (!check.valid) throw breach("peeling produced a bad witness: " + check.violation);
    for (const auto& [arc, path] : w.arc_paths) {
      const int want = counts.at(arc) + 1;
      if (bidirected ? path.length() < want : path.length() != want) {
        throw breach("peeling produced a path of the wrong length");
      }
    }
    result.witness = std::move(w);
    result.via_peeling = true;
    return result;
  }

  // The splice stalled (short cycles at the digirth boundary); search the
  // whole host exhaustively instead.
  result.witness = bidirected ? ContainsSubdivision(d, tree, counts)
                              : FindExactCopy(d, tree, counts);
  if (!result.witness) {
    result.failure = "peeling stalled at " + stall +
                     "; exhaustive search finds no copy either";
  }
  return result;
}

}  // namespace dicrit
