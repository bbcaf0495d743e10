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

#include "dicrit/dicolouring.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "dicrit/bounds.h"

namespace dicrit {

DicolouringCheck CheckDicolouring(const Digraph& d, const Dicolouring& c) {
  if (static_cast<int>(c.colours.size()) != d.order()) {
    throw std::invalid_argument("colouring has " +
                                std::to_string(c.colours.size()) +
                                " entries for a digraph on " +
                                std::to_string(d.order()) + " vertices");
  }
  DicolouringCheck result;
  int top = 0;
  for (int colour : c.colours) top = std::max(top, colour);
  for (int colour = 1; colour <= top; ++colour) {
    VertexMask members = 0;
    for (Vertex v = 0; v < d.order(); ++v) {
      if (c.colours[v] == colour) members |= Bit(v);
    }
    if (auto cycle = FindDirectedCycle(d, members)) {
      result.cycle = std::move(*cycle);
      return result;
    }
  }
  result.valid = true;
  return result;
}

namespace {

// Smallest-last ordering of UG(d), reversed: high-core vertices first.
std::vector<Vertex> DegeneracyOrder(const Digraph& d) {
  const int n = d.order();
  std::vector<VertexMask> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = d.out_mask(v) | d.in_mask(v);
  VertexMask remaining = d.all_mask();
  std::vector<Vertex> removal;
  while (remaining) {
    Vertex pick = -1;
    int best = n + 1;
    for (VertexMask r = remaining; r; r &= r - 1) {
      const Vertex v = std::countr_zero(r);
      const int deg = std::popcount(adj[v] & remaining);
      if (deg < best) {
        best = deg;
        pick = v;
      }
    }
    removal.push_back(pick);
    remaining &= ~Bit(pick);
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

class DicolouringSolver {
 public:
  DicolouringSolver(const Digraph& d, int k)
      : d_(d), k_(k), order_(DegeneracyOrder(d)), colour_(d.order(), 0),
        classes_(k + 1, 0) {}

  bool Solve() { return Assign(0, 0); }

  Dicolouring Witness() const { return Dicolouring{colour_, k_}; }

 private:
  // Adding v to `members` closes a directed cycle iff some out-neighbour of v
  // in members reaches an in-neighbour of v inside members.
  bool ClosesCycle(Vertex v, VertexMask members) const {
    VertexMask frontier = d_.out_mask(v) & members;
    const VertexMask targets = d_.in_mask(v) & members;
    if (!frontier || !targets) return false;
    VertexMask reached = 0;
    while (frontier) {
      reached |= frontier;
      if (reached & targets) return true;
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) {
        next |= d_.out_mask(std::countr_zero(f));
      }
      frontier = next & members & ~reached;
    }
    return false;
  }

  bool Assign(std::size_t pos, int used) {
    if (pos == order_.size()) return true;
    const Vertex v = order_[pos];
    const int limit = std::min(used + 1, k_);
    for (int c = 1; c <= limit; ++c) {
      if (ClosesCycle(v, classes_[c])) continue;
      colour_[v] = c;
      classes_[c] |= Bit(v);
      if (Assign(pos + 1, std::max(used, c))) return true;
      classes_[c] &= ~Bit(v);
      colour_[v] = 0;
    }
    return false;
  }

  const Digraph& d_;
  int k_;
  std::vector<Vertex> order_;
  std::vector<int> colour_;
  std::vector<VertexMask> classes_;
};

}  // namespace

std::optional<Dicolouring> FindDicolouring(const Digraph& d, int k) {
  CheckBudget(d.order(), "dicolouring solver");
  if (d.order() == 0) return Dicolouring{{}, std::max(k, 0)};
  if (k <= 0) return std::nullopt;
  DicolouringSolver solver(d, k);
  if (!solver.Solve()) return std::nullopt;
  return solver.Witness();
}

DichromaticResult DichromaticNumber(const Digraph& d) {
  CheckBudget(d.order(), "dichromatic number");
  if (d.order() == 0) return DichromaticResult{0, Dicolouring{{}, 0}};
  for (int k = 1;; ++k) {
    if (auto colouring = FindDicolouring(d, k)) {
      return DichromaticResult{k, std::move(*colouring)};
    }
  }
}

DicriticalityResult CheckDicritical(const Digraph& d, int k) {
  DicriticalityResult result;
  const DichromaticResult chi = DichromaticNumber(d);
  result.chi = chi.chi;
  if (chi.chi < k) {
    Dicolouring lower = chi.witness;
    lower.k = std::max(k - 1, 0);
    result.lower_colouring = std::move(lower);
    return result;
  }
  if (chi.chi > k) return result;
  if (d.order() >= 2) {
    for (Vertex v = 0; v < d.order(); ++v) {
      if (d.out_degree(v) + d.in_degree(v) == 0) {
        result.isolated_vertex = v;
        return result;
      }
    }
  }
  for (const auto& [u, v] : d.arcs()) {
    if (!FindDicolouring(d.WithoutArc(u, v), k - 1)) {
      result.stubborn_arc = Arc{u, v};
      return result;
    }
  }
  result.dicritical = true;
  return result;
}

VertexMask MaximalAcyclicSubset(const Digraph& d, VertexMask within) {
  VertexMask chosen = 0;
  for (VertexMask r = within; r; r &= r - 1) {
    const Vertex v = std::countr_zero(r);
    if (!FindDirectedCycle(d, chosen | Bit(v))) chosen |= Bit(v);
  }
  return chosen;
}

VertexSet MaximalAcyclicSet(const Digraph& d) {
  CheckBudget(d.order(), "maximal acyclic set");
  return MaskToSet(MaximalAcyclicSubset(d, d.all_mask()));
}

namespace {

int ComponentsOutside(const std::vector<VertexMask>& adj, VertexMask alive) {
  int count = 0;
  while (alive) {
    VertexMask frontier = alive & (~alive + 1);
    VertexMask comp = frontier;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) {
        next |= adj[std::countr_zero(f)];
      }
      frontier = next & alive & ~comp;
      comp |= frontier;
    }
    alive &= ~comp;
    ++count;
  }
  return count;
}

}  // namespace

ComponentBoundCheck CheckComponentBound(const Digraph& d, int k, int max_s) {
  CheckBudget(d.order(), "component bound check");
  const int n = d.order();
  max_s = std::min(max_s, n);
  std::vector<VertexMask> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = d.out_mask(v) | d.in_mask(v);

  ComponentBoundCheck result;
  std::vector<BigInt> bound_by_size;
  for (int s = 0; s <= max_s; ++s) bound_by_size.push_back(ComponentBound(k, s));

  std::vector<Vertex> chosen;
  auto recurse = [&](auto&& self, Vertex next, VertexMask removed) -> bool {
    ++result.checked_sets;
    const int cc = ComponentsOutside(adj, d.all_mask() & ~removed);
    if (BigInt(cc) > bound_by_size[chosen.size()]) {
      result.holds = false;
      result.violating_set = VertexSet{chosen};
      return false;
    }
    if (static_cast<int>(chosen.size()) == max_s) return true;
    for (Vertex v = next; v < n; ++v) {
      chosen.push_back(v);
      const bool ok = self(self, v + 1, removed | Bit(v));
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  recurse(recurse, 0, 0);
  return result;
}

}  // namespace dicrit
