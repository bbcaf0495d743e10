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

// Orderly generation. Vertices are added one block at a time: block m fixes
// the pairs (0,m) .. (m-1,m). The minimal code of a digraph restricts to the
// minimal code of its first m+1 vertices, so a non-canonical prefix can be
// cut as soon as its block closes.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

#include "dicrit/lab.h"

namespace dicrit {

namespace {

constexpr int kMaxN = 8;

struct State {
  std::array<std::uint32_t, kMaxN> out{};
  std::array<std::uint32_t, kMaxN> in{};
};

int PairValue(const State& s, int i, int j) {
  return 2 * ((s.out[i] >> j) & 1) + ((s.out[j] >> i) & 1);
}

// Whether the first `size` vertices of s already carry the minimal code.
bool PrefixCanonical(const State& s, int size) {
  std::array<int, kMaxN> perm{};
  std::uint32_t used = 0;
  bool canonical = true;
  // Returns false when a smaller code was found.
  auto rec = [&](auto&& self, int j) -> bool {
    if (j == size) return true;
    for (int w = 0; w < size; ++w) {
      if (used & (1u << w)) continue;
      perm[j] = w;
      int cmp = 0;
      for (int i = 0; i < j && cmp == 0; ++i) {
        const int a = 2 * ((s.out[perm[i]] >> w) & 1) + ((s.out[w] >> perm[i]) & 1);
        const int b = PairValue(s, i, j);
        cmp = (a > b) - (a < b);
      }
      if (cmp < 0) return false;
      if (cmp > 0) continue;
      used |= 1u << w;
      const bool ok = self(self, j + 1);
      used &= ~(1u << w);
      if (!ok) return false;
    }
    return true;
  };
  canonical = rec(rec, 0);
  return canonical;
}

class Enumerator {
 public:
  explicit Enumerator(const EnumerationSpec& spec) : spec_(spec) {
    for (int m = 1; m < spec.n; ++m) {
      for (int i = 0; i < m; ++i) pairs_.push_back({i, m});
    }
    girth_ = spec.min_digirth;
    if (girth_ >= 3) max_value_ = 2;  // digons are 2-cycles
    if (spec.oriented_only) max_value_ = 2;
  }

  int pair_count() const { return static_cast<int>(pairs_.size()); }

  // Depth-first from pair index pi. With stop >= 0, states reaching pair
  // index `stop` go to `prefixes` instead of descending further.
  void Run(State& s, int pi, int stop, std::vector<State>* prefixes,
           const std::function<void(const State&)>& leaf) {
    if (pi == stop) {
      prefixes->push_back(s);
      return;
    }
    if (pi == pair_count()) {
      leaf(s);
      return;
    }
    const auto [i, m] = pairs_[pi];
    for (int value = 0; value <= max_value_; ++value) {
      const bool forward = value & 2;  // i -> m
      const bool backward = value & 1;  // m -> i
      if (forward && !ArcAllowed(s, i, m)) continue;
      if (forward) AddArc(s, i, m);
      bool ok = !backward || ArcAllowed(s, m, i);
      if (ok && backward) AddArc(s, m, i);
      if (ok) ok = DegreesReachable(s, i, m);
      if (ok && i == m - 1 && spec_.up_to_iso) ok = PrefixCanonical(s, m + 1);
      if (ok) Run(s, pi + 1, stop, prefixes, leaf);
      if (backward && (s.out[m] >> i & 1)) RemoveArc(s, m, i);
      if (forward) RemoveArc(s, i, m);
    }
  }

  bool LeafAccepts(const State& s) const {
    for (int v = 0; v < spec_.n; ++v) {
      if (std::popcount(s.out[v]) < spec_.min_out_degree) return false;
    }
    return true;
  }

 private:
  static void AddArc(State& s, int u, int v) {
    s.out[u] |= 1u << v;
    s.in[v] |= 1u << u;
  }
  static void RemoveArc(State& s, int u, int v) {
    s.out[u] &= ~(1u << v);
    s.in[v] &= ~(1u << u);
  }

  // Adding u -> v must not close a cycle shorter than the digirth bound.
  bool ArcAllowed(const State& s, int u, int v) const {
    if (girth_ <= 2) return true;
    std::uint32_t seen = 1u << v;
    std::uint32_t frontier = seen;
    for (int step = 1; step <= girth_ - 2; ++step) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) {
        next |= s.out[std::countr_zero(f)];
      }
      if (next & (1u << u)) return false;
      frontier = next & ~seen;
      seen |= next;
      if (!frontier) break;
    }
    return true;
  }

  // Out-degree can still reach the bound for the two vertices just touched.
  bool DegreesReachable(const State& s, int i, int m) const {
    const int need = spec_.min_out_degree;
    if (need == 0) return true;
    const int later = spec_.n - 1 - m;
    if (std::popcount(s.out[i]) + later < need) return false;
    return std::popcount(s.out[m]) + (m - 1 - i) + later >= need;
  }

  const EnumerationSpec& spec_;
  std::vector<std::pair<int, int>> pairs_;
  int girth_ = 0;
  int max_value_ = 3;
};

Digraph ToDigraph(const State& s, int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (std::uint32_t o = s.out[u]; o; o &= o - 1) {
      arcs.emplace_back(u, std::countr_zero(o));
    }
  }
  return Digraph::FromArcs(n, arcs);
}

}  // namespace

std::int64_t Enumerate(const EnumerationSpec& spec, const VisitFn& visit,
                       int jobs) {
  if (spec.n < 0) throw std::invalid_argument("enumeration needs n >= 0");
  if (spec.n > kEnumerationBudget) {
    throw BudgetExceeded("enumeration of n = " + std::to_string(spec.n) +
                         " exceeds the budget of " +
                         std::to_string(kEnumerationBudget) + " vertices");
  }
  Enumerator e(spec);
  std::atomic<std::int64_t> count{0};
  auto leaf = [&](const State& s) {
    if (!e.LeafAccepts(s)) return;
    const Digraph d = ToDigraph(s, spec.n);
    if (spec.connected && !IsConnected(d)) return;
    if (spec.strongly_connected && !IsStronglyConnected(d)) return;
    count.fetch_add(1, std::memory_order_relaxed);
    visit(d);
  };

  State root;
  if (jobs <= 1 || e.pair_count() == 0) {
    e.Run(root, 0, -1, nullptr, leaf);
    return count.load();
  }
  // Workers own disjoint prefixes of the first ceil(n/2) pair choices.
  const int depth = std::min(e.pair_count(), (spec.n + 1) / 2);
  std::vector<State> prefixes;
  e.Run(root, 0, depth, &prefixes, leaf);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      Enumerator local(spec);
      for (std::size_t k = next.fetch_add(1); k < prefixes.size();
           k = next.fetch_add(1)) {
        State s = prefixes[k];
        local.Run(s, depth, -1, nullptr, leaf);
      }
    });
  }
  for (auto& w : workers) w.join();
  return count.load();
}

std::vector<std::uint8_t> AdjacencyCode(const Digraph& d) {
  std::vector<std::uint8_t> code;
  for (Vertex j = 1; j < d.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      code.push_back(static_cast<std::uint8_t>(2 * d.has_arc(i, j) +
                                               d.has_arc(j, i)));
    }
  }
  return code;
}

bool IsCanonical(const Digraph& d) {
  if (d.order() > kMaxN) {
    throw BudgetExceeded("canonical check limited to " + std::to_string(kMaxN) +
                         " vertices");
  }
  State s;
  for (const auto& [u, v] : d.arcs()) {
    s.out[u] |= 1u << v;
    s.in[v] |= 1u << u;
  }
  return PrefixCanonical(s, d.order());
}

Digraph CanonicalForm(const Digraph& d) {
  const int n = d.order();
  if (n > kMaxN) {
    throw BudgetExceeded("canonical form limited to " + std::to_string(kMaxN) +
                         " vertices");
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  Digraph best_graph = d;
  do {
    // perm[new] = old
    std::vector<Vertex> where(n);
    for (int k = 0; k < n; ++k) where[perm[k]] = k;
    std::vector<Arc> arcs;
    for (const auto& [u, v] : d.arcs()) arcs.emplace_back(where[u], where[v]);
    Digraph g = Digraph::FromArcs(n, arcs);
    auto code = AdjacencyCode(g);
    if (best.empty() || code < best) {
      best = std::move(code);
      best_graph = std::move(g);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best_graph;
}

}  // namespace dicrit
