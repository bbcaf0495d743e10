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

// Internal backtracking engine shared by the subdivision searches.

#ifndef DICRIT_SRC_SUBDIVISION_ENGINE_H_
#define DICRIT_SRC_SUBDIVISION_ENGINE_H_

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dicrit/subdivision.h"

namespace dicrit::detail {

inline constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

// Exhaustive search for a subdivision of `pattern` where arc uv becomes a path
// with between bounds[uv].first and bounds[uv].second arcs (missing entries:
// at least 1). Host must fit in a bitmask.
class SubdivisionEngine {
 public:
  SubdivisionEngine(const Digraph& host, const Digraph& pattern,
                    const std::map<Arc, std::pair<int, int>>& bounds);

  std::optional<SubdivisionWitness> Run();

 private:
  // A chain of pattern arcs through smoothed vertices, routed as one path.
  struct Route {
    Vertex a = 0, b = 0;
    int lo = 1, hi = kUnbounded;
    std::vector<Arc> chain;
    std::vector<int> chain_lo, chain_hi;
    std::vector<Vertex> inner;  // smoothed pattern vertices along the chain
  };

  bool MapNext(std::size_t idx);
  bool RoutePending(std::vector<int> pending, std::size_t next_idx);
  // Calls visit on free paths for route r by increasing length until it
  // returns true; returns whether it did.
  bool ForEachPath(int r,
                   const std::function<bool(const std::vector<Vertex>&)>& visit);

  const Digraph& host_;
  const Digraph& pattern_;
  std::vector<Route> routes_;
  std::vector<bool> active_;
  std::vector<int> out_deg_, in_deg_;
  std::vector<std::vector<int>> incident_;
  std::vector<Vertex> order_;

  std::vector<Vertex> image_;
  std::vector<std::vector<Vertex>> route_paths_;
  VertexMask used_ = 0;
};

}  // namespace dicrit::detail

#endif  // DICRIT_SRC_SUBDIVISION_ENGINE_H_
