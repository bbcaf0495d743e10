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

#include "dicrit/witness_json.h"

#include "dicrit/dg_format.h"
#include "json.hpp"

namespace dicrit {

using nlohmann::json;

std::string WitnessToJson(const SubdivisionWitness& w, int indent) {
  json out;
  out["pattern"] = WriteDg(w.pattern);
  json branch = json::object();
  for (std::size_t f = 0; f < w.branch_map.size(); ++f) {
    branch[std::to_string(f)] = w.branch_map[f];
  }
  out["branch_map"] = std::move(branch);
  json paths = json::object();
  for (const auto& [arc, path] : w.arc_paths) {
    paths[std::to_string(arc.first) + "->" + std::to_string(arc.second)] =
        path.vertices;
  }
  out["arc_paths"] = std::move(paths);
  return out.dump(indent);
}

SubdivisionWitness WitnessFromJson(std::string_view text, const Digraph& host) {
  try {
    const json in = json::parse(text);
    SubdivisionWitness w;
    w.host = host;
    w.pattern = ParseDg(in.at("pattern").get<std::string>());
    w.branch_map.assign(w.pattern.order(), -1);
    for (const auto& [key, value] : in.at("branch_map").items()) {
      const int f = std::stoi(key);
      if (f < 0 || f >= w.pattern.order()) {
        throw ConstructionError("branch_map key out of range: " + key);
      }
      w.branch_map[f] = value.get<Vertex>();
    }
    for (const auto& [key, value] : in.at("arc_paths").items()) {
      const auto arrow = key.find("->");
      if (arrow == std::string::npos) {
        throw ConstructionError("arc key must look like u->v: " + key);
      }
      const Arc arc{std::stoi(key.substr(0, arrow)),
                    std::stoi(key.substr(arrow + 2))};
      w.arc_paths[arc] = DirectedPath{value.get<std::vector<Vertex>>()};
    }
    return w;
  } catch (const json::exception& e) {
    throw ConstructionError(std::string("witness JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ConstructionError*>(&e)) throw;
    throw ConstructionError(std::string("witness JSON: ") + e.what());
  }
}

}  // namespace dicrit
