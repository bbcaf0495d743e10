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

#include "dicrit/dg_format.h"

#include <fstream>
#include <sstream>
#include <vector>

namespace dicrit {

namespace {

[[noreturn]] void Fail(int line, const std::string& what) {
  throw ConstructionError(".dg line " + std::to_string(line) + ": " + what);
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Digraph ParseDg(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t");
    if (IsBlank(line) || (first != std::string::npos && line[first] == '#')) {
      continue;
    }
    std::istringstream fields(line);
    if (n < 0) {
      std::string key;
      if (!(fields >> key >> n) || key != "n" || n < 0) {
        Fail(line_no, "expected `n <N>` header");
      }
    } else {
      long u = 0, v = 0;
      if (!(fields >> u >> v)) Fail(line_no, "expected `<u> <v>`");
      arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string extra;
    if (fields >> extra) Fail(line_no, "trailing text `" + extra + "`");
  }
  if (n < 0) throw ConstructionError(".dg input has no `n <N>` header");
  return Digraph::FromArcs(n, arcs);
}

std::string WriteDg(const Digraph& d) {
  std::string out = "n " + std::to_string(d.order()) + "\n";
  for (const auto& [u, v] : d.arcs()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Digraph ReadDgFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstructionError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseDg(buffer.str());
}

void WriteDgFile(const std::string& path, const Digraph& d) {
  std::ofstream out(path);
  if (!out) throw ConstructionError("cannot write " + path);
  out << WriteDg(d);
}

}  // namespace dicrit
