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

// ".dg" text format:
//
//   # optional comment lines anywhere
//   n <N>
//   <u> <v>        one arc per line, 0-based
//
// The writer emits `n <N>` followed by the arcs in lexicographic order, so
// WriteDg(ParseDg(WriteDg(d))) == WriteDg(d) byte for byte.

#ifndef DICRIT_DG_FORMAT_H_
#define DICRIT_DG_FORMAT_H_

#include <string>
#include <string_view>

#include "dicrit/digraph.h"

namespace dicrit {

// Throws ConstructionError with a line number on malformed input.
Digraph ParseDg(std::string_view text);
std::string WriteDg(const Digraph& d);

Digraph ReadDgFile(const std::string& path);
void WriteDgFile(const std::string& path, const Digraph& d);

}  // namespace dicrit

#endif  // DICRIT_DG_FORMAT_H_
