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

// Witness JSON:
//   {"arc_paths": {"u->v": [d0, d1, ...]}, "branch_map": {"f": d},
//    "pattern": "<.dg text>"}
// Keys come out sorted; the host is not serialised.

#ifndef DICRIT_WITNESS_JSON_H_
#define DICRIT_WITNESS_JSON_H_

#include <string>
#include <string_view>

#include "dicrit/subdivision.h"

namespace dicrit {

std::string WitnessToJson(const SubdivisionWitness& w, int indent = -1);

// Throws ConstructionError on malformed JSON or keys.
SubdivisionWitness WitnessFromJson(std::string_view text, const Digraph& host);

}  // namespace dicrit

#endif  // DICRIT_WITNESS_JSON_H_
