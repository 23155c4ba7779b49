// Copyright 2026 The GFR Codes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of fields, partitions, graphs, codes and simulation reports.
// Readers throw FormatError on anything malformed or inconsistent.

#ifndef GFR_SERIALIZE_H_
#define GFR_SERIALIZE_H_

#include <string>

#include "json.hpp"

#include "gfr/family.h"
#include "gfr/galois.h"
#include "gfr/gfr_code.h"
#include "gfr/repair_graph.h"
#include "gfr/storage_sim.h"

namespace gfr {

using Json = nlohmann::ordered_json;

// {"m": 5, "poly": "0x25"}
Json to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

// {"n", "d", "c", "families": {"1": [...], "-1": [...], "0": [...]},
//  "helpers": {"1": [...], ...}}
Json to_json(const FamilyPartition& partition);

// {"regular_groups": [[...], ...], "remaining_group": [...]}
Json to_json(const GroupPlan& plan);
GroupPlan plan_from_json(const Json& j);

// {"n", "d", "groups": [{"first_node", "n"}], "edges": [{"u", "v", "kind",
//  "ij_class"}]}
Json to_json(const RepairGraph& graph);
// Rebuilds the graph from its groups and checks the edge list matches.
RepairGraph graph_from_json(const Json& j);

// {"params", "scheme", "field", "M", "seed", "attempts",
//  "edges": [{"id", "u", "v", "kind", "ij_class", "coeffs": [hex...],
//             "mix": [hex...]}]}; "mix" only on dashed edges.
Json to_json(const GfrCode& code);
GfrCode code_from_json(const Json& j);

Json to_json(const RepairReport& report);
Json to_json(const TraceReport& report);

std::string dump(const Json& j);
Json parse_json(const std::string& text);

}  // namespace gfr

#endif  // GFR_SERIALIZE_H_
