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

// Serial reference scans. Subsets are produced by successor iteration, not
// by unranking, so the parallel kernels are checked against an independent
// enumeration.

#include "gfr/verify.h"
#include "subsets.h"

namespace gfr::detail {

VerifyResult verify_reconstruction_serial(const GfrCode& code, int k) {
  const RepairGraph& g = code.graph;
  const auto target = static_cast<std::size_t>(code.file_size);
  VerifyResult result;
  std::vector<NodeId> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = g.first_node() + i;
  do {
    ++result.checked;
    if (rank_of_edges(code, incident_edges(g, combo)) != target) {
      result.ok = false;
      result.witness.assign(combo.begin(), combo.end());
      return result;
    }
  } while (next_combination(combo, g.n(), g.first_node()));
  return result;
}

VerifyResult verify_property2_serial(const GfrCode& code) {
  const RepairGraph& g = code.graph;
  const int edges = static_cast<int>(g.edges().size());
  const auto target = static_cast<std::size_t>(code.file_size);
  VerifyResult result;
  std::vector<EdgeId> subset;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
    ++result.checked;
    subset.clear();
    for (int e = 0; e < edges; ++e) {
      if (mask >> e & 1u) subset.push_back(e);
    }
    if (a_count(g, subset).a_count < code.file_size) continue;
    if (rank_of_edges(code, subset) != target) {
      result.ok = false;
      result.witness.assign(subset.begin(), subset.end());
      return result;
    }
  }
  return result;
}

}  // namespace gfr::detail
