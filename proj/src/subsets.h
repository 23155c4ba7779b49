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

#ifndef GFR_SRC_SUBSETS_H_
#define GFR_SRC_SUBSETS_H_

#include <cstdint>
#include <vector>

#include "gfr/galois.h"
#include "gfr/gfr_code.h"

namespace gfr::detail {

std::uint64_t binomial(int n, int k);

// The index-th k-subset of {first, ..., first+n-1} in lexicographic order.
std::vector<int> unrank_combination(int n, int k, std::uint64_t index,
                                    int first);

// Lexicographic successor in place; false after the last subset.
bool next_combination(std::vector<int>& combo, int n, int first);

// Rank of the rows of `code` selected by `edge_ids`.
std::size_t rank_of_edges(const GfrCode& code,
                          const std::vector<EdgeId>& edge_ids);

// Tally slot per edge: the incomplete-node index it touches, or -1.
std::vector<int> edge_slots(const RepairGraph& graph);

// a.count of the edges selected by `mask`.
int a_count_of_mask(std::uint64_t mask, const std::vector<int>& slots, int d);

}  // namespace gfr::detail

#endif  // GFR_SRC_SUBSETS_H_
