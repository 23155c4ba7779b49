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

#include "subsets.h"

#include <algorithm>
#include <bit>

namespace gfr::detail {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::vector<int> unrank_combination(int n, int k, std::uint64_t index,
                                    int first) {
  std::vector<int> combo;
  combo.reserve(k);
  int start = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = start;; ++v) {
      const std::uint64_t count = binomial(n - v - 1, k - i - 1);
      if (index < count) {
        combo.push_back(first + v);
        start = v + 1;
        break;
      }
      index -= count;
    }
  }
  return combo;
}

bool next_combination(std::vector<int>& combo, int n, int first) {
  const int k = static_cast<int>(combo.size());
  for (int i = k - 1; i >= 0; --i) {
    const int limit = first + n - k + i;
    if (combo[i] < limit) {
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::size_t rank_of_edges(const GfrCode& code,
                          const std::vector<EdgeId>& edge_ids) {
  CoeffMatrix mat(edge_ids.size(), code.rows.cols());
  for (std::size_t i = 0; i < edge_ids.size(); ++i) {
    const auto src = code.rows.row(edge_ids[i]);
    std::copy(src.begin(), src.end(), mat.row(i).begin());
  }
  return rank(code.field, std::move(mat));
}

std::vector<int> edge_slots(const RepairGraph& graph) {
  std::vector<int> slots;
  slots.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) {
    const int mu = graph.incomplete_index(e.u);
    slots.push_back(mu >= 0 ? mu : graph.incomplete_index(e.v));
  }
  return slots;
}

int a_count_of_mask(std::uint64_t mask, const std::vector<int>& slots, int d) {
  // Slots index incomplete nodes, each owning at least one of the <= 64 edges.
  int per_node[64] = {};
  int total = 0;
  while (mask != 0) {
    const int e = std::countr_zero(mask);
    mask &= mask - 1;
    const int slot = slots[e];
    if (slot < 0) {
      ++total;
    } else if (per_node[slot] < d) {
      ++per_node[slot];
      ++total;
    }
  }
  return total;
}

}  // namespace gfr::detail
