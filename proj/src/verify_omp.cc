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

#include <atomic>

#include "gfr/verify.h"
#include "subsets.h"

namespace gfr::detail {
namespace {

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t current = target.load(std::memory_order_relaxed);
  while (value < current &&
         !target.compare_exchange_weak(current, value,
                                       std::memory_order_relaxed)) {
  }
}

}  // namespace

VerifyResult verify_reconstruction_parallel(const GfrCode& code, int k) {
  const RepairGraph& g = code.graph;
  const auto target = static_cast<std::size_t>(code.file_size);
  const std::uint64_t total = binomial(g.n(), k);
  std::atomic<std::uint64_t> first_bad{total};

  const auto count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long idx = 0; idx < count; ++idx) {
    const auto index = static_cast<std::uint64_t>(idx);
    if (index > first_bad.load(std::memory_order_relaxed)) continue;
    const auto nodes = unrank_combination(g.n(), k, index, g.first_node());
    if (rank_of_edges(code, incident_edges(g, nodes)) != target) {
      atomic_min(first_bad, index);
    }
  }

  VerifyResult result;
  const std::uint64_t bad = first_bad.load();
  if (bad == total) {
    result.checked = total;
  } else {
    result.ok = false;
    result.checked = bad + 1;
    result.witness = unrank_combination(g.n(), k, bad, g.first_node());
  }
  return result;
}

VerifyResult verify_property2_parallel(const GfrCode& code) {
  const RepairGraph& g = code.graph;
  const int edges = static_cast<int>(g.edges().size());
  const auto target = static_cast<std::size_t>(code.file_size);
  const std::uint64_t total = std::uint64_t{1} << edges;
  const std::vector<int> slots = edge_slots(g);
  std::atomic<std::uint64_t> first_bad{total};

  const auto count = static_cast<long long>(total);
#pragma omp parallel
  {
    std::vector<EdgeId> subset;
#pragma omp for schedule(dynamic, 256)
    for (long long idx = 0; idx < count; ++idx) {
      const auto mask = static_cast<std::uint64_t>(idx);
      if (mask > first_bad.load(std::memory_order_relaxed)) continue;
      if (a_count_of_mask(mask, slots, g.d()) < code.file_size) continue;
      subset.clear();
      for (int e = 0; e < edges; ++e) {
        if (mask >> e & 1u) subset.push_back(e);
      }
      if (rank_of_edges(code, subset) != target) atomic_min(first_bad, mask);
    }
  }

  VerifyResult result;
  const std::uint64_t bad = first_bad.load();
  if (bad == total) {
    result.checked = total;
  } else {
    result.ok = false;
    result.checked = bad + 1;
    for (int e = 0; e < edges; ++e) {
      if (bad >> e & 1u) result.witness.push_back(e);
    }
  }
  return result;
}

}  // namespace gfr::detail
