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

#include "gfr/family.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "gfr/errors.h"

namespace gfr {

void validate(const SystemParams& p) {
  if (p.n < 2 || p.k < 1 || p.k > p.n - 1 || p.d < 1 || p.d > p.n - 1) {
    throw ValidationError("parameters (n,k,d)=(" + std::to_string(p.n) + "," +
                          std::to_string(p.k) + "," + std::to_string(p.d) +
                          ") violate 2<=n, 1<=k<=n-1, 1<=d<=n-1");
  }
}

FamilyPartition partition_families(int n, int d, NodeId first_node) {
  if (n < 2 || d < 1 || d > n - 1) {
    throw ValidationError("partition needs 2<=n and 1<=d<=n-1, got (n,d)=(" +
                          std::to_string(n) + "," + std::to_string(d) + ")");
  }
  FamilyPartition p;
  p.n_ = n;
  p.d_ = d;
  p.first_node_ = first_node;
  const int size = n - d;
  const int c = n / size;
  const int rem = n % size;
  p.c_ = c;

  p.labels_.resize(n);
  p.by_label_.resize(2 * c + 1);
  for (int idx = 0; idx < n; ++idx) {
    FamilyLabel label = 0;
    if (idx < c * size) {
      label = idx / size + 1;
      if (label == c && rem > 0 && idx - (c - 1) * size >= rem) label = -c;
    }
    p.labels_[idx] = label;
    p.by_label_[label + c].push_back(first_node + idx);
  }

  p.helpers_.resize(n);
  for (int idx = 0; idx < n; ++idx) {
    auto& h = p.helpers_[idx];
    const FamilyLabel own = p.labels_[idx];
    if (own == 0) {
      for (int j = 0; j < d; ++j) h.push_back(first_node + j);
    } else {
      for (int j = 0; j < n; ++j) {
        if (std::abs(p.labels_[j]) != std::abs(own)) h.push_back(first_node + j);
      }
    }
  }
  return p;
}

FamilyPartition partition_families(const SystemParams& params) {
  validate(params);
  return partition_families(params.n, params.d);
}

FamilyLabel FamilyPartition::label(NodeId node) const {
  if (!contains(node)) {
    throw ValidationError("node " + std::to_string(node) +
                          " outside partition");
  }
  return labels_[node - first_node_];
}

const std::vector<NodeId>& FamilyPartition::nodes(FamilyLabel label) const {
  static const std::vector<NodeId> kEmpty;
  if (label < -c_ || label > c_) return kEmpty;
  return by_label_[label + c_];
}

std::vector<FamilyLabel> FamilyPartition::labels() const {
  std::vector<FamilyLabel> out;
  for (FamilyLabel x = 1; x <= c_; ++x) out.push_back(x);
  if (!unhelping().empty()) out.push_back(-c_);
  if (!incomplete().empty()) out.push_back(0);
  return out;
}

const std::vector<NodeId>& FamilyPartition::helpers(NodeId node) const {
  if (!contains(node)) {
    throw ValidationError("node " + std::to_string(node) +
                          " outside partition");
  }
  return helpers_[node - first_node_];
}

FamilyIndexPermutation family_index_vector(int n, int d) {
  const FamilyPartition p = partition_families(n, d);
  FamilyIndexPermutation out;
  for (NodeId v = 1; v <= n; ++v) out.entries.push_back(p.label(v));
  return out;
}

FamilyIndexPermutation family_index_vector(const SystemParams& params) {
  validate(params);
  return family_index_vector(params.n, params.d);
}

FamilyIndexPermutation rfip(int n, int d) {
  const auto fiv = family_index_vector(n, d);
  const int rows = n - d;
  const int cols = (n + rows - 1) / rows;
  FamilyIndexPermutation out;
  for (int r = 0; r < rows; ++r) {
    for (int col = 0; col < cols; ++col) {
      const int idx = col * rows + r;
      if (idx < n) out.entries.push_back(fiv.entries[idx]);
    }
  }
  return out;
}

FamilyIndexPermutation rfip(const SystemParams& params) {
  validate(params);
  return rfip(params.n, params.d);
}

int y_count(const FamilyIndexPermutation& pi, int i) {
  const int size = static_cast<int>(pi.entries.size());
  if (i < 1 || i > size) {
    throw ValidationError("index " + std::to_string(i) + " outside [1, " +
                          std::to_string(size) + "]");
  }
  const FamilyLabel own = pi.entries[i - 1];
  int count = 0;
  for (int j = 0; j < i - 1; ++j) {
    const FamilyLabel other = pi.entries[j];
    if (own == 0 ? other > 0 : std::abs(other) != std::abs(own)) ++count;
  }
  return count;
}

PacketCount y_sum(const FamilyIndexPermutation& pi, int k, int d) {
  PacketCount total = 0;
  for (int i = 1; i <= k; ++i) total += d - y_count(pi, i);
  return total;
}

int z_count(std::span<const NodeId> r, int i, const FamilyPartition& partition) {
  if (i < 1 || i > static_cast<int>(r.size())) {
    throw ValidationError("index " + std::to_string(i) + " outside tuple");
  }
  const auto& helpers = partition.helpers(r[i - 1]);
  int count = 0;
  for (NodeId a : helpers) {
    if (std::find(r.begin(), r.begin() + (i - 1), a) != r.begin() + (i - 1)) {
      ++count;
    }
  }
  return count;
}

PacketCount mbr_file_size_fhs(const SystemParams& params) {
  validate(params);
  return y_sum(rfip(params.n, params.d), params.k, params.d);
}

PacketCount mbr_file_size_bhs(const SystemParams& params) {
  validate(params);
  PacketCount total = 0;
  for (int i = 0; i < params.k; ++i) total += std::max(params.d - i, 0);
  return total;
}

bool helper_selection_helps(const SystemParams& params) {
  validate(params);
  const auto [n, k, d] = params;
  const int ceil_ratio = (n + (n - d) - 1) / (n - d);
  if (d == 1 && k == 3 && n % 2 == 1) return false;
  return k > ceil_ratio;
}

GroupPlan family_plus_partition(int n, int d) {
  if (n < 2 || d < 1 || d > n - 1) {
    throw ValidationError("family-plus plan needs 2<=n and 1<=d<=n-1");
  }
  const int span = 2 * d;
  const int regular = n % span == 0 ? n / span : std::max(n / span - 1, 0);
  GroupPlan plan;
  NodeId next = 1;
  for (int g = 0; g < regular; ++g) {
    auto& group = plan.regular_groups.emplace_back();
    for (int j = 0; j < span; ++j) group.push_back(next++);
  }
  while (next <= n) plan.remaining_group.push_back(next++);
  return plan;
}

GroupPlan family_plus_partition(const SystemParams& params) {
  validate(params);
  return family_plus_partition(params.n, params.d);
}

namespace {

// sum_{i=0}^{last} (d - i + floor(i/2)); zero when last < 0.
PacketCount plus_terms(int d, int last) {
  PacketCount total = 0;
  for (int i = 0; i <= last; ++i) total += d - i + i / 2;
  return total;
}

}  // namespace

PacketCount mbr_file_size_family_plus(const SystemParams& params) {
  validate(params);
  const auto [n, k, d] = params;
  const GroupPlan plan = family_plus_partition(n, d);
  // A lone remaining group is just the FHS graph. The closed form below
  // assumes a remaining group sized past 2d and overshoots the cut otherwise.
  if (plan.regular_groups.empty()) return mbr_file_size_fhs(params);
  const int span = 2 * d;
  const bool has_remaining = !plan.remaining_group.empty();
  const int n_l = static_cast<int>(plan.remaining_group.size());
  const int excess = std::max(k - n_l, 0);
  const int q = excess % span - 1;

  PacketCount total = 0;
  if (has_remaining) total += plus_terms(d, std::min(k, span - 1) - 1);
  total += static_cast<PacketCount>(d) * d * (excess / span);
  total += plus_terms(d, q);
  return total;
}

}  // namespace gfr
