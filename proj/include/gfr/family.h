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

// Family helper selection: node families, helper sets, family index
// vectors and the closed-form MBR file sizes (beta = 1, alpha = d).
//
// Node ids are 1-based. Family labels are 1..c for complete families, -c
// for the tail of family c that incomplete-family nodes never contact, and
// 0 for the incomplete family.

#ifndef GFR_FAMILY_H_
#define GFR_FAMILY_H_

#include <cstdint>
#include <span>
#include <vector>

namespace gfr {

using NodeId = int;
using FamilyLabel = int;
using PacketCount = std::int64_t;

struct SystemParams {
  int n = 0;
  int k = 0;
  int d = 0;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

// Throws ValidationError unless 2 <= n, 1 <= k <= n-1, 1 <= d <= n-1.
void validate(const SystemParams& params);

class FamilyPartition {
 public:
  int n() const { return n_; }
  int d() const { return d_; }
  // Number of complete families, floor(n / (n-d)).
  int c() const { return c_; }
  NodeId first_node() const { return first_node_; }
  NodeId last_node() const { return first_node_ + n_ - 1; }
  bool contains(NodeId node) const {
    return node >= first_node_ && node <= last_node();
  }

  FamilyLabel label(NodeId node) const;
  // Nodes carrying `label`, ascending. Empty for labels that are absent.
  const std::vector<NodeId>& nodes(FamilyLabel label) const;
  // Labels with at least one node, in the order 1..c, -c, 0.
  std::vector<FamilyLabel> labels() const;
  // Helper set D_i, ascending, always d nodes.
  const std::vector<NodeId>& helpers(NodeId node) const;

  const std::vector<NodeId>& incomplete() const { return nodes(0); }
  const std::vector<NodeId>& unhelping() const { return nodes(-c_); }

 private:
  friend FamilyPartition partition_families(int n, int d, NodeId first_node);

  int n_ = 0;
  int d_ = 0;
  int c_ = 0;
  NodeId first_node_ = 1;
  std::vector<FamilyLabel> labels_;            // by local index
  std::vector<std::vector<NodeId>> by_label_;  // index label + c
  std::vector<std::vector<NodeId>> helpers_;   // by local index
};

// Assigns nodes first_node .. first_node+n-1 in index order. Requires
// 2 <= n and 1 <= d <= n-1.
FamilyPartition partition_families(int n, int d, NodeId first_node = 1);
FamilyPartition partition_families(const SystemParams& params);

struct FamilyIndexPermutation {
  std::vector<FamilyLabel> entries;

  friend bool operator==(const FamilyIndexPermutation&,
                         const FamilyIndexPermutation&) = default;
};

FamilyIndexPermutation family_index_vector(const SystemParams& params);
FamilyIndexPermutation family_index_vector(int n, int d);

// Rotating family index permutation: the family index vector written
// column-by-column into an (n-d) x ceil(n/(n-d)) table and read row-by-row.
FamilyIndexPermutation rfip(const SystemParams& params);
FamilyIndexPermutation rfip(int n, int d);

// y_i for 1-based i.
int y_count(const FamilyIndexPermutation& pi, int i);

// sum_{i=1}^{k} (d - y_i(pi)).
PacketCount y_sum(const FamilyIndexPermutation& pi, int k, int d);

// |{a in D_{r_i} : a = r_j for some j < i}| for 1-based i.
int z_count(std::span<const NodeId> r, int i, const FamilyPartition& partition);

PacketCount mbr_file_size_fhs(const SystemParams& params);
PacketCount mbr_file_size_bhs(const SystemParams& params);
PacketCount mbr_file_size_family_plus(const SystemParams& params);

bool helper_selection_helps(const SystemParams& params);

struct GroupPlan {
  std::vector<std::vector<NodeId>> regular_groups;
  std::vector<NodeId> remaining_group;  // empty when n mod 2d = 0

  friend bool operator==(const GroupPlan&, const GroupPlan&) = default;
};

// Regular groups of 2d nodes take the lowest ids; the remaining group (if
// any) holds the last 2d + (n mod 2d) nodes, or all n nodes when fewer than
// two groups would fit.
GroupPlan family_plus_partition(const SystemParams& params);
GroupPlan family_plus_partition(int n, int d);

}  // namespace gfr

#endif  // GFR_FAMILY_H_
