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

// Inner code: the packet-placement graph. Each edge is one coded packet.
// Solid edges join nodes of different families and are stored at both
// endpoints; dashed edges join an incomplete-family node u to an unhelping
// node w and are stored at w only.
//
// A graph may hold several disjoint groups (family-plus); each group is an
// independent FHS graph over a contiguous range of global node ids.

#ifndef GFR_REPAIR_GRAPH_H_
#define GFR_REPAIR_GRAPH_H_

#include <span>
#include <string>
#include <vector>

#include "gfr/family.h"

namespace gfr {

using EdgeId = int;

enum class EdgeKind { solid, dashed };

struct Edge {
  EdgeId id = 0;
  NodeId u = 0;
  NodeId v = 0;
  EdgeKind kind = EdgeKind::solid;
  // 1: between complete families; 2: complete family to incomplete family;
  // 3: incomplete family (u) to unhelping node (v), dashed.
  int ij_class = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class RepairGraph {
 public:
  NodeId first_node() const { return first_node_; }
  NodeId last_node() const { return last_node_; }
  int n() const { return last_node_ - first_node_ + 1; }
  int d() const { return d_; }
  bool contains(NodeId node) const {
    return node >= first_node_ && node <= last_node_;
  }

  const std::vector<FamilyPartition>& groups() const { return groups_; }
  const FamilyPartition& group_of(NodeId node) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  int solid_count() const { return solid_count_; }
  int dashed_count() const {
    return static_cast<int>(edges_.size()) - solid_count_;
  }

  // Edge ids whose packet the node stores, ascending; always d of them.
  const std::vector<EdgeId>& stored_at(NodeId node) const;
  // Every edge touching the node, ascending.
  const std::vector<EdgeId>& incident_to(NodeId node) const;

  FamilyLabel label(NodeId node) const { return group_of(node).label(node); }
  const std::vector<NodeId>& helpers(NodeId node) const {
    return group_of(node).helpers(node);
  }
  bool is_incomplete(NodeId node) const { return label(node) == 0; }
  bool is_unhelping(NodeId node) const;

  // Incomplete-family nodes over all groups, ascending. The m-th entry owns
  // tally slot a_m.
  const std::vector<NodeId>& incomplete_nodes() const {
    return incomplete_nodes_;
  }
  // Position in incomplete_nodes(), or -1.
  int incomplete_index(NodeId node) const;

 private:
  friend RepairGraph build_repair_graph(const FamilyPartition& partition);
  friend RepairGraph combine_groups(std::span<const RepairGraph> parts);

  void index_nodes();

  NodeId first_node_ = 1;
  NodeId last_node_ = 0;
  int d_ = 0;
  int solid_count_ = 0;
  std::vector<FamilyPartition> groups_;
  std::vector<int> group_index_;                // by node - first_node_
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> stored_;     // by node - first_node_
  std::vector<std::vector<EdgeId>> incident_;   // by node - first_node_
  std::vector<NodeId> incomplete_nodes_;
  std::vector<int> incomplete_index_;           // by node - first_node_
};

// Edge order: class 1, then 2, then 3; lexicographic by (u, v) within a class.
RepairGraph build_repair_graph(const FamilyPartition& partition);

// Concatenates graphs over disjoint, adjacent node ranges. Edge ids are
// renumbered in part order.
RepairGraph combine_groups(std::span<const RepairGraph> parts);

// One graph per group of the plan, with global node ids.
std::vector<RepairGraph> build_group_graphs(const GroupPlan& plan, int d);

// All groups of the plan combined into a single graph.
RepairGraph build_family_plus_graph(const GroupPlan& plan, int d);

// Edges with at least one endpoint in `nodes`, ascending.
std::vector<EdgeId> incident_edges(const RepairGraph& graph,
                                   std::span<const NodeId> nodes);

struct DotStyle {
  std::string solid;   // empty means "solid"
  std::string dashed;  // empty means "dashed"
};

// Graphviz text, one vertex line per node and one line per edge.
std::string export_dot(const RepairGraph& graph, const DotStyle& style = {});

}  // namespace gfr

#endif  // GFR_REPAIR_GRAPH_H_
