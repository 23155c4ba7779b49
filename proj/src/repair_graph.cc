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

#include "gfr/repair_graph.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "gfr/errors.h"

namespace gfr {
namespace {

void check_node(const RepairGraph& g, NodeId node) {
  if (!g.contains(node)) {
    throw ValidationError("node " + std::to_string(node) + " outside [" +
                          std::to_string(g.first_node()) + ", " +
                          std::to_string(g.last_node()) + "]");
  }
}

}  // namespace

const FamilyPartition& RepairGraph::group_of(NodeId node) const {
  check_node(*this, node);
  return groups_[group_index_[node - first_node_]];
}

const std::vector<EdgeId>& RepairGraph::stored_at(NodeId node) const {
  check_node(*this, node);
  return stored_[node - first_node_];
}

const std::vector<EdgeId>& RepairGraph::incident_to(NodeId node) const {
  check_node(*this, node);
  return incident_[node - first_node_];
}

bool RepairGraph::is_unhelping(NodeId node) const {
  const FamilyPartition& g = group_of(node);
  return g.label(node) == -g.c();
}

int RepairGraph::incomplete_index(NodeId node) const {
  check_node(*this, node);
  return incomplete_index_[node - first_node_];
}

void RepairGraph::index_nodes() {
  const int count = n();
  stored_.assign(count, {});
  incident_.assign(count, {});
  for (const Edge& e : edges_) {
    incident_[e.u - first_node_].push_back(e.id);
    incident_[e.v - first_node_].push_back(e.id);
    if (e.kind == EdgeKind::solid) {
      stored_[e.u - first_node_].push_back(e.id);
    }
    stored_[e.v - first_node_].push_back(e.id);
  }
  for (auto& ids : stored_) std::sort(ids.begin(), ids.end());
  for (auto& ids : incident_) std::sort(ids.begin(), ids.end());

  incomplete_nodes_.clear();
  incomplete_index_.assign(count, -1);
  for (NodeId v = first_node_; v <= last_node_; ++v) {
    if (is_incomplete(v)) {
      incomplete_index_[v - first_node_] =
          static_cast<int>(incomplete_nodes_.size());
      incomplete_nodes_.push_back(v);
    }
  }
}

RepairGraph build_repair_graph(const FamilyPartition& partition) {
  RepairGraph g;
  g.first_node_ = partition.first_node();
  g.last_node_ = partition.last_node();
  g.d_ = partition.d();
  g.groups_ = {partition};
  g.group_index_.assign(partition.n(), 0);

  const int c = partition.c();
  const NodeId lo = partition.first_node();
  const NodeId hi = partition.last_node();
  auto add = [&](NodeId u, NodeId v, EdgeKind kind, int cls) {
    g.edges_.push_back(
        {static_cast<EdgeId>(g.edges_.size()), u, v, kind, cls});
  };

  for (NodeId i = lo; i <= hi; ++i) {
    for (NodeId j = i + 1; j <= hi; ++j) {
      const int fi = std::abs(partition.label(i));
      const int fj = std::abs(partition.label(j));
      if (fi >= 1 && fi < fj && fj <= c) add(i, j, EdgeKind::solid, 1);
    }
  }
  for (NodeId i = lo; i <= hi; ++i) {
    for (NodeId j = i + 1; j <= hi; ++j) {
      const FamilyLabel fi = partition.label(i);
      if (fi >= 1 && fi <= c && partition.label(j) == 0) {
        add(i, j, EdgeKind::solid, 2);
      }
    }
  }
  g.solid_count_ = static_cast<int>(g.edges_.size());
  for (NodeId u : partition.incomplete()) {
    for (NodeId w : partition.unhelping()) add(u, w, EdgeKind::dashed, 3);
  }
  g.index_nodes();
  return g;
}

RepairGraph combine_groups(std::span<const RepairGraph> parts) {
  if (parts.empty()) throw ValidationError("no groups to combine");
  RepairGraph g;
  g.first_node_ = parts.front().first_node();
  g.d_ = parts.front().d();
  NodeId expected = g.first_node_;
  for (const RepairGraph& part : parts) {
    if (part.first_node() != expected || part.d() != g.d_) {
      throw ValidationError("groups must cover adjacent node ranges with equal d");
    }
    expected = part.last_node() + 1;
    for (const FamilyPartition& fp : part.groups()) {
      const int index = static_cast<int>(g.groups_.size());
      g.groups_.push_back(fp);
      g.group_index_.insert(g.group_index_.end(), fp.n(), index);
    }
  }
  g.last_node_ = expected - 1;

  // Solid edges of every part first, then dashed, so solid ids stay dense.
  for (EdgeKind kind : {EdgeKind::solid, EdgeKind::dashed}) {
    for (const RepairGraph& part : parts) {
      for (Edge e : part.edges()) {
        if (e.kind != kind) continue;
        e.id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back(e);
      }
    }
    if (kind == EdgeKind::solid) g.solid_count_ = static_cast<int>(g.edges_.size());
  }
  g.index_nodes();
  return g;
}

std::vector<RepairGraph> build_group_graphs(const GroupPlan& plan, int d) {
  std::vector<RepairGraph> out;
  auto add_group = [&](const std::vector<NodeId>& nodes) {
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      if (nodes[i] != nodes[i - 1] + 1) {
        throw ValidationError("group node ids must be contiguous");
      }
    }
    out.push_back(build_repair_graph(partition_families(
        static_cast<int>(nodes.size()), d, nodes.front())));
  };
  for (const auto& group : plan.regular_groups) add_group(group);
  if (!plan.remaining_group.empty()) add_group(plan.remaining_group);
  return out;
}

RepairGraph build_family_plus_graph(const GroupPlan& plan, int d) {
  const auto parts = build_group_graphs(plan, d);
  return combine_groups(parts);
}

std::vector<EdgeId> incident_edges(const RepairGraph& graph,
                                   std::span<const NodeId> nodes) {
  std::vector<EdgeId> out;
  for (NodeId v : nodes) {
    const auto& ids = graph.incident_to(v);
    out.insert(out.end(), ids.begin(), ids.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string export_dot(const RepairGraph& graph, const DotStyle& style) {
  const std::string solid = style.solid.empty() ? "solid" : style.solid;
  const std::string dashed = style.dashed.empty() ? "dashed" : style.dashed;
  std::ostringstream out;
  out << "graph gfr {\n";
  out << "  node [shape=circle];\n";
  for (NodeId v = graph.first_node(); v <= graph.last_node(); ++v) {
    out << "  " << v << " [label=\"" << v << "\", family=\"" << graph.label(v)
        << "\"];\n";
  }
  for (const Edge& e : graph.edges()) {
    out << "  " << e.u << " -- " << e.v << " [style="
        << (e.kind == EdgeKind::solid ? solid : dashed)
        << ", ij_class=" << e.ij_class << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gfr
