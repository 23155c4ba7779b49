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

#include "gfr/gfr_code.h"

#include <algorithm>
#include <random>

#include "gfr/errors.h"

namespace gfr {

std::string to_string(Scheme scheme) {
  return scheme == Scheme::fhs ? "fhs" : "family-plus";
}

Scheme parse_scheme(const std::string& text) {
  if (text == "fhs") return Scheme::fhs;
  if (text == "family-plus") return Scheme::family_plus;
  throw ValidationError("unknown scheme '" + text + "'");
}

RepairGraph build_scheme_graph(const SystemParams& params, Scheme scheme) {
  validate(params);
  if (scheme == Scheme::fhs) {
    return build_repair_graph(partition_families(params));
  }
  return build_family_plus_graph(family_plus_partition(params), params.d);
}

PacketCount scheme_file_size(const SystemParams& params, Scheme scheme) {
  return scheme == Scheme::fhs ? mbr_file_size_fhs(params)
                               : mbr_file_size_family_plus(params);
}

EdgeSubsetTally a_count(const RepairGraph& graph,
                        std::span<const EdgeId> subset) {
  EdgeSubsetTally tally;
  tally.a.assign(graph.incomplete_nodes().size(), 0);
  for (EdgeId id : subset) {
    const Edge& e = graph.edge(id);
    const int mu = graph.incomplete_index(e.u);
    const int mv = graph.incomplete_index(e.v);
    if (mu < 0 && mv < 0) {
      ++tally.a0;
      continue;
    }
    // No edge joins two incomplete-family nodes.
    ++tally.a[mu >= 0 ? mu : mv];
  }
  tally.a_count = tally.a0;
  for (int am : tally.a) tally.a_count += std::min(am, graph.d());
  return tally;
}

CountTrace count_subroutine(const RepairGraph& graph,
                            std::span<const NodeId> nodes, int k) {
  if (static_cast<int>(nodes.size()) != k) {
    throw ValidationError("COUNT needs exactly k=" + std::to_string(k) +
                          " nodes, got " + std::to_string(nodes.size()));
  }
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("COUNT node set has duplicates");
  }

  CountTrace trace;
  for (NodeId v : nodes) {
    if (!graph.is_unhelping(v)) trace.order.push_back(v);
  }
  for (NodeId v : nodes) {
    if (graph.is_unhelping(v)) trace.order.push_back(v);
  }

  const auto& edges = graph.edges();
  std::vector<char> alive(edges.size(), 1);
  std::vector<int> degree(graph.n());
  for (NodeId v = graph.first_node(); v <= graph.last_node(); ++v) {
    degree[v - graph.first_node()] =
        static_cast<int>(graph.incident_to(v).size());
  }

  for (NodeId v : trace.order) {
    int x = 0;
    const bool unhelping = graph.is_unhelping(v);
    for (EdgeId id : graph.incident_to(v)) {
      if (!alive[id]) continue;
      const Edge& e = edges[id];
      if (e.kind == EdgeKind::solid) {
        ++x;
      } else if (unhelping) {
        const int threshold =
            static_cast<int>(graph.group_of(e.u).unhelping().size());
        if (degree[e.u - graph.first_node()] > threshold) ++x;
      }
    }
    for (EdgeId id : graph.incident_to(v)) {
      if (!alive[id]) continue;
      alive[id] = 0;
      --degree[edges[id].u - graph.first_node()];
      --degree[edges[id].v - graph.first_node()];
    }
    trace.increments.push_back(x);
    trace.total += x;
  }
  return trace;
}

GfrCode phase1_construct(const RepairGraph& graph, PacketCount file_size,
                         const FieldSpec& field, std::uint64_t seed) {
  if (file_size < 1) throw ValidationError("file size must be positive");
  GfrCode code;
  code.params = {graph.n(), 0, graph.d()};
  code.graph = graph;
  code.field = field;
  code.file_size = file_size;
  code.seed = seed;

  const auto& edges = graph.edges();
  const auto cols = static_cast<std::size_t>(file_size);
  code.rows = CoeffMatrix(edges.size(), cols);
  code.mixes.assign(edges.size(), {});

  std::mt19937_64 rng(seed);
  for (const Edge& e : edges) {
    if (e.kind != EdgeKind::solid) continue;
    for (auto& x : code.rows.row(e.id)) x = field.random(rng);
  }
  for (const Edge& e : edges) {
    if (e.kind != EdgeKind::dashed) continue;
    const auto& sources = graph.stored_at(e.u);
    auto& mix = code.mixes[e.id];
    mix.reserve(sources.size());
    for (EdgeId src : sources) {
      const FieldElement w = field.random(rng);
      mix.push_back(w);
      field.axpy(code.rows.row(e.id), w, code.rows.row(src));
    }
  }
  return code;
}

}  // namespace gfr
