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

#include "gfr/serialize.h"

#include <charconv>
#include <cstdio>

#include "gfr/errors.h"

namespace gfr {
namespace {

const char* kind_name(EdgeKind kind) {
  return kind == EdgeKind::solid ? "solid" : "dashed";
}

EdgeKind parse_kind(const std::string& text) {
  if (text == "solid") return EdgeKind::solid;
  if (text == "dashed") return EdgeKind::dashed;
  throw FormatError("unknown edge kind '" + text + "'");
}

Json edge_json(const Edge& e) {
  return Json{{"id", e.id},
              {"u", e.u},
              {"v", e.v},
              {"kind", kind_name(e.kind)},
              {"ij_class", e.ij_class}};
}

Edge edge_from_json(const Json& j) {
  Edge e;
  e.id = j.value("id", 0);
  e.u = j.at("u").get<int>();
  e.v = j.at("v").get<int>();
  e.kind = parse_kind(j.at("kind").get<std::string>());
  e.ij_class = j.at("ij_class").get<int>();
  return e;
}

// Runs `fn`, turning library-level parse failures into FormatError.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const ValidationError& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const FieldSpec& field) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", field.poly());
  return Json{{"m", field.m()}, {"poly", buf}};
}

FieldSpec field_from_json(const Json& j) {
  return guarded("field", [&] {
    const int m = j.at("m").get<int>();
    std::string text = j.at("poly").get<std::string>();
    if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) text = text.substr(2);
    std::uint32_t poly = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, poly, 16);
    if (text.empty() || ec != std::errc() || ptr != end) {
      throw FormatError("bad polynomial '" + text + "'");
    }
    return FieldSpec(m, poly);
  });
}

Json to_json(const FamilyPartition& partition) {
  Json families = Json::object();
  Json helpers = Json::object();
  for (FamilyLabel label : partition.labels()) {
    families[std::to_string(label)] = partition.nodes(label);
  }
  for (NodeId v = partition.first_node(); v <= partition.last_node(); ++v) {
    helpers[std::to_string(v)] = partition.helpers(v);
  }
  return Json{{"n", partition.n()},
              {"d", partition.d()},
              {"c", partition.c()},
              {"first_node", partition.first_node()},
              {"families", families},
              {"helpers", helpers}};
}

Json to_json(const GroupPlan& plan) {
  return Json{{"regular_groups", plan.regular_groups},
              {"remaining_group", plan.remaining_group}};
}

GroupPlan plan_from_json(const Json& j) {
  return guarded("group plan", [&] {
    GroupPlan plan;
    plan.regular_groups =
        j.at("regular_groups").get<std::vector<std::vector<NodeId>>>();
    plan.remaining_group = j.at("remaining_group").get<std::vector<NodeId>>();
    return plan;
  });
}

Json to_json(const RepairGraph& graph) {
  Json groups = Json::array();
  for (const FamilyPartition& p : graph.groups()) {
    groups.push_back({{"first_node", p.first_node()}, {"n", p.n()}});
  }
  Json edges = Json::array();
  for (const Edge& e : graph.edges()) {
    Json ej = edge_json(e);
    ej.erase("id");
    edges.push_back(std::move(ej));
  }
  return Json{{"n", graph.n()},
              {"d", graph.d()},
              {"groups", groups},
              {"edges", edges}};
}

RepairGraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    std::vector<RepairGraph> parts;
    if (j.contains("groups")) {
      for (const Json& g : j.at("groups")) {
        parts.push_back(build_repair_graph(partition_families(
            g.at("n").get<int>(), d, g.at("first_node").get<int>())));
      }
    } else {
      parts.push_back(build_repair_graph(partition_families(n, d)));
    }
    RepairGraph graph = combine_groups(parts);
    if (graph.n() != n || graph.first_node() != 1) {
      throw FormatError("groups do not cover nodes 1.." + std::to_string(n));
    }
    const Json& edges = j.at("edges");
    if (edges.size() != graph.edges().size()) {
      throw FormatError("edge count does not match the rebuilt graph");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Edge e = edge_from_json(edges[i]);
      e.id = static_cast<EdgeId>(i);
      if (!(e == graph.edges()[i])) {
        throw FormatError("edge " + std::to_string(i) +
                          " does not match the rebuilt graph");
      }
    }
    return graph;
  });
}

Json to_json(const GfrCode& code) {
  Json edges = Json::array();
  for (const Edge& e : code.graph.edges()) {
    Json ej = edge_json(e);
    Json coeffs = Json::array();
    for (FieldElement x : code.rows.row(e.id)) coeffs.push_back(code.field.to_hex(x));
    ej["coeffs"] = std::move(coeffs);
    if (e.kind == EdgeKind::dashed) {
      Json mix = Json::array();
      for (FieldElement x : code.mixes[e.id]) mix.push_back(code.field.to_hex(x));
      ej["mix"] = std::move(mix);
    }
    edges.push_back(std::move(ej));
  }
  return Json{{"params",
               {{"n", code.params.n}, {"k", code.params.k}, {"d", code.params.d}}},
              {"scheme", to_string(code.scheme)},
              {"field", to_json(code.field)},
              {"M", code.file_size},
              {"seed", code.seed},
              {"attempts", code.attempts},
              {"edges", edges}};
}

GfrCode code_from_json(const Json& j) {
  return guarded("code", [&] {
    GfrCode code;
    const Json& p = j.at("params");
    code.params = {p.at("n").get<int>(), p.at("k").get<int>(),
                   p.at("d").get<int>()};
    code.scheme = parse_scheme(j.at("scheme").get<std::string>());
    code.field = field_from_json(j.at("field"));
    code.file_size = j.at("M").get<PacketCount>();
    code.seed = j.at("seed").get<std::uint64_t>();
    code.attempts = j.value("attempts", 1);
    code.graph = build_scheme_graph(code.params, code.scheme);
    if (code.file_size != scheme_file_size(code.params, code.scheme)) {
      throw FormatError("M=" + std::to_string(code.file_size) +
                        " does not match the scheme's file size");
    }

    const Json& edges = j.at("edges");
    const auto& expected = code.graph.edges();
    if (edges.size() != expected.size()) {
      throw FormatError("edge count does not match the scheme graph");
    }
    const auto cols = static_cast<std::size_t>(code.file_size);
    code.rows = CoeffMatrix(expected.size(), cols);
    code.mixes.assign(expected.size(), {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Json& ej = edges[i];
      Edge e = edge_from_json(ej);
      e.id = static_cast<EdgeId>(i);
      if (!(e == expected[i])) {
        throw FormatError("edge " + std::to_string(i) +
                          " does not match the scheme graph");
      }
      const Json& coeffs = ej.at("coeffs");
      if (coeffs.size() != cols) {
        throw FormatError("edge " + std::to_string(i) + " has " +
                          std::to_string(coeffs.size()) + " coefficients, want " +
                          std::to_string(cols));
      }
      for (std::size_t c = 0; c < cols; ++c) {
        code.rows.at(i, c) = code.field.from_hex(coeffs[c].get<std::string>());
      }
      if (e.kind == EdgeKind::dashed) {
        for (const Json& x : ej.at("mix")) {
          code.mixes[i].push_back(code.field.from_hex(x.get<std::string>()));
        }
      }
    }
    return code;
  });
}

Json to_json(const RepairReport& report) {
  return Json{{"failed_node", report.failed_node},
              {"helpers", report.helpers},
              {"transferred_packets", report.transferred_packets},
              {"computed_packets", report.computed_packets},
              {"exact", report.exact}};
}

Json to_json(const TraceReport& report) {
  Json per_node = Json::object();
  for (const auto& [node, count] : report.repairs_per_node) {
    per_node[std::to_string(node)] = count;
  }
  return Json{{"repairs", report.repairs},
              {"repairs_per_node", per_node},
              {"bandwidth_packets", report.bandwidth_packets},
              {"transferred_packets", report.transferred_packets},
              {"computed_packets", report.computed_packets},
              {"min_repair_bandwidth", report.min_repair_bandwidth},
              {"max_repair_bandwidth", report.max_repair_bandwidth},
              {"all_exact", report.all_exact},
              {"computing_nodes", report.computing_nodes},
              {"reconstruction",
               {{"checked", report.reconstructions_checked},
                {"failed", report.reconstructions_failed},
                {"failed_sets", report.failed_sets}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace gfr
