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

#include "gfr/storage_sim.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "gfr/errors.h"
#include "subsets.h"

namespace gfr {
namespace {

Packet encode_row(const FieldSpec& field, std::span<const FieldElement> row,
                  const std::vector<Packet>& file, std::size_t length) {
  Packet out(length);
  for (std::size_t j = 0; j < row.size(); ++j) {
    field.axpy(out, row[j], file[j]);
  }
  return out;
}

const StoredPacket& find_packet(const std::vector<StoredPacket>& contents,
                                EdgeId edge, NodeId holder) {
  for (const StoredPacket& p : contents) {
    if (p.edge == edge) return p;
  }
  throw UnsupportedError("node " + std::to_string(holder) +
                         " does not hold packet " + std::to_string(edge));
}

}  // namespace

SystemState::SystemState(std::shared_ptr<const GfrCode> code,
                         std::vector<Packet> file)
    : code_(std::move(code)), file_(std::move(file)) {
  if (!code_) throw ValidationError("null code");
  if (static_cast<PacketCount>(file_.size()) != code_->file_size) {
    throw ValidationError("file has " + std::to_string(file_.size()) +
                          " packets, code protects " +
                          std::to_string(code_->file_size));
  }
  packet_length_ = file_.front().size();
  if (packet_length_ == 0) throw ValidationError("packets must be non-empty");
  for (const Packet& p : file_) {
    if (p.size() != packet_length_) {
      throw ValidationError("file packets differ in length");
    }
  }

  const RepairGraph& g = code_->graph;
  contents_.resize(g.n());
  failed_.assign(g.n(), 0);
  for (NodeId v = g.first_node(); v <= g.last_node(); ++v) {
    auto& slot = contents_[v - g.first_node()];
    for (EdgeId e : g.stored_at(v)) {
      slot.push_back(
          {e, encode_row(code_->field, code_->rows.row(e), file_, packet_length_)});
    }
  }
}

const std::vector<StoredPacket>& SystemState::contents(NodeId node) const {
  if (!code_->graph.contains(node)) {
    throw ValidationError("node " + std::to_string(node) + " out of range");
  }
  return contents_[node - code_->graph.first_node()];
}

std::vector<StoredPacket>& SystemState::mutable_contents(NodeId node) {
  if (!code_->graph.contains(node)) {
    throw ValidationError("node " + std::to_string(node) + " out of range");
  }
  return contents_[node - code_->graph.first_node()];
}

void SystemState::mark_failed(NodeId node) {
  mutable_contents(node).clear();
  failed_[node - code_->graph.first_node()] = 1;
}

bool SystemState::is_failed(NodeId node) const {
  contents(node);
  return failed_[node - code_->graph.first_node()] != 0;
}

void SystemState::clear_failed(NodeId node) {
  contents(node);
  failed_[node - code_->graph.first_node()] = 0;
}

bool SystemState::invariants_hold() const {
  const RepairGraph& g = code_->graph;
  for (NodeId v = g.first_node(); v <= g.last_node(); ++v) {
    if (is_failed(v)) continue;
    const auto& held = contents(v);
    if (static_cast<int>(held.size()) != g.d()) return false;
    for (const StoredPacket& p : held) {
      const Packet expected = encode_row(code_->field, code_->rows.row(p.edge),
                                         file_, packet_length_);
      if (p.payload != expected) return false;
      const Edge& e = g.edge(p.edge);
      if (e.kind != EdgeKind::solid) continue;
      const NodeId other = e.u == v ? e.v : e.u;
      if (is_failed(other)) continue;
      if (find_packet(contents(other), p.edge, other).payload != p.payload) {
        return false;
      }
    }
  }
  return true;
}

SystemState encode_file(std::shared_ptr<const GfrCode> code,
                        std::vector<Packet> file) {
  return SystemState(std::move(code), std::move(file));
}

std::vector<Packet> random_file(const GfrCode& code, std::size_t packet_length,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Packet> file(static_cast<std::size_t>(code.file_size),
                           Packet(packet_length));
  for (auto& packet : file) {
    for (auto& symbol : packet) symbol = code.field.random(rng);
  }
  return file;
}

RepairReport fail_and_repair(SystemState& state, NodeId node) {
  const GfrCode& code = state.code();
  const RepairGraph& g = code.graph;
  if (!g.contains(node)) {
    throw ValidationError("node " + std::to_string(node) + " out of range");
  }
  RepairReport report;
  report.failed_node = node;
  report.helpers = g.helpers(node);
  for (NodeId h : report.helpers) {
    if (state.is_failed(h)) {
      throw UnsupportedError("helper " + std::to_string(h) + " of node " +
                             std::to_string(node) +
                             " is down; only single failures are repaired");
    }
  }

  state.mark_failed(node);
  std::vector<StoredPacket> rebuilt;
  for (EdgeId id : g.stored_at(node)) {
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::solid) {
      const NodeId other = e.u == node ? e.v : e.u;
      rebuilt.push_back(find_packet(state.contents(other), id, other));
      ++report.transferred_packets;
      continue;
    }
    // Dashed (u, node): u combines its own d packets with the stored mix.
    const NodeId source = e.u;
    const auto& held = state.contents(source);
    const auto& sources = g.stored_at(source);
    const auto& mix = code.mixes.at(id);
    Packet payload(state.packet_length());
    for (std::size_t j = 0; j < sources.size(); ++j) {
      code.field.axpy(payload, mix[j],
                      find_packet(held, sources[j], source).payload);
    }
    rebuilt.push_back({id, std::move(payload)});
    ++report.computed_packets;
  }

  report.exact = true;
  for (const StoredPacket& p : rebuilt) {
    const Packet expected = encode_row(code.field, code.rows.row(p.edge),
                                       state.file(), state.packet_length());
    if (p.payload != expected) report.exact = false;
  }
  state.mutable_contents(node) = std::move(rebuilt);
  state.clear_failed(node);
  state.record(report);
  return report;
}

std::vector<Packet> reconstruct(const SystemState& state,
                                std::span<const NodeId> nodes) {
  const GfrCode& code = state.code();
  if (nodes.empty()) throw ValidationError("empty node set");
  if (code.params.k > 0 && static_cast<int>(nodes.size()) < code.params.k) {
    throw ValidationError("reconstruction needs at least k=" +
                          std::to_string(code.params.k) + " nodes");
  }
  std::set<EdgeId> seen;
  CoeffMatrix rows;
  CoeffMatrix payloads;
  for (NodeId v : nodes) {
    if (state.is_failed(v)) {
      throw ValidationError("node " + std::to_string(v) + " is down");
    }
    for (const StoredPacket& p : state.contents(v)) {
      if (!seen.insert(p.edge).second) continue;
      rows.append_row(code.rows.row(p.edge));
      payloads.append_row(p.payload);
    }
  }
  try {
    const CoeffMatrix x = solve(code.field, rows, payloads);
    std::vector<Packet> file(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      file[i].assign(x.row(i).begin(), x.row(i).end());
    }
    return file;
  } catch (const UnsolvableError& e) {
    throw ReconstructionError(std::string("packets do not determine the file: ") +
                              e.what());
  } catch (const InconsistentError& e) {
    throw ReconstructionError(std::string("stored packets are inconsistent: ") +
                              e.what());
  }
}

std::vector<NodeId> random_trace(const GfrCode& code, int failures,
                                 std::uint64_t seed) {
  if (failures < 0) throw ValidationError("failure count must be >= 0");
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::uint64_t>(code.graph.n());
  std::vector<NodeId> trace;
  trace.reserve(failures);
  for (int i = 0; i < failures; ++i) {
    trace.push_back(code.graph.first_node() + static_cast<NodeId>(rng() % n));
  }
  return trace;
}

TraceReport run_trace(SystemState& state, std::span<const NodeId> trace,
                      const TraceOptions& options) {
  const GfrCode& code = state.code();
  TraceReport report;
  std::set<NodeId> computing;
  for (NodeId node : trace) {
    const RepairReport r = fail_and_repair(state, node);
    const int bandwidth = r.transferred_packets + r.computed_packets;
    if (report.repairs == 0) {
      report.min_repair_bandwidth = report.max_repair_bandwidth = bandwidth;
    }
    report.min_repair_bandwidth = std::min(report.min_repair_bandwidth, bandwidth);
    report.max_repair_bandwidth = std::max(report.max_repair_bandwidth, bandwidth);
    ++report.repairs;
    ++report.repairs_per_node[node];
    report.bandwidth_packets += bandwidth;
    report.transferred_packets += r.transferred_packets;
    report.computed_packets += r.computed_packets;
    report.all_exact = report.all_exact && r.exact;
    if (r.computed_packets > 0) computing.insert(node);
  }
  report.computing_nodes.assign(computing.begin(), computing.end());

  const int k = code.params.k;
  if (k < 1 || options.spot_checks <= 0) return report;
  const RepairGraph& g = code.graph;
  const std::uint64_t total = detail::binomial(g.n(), k);
  std::vector<std::uint64_t> picks;
  if (total <= static_cast<std::uint64_t>(options.spot_checks)) {
    for (std::uint64_t i = 0; i < total; ++i) picks.push_back(i);
  } else {
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.spot_checks; ++i) picks.push_back(rng() % total);
  }
  for (std::uint64_t index : picks) {
    const auto nodes = detail::unrank_combination(g.n(), k, index, g.first_node());
    ++report.reconstructions_checked;
    bool ok = false;
    try {
      ok = reconstruct(state, nodes) == state.file();
    } catch (const ReconstructionError&) {
      ok = false;
    }
    if (!ok) {
      ++report.reconstructions_failed;
      report.failed_sets.push_back(nodes);
    }
  }
  return report;
}

}  // namespace gfr
