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

// A storage cluster running a GfrCode: encode a file, fail and exactly
// repair single nodes, reconstruct from k nodes.
//
// Repairs follow the single-failure model. A newcomer contacts its helper
// set D_i; every solid packet is copied from the other endpoint, and every
// dashed packet (u, i) is recomputed by u from its own d packets.

#ifndef GFR_STORAGE_SIM_H_
#define GFR_STORAGE_SIM_H_

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "gfr/gfr_code.h"

namespace gfr {

using Packet = std::vector<FieldElement>;

struct StoredPacket {
  EdgeId edge = 0;
  Packet payload;

  friend bool operator==(const StoredPacket&, const StoredPacket&) = default;
};

struct RepairReport {
  NodeId failed_node = 0;
  std::vector<NodeId> helpers;
  int transferred_packets = 0;
  int computed_packets = 0;
  bool exact = false;
};

class SystemState {
 public:
  SystemState(std::shared_ptr<const GfrCode> code, std::vector<Packet> file);

  const GfrCode& code() const { return *code_; }
  std::size_t packet_length() const { return packet_length_; }
  const std::vector<Packet>& file() const { return file_; }

  const std::vector<StoredPacket>& contents(NodeId node) const;
  std::vector<StoredPacket>& mutable_contents(NodeId node);

  // Marks a node as down without repairing it. Used to model a second
  // failure, which repair rejects.
  void mark_failed(NodeId node);
  bool is_failed(NodeId node) const;
  void clear_failed(NodeId node);

  const std::vector<RepairReport>& history() const { return history_; }
  void record(RepairReport report) { history_.push_back(std::move(report)); }

  // Live nodes hold d packets, solid copies agree, and each payload equals
  // its coefficient row applied to the file.
  bool invariants_hold() const;

 private:
  std::shared_ptr<const GfrCode> code_;
  std::vector<Packet> file_;
  std::size_t packet_length_ = 0;
  std::vector<std::vector<StoredPacket>> contents_;  // by node - first_node
  std::vector<char> failed_;
  std::vector<RepairReport> history_;
};

// Payload of edge e = rows[e] . file, symbol by symbol. Every file packet
// must have the same length. Throws ValidationError unless file.size() = M.
SystemState encode_file(std::shared_ptr<const GfrCode> code,
                        std::vector<Packet> file);

// M packets of uniform symbols.
std::vector<Packet> random_file(const GfrCode& code, std::size_t packet_length,
                                std::uint64_t seed);

// Erases the node and rebuilds it from its helpers. Throws UnsupportedError
// if a helper is marked failed.
RepairReport fail_and_repair(SystemState& state, NodeId node);

// Solves for the file from the distinct packets held by `nodes`. Throws
// ReconstructionError when they do not determine the file.
std::vector<Packet> reconstruct(const SystemState& state,
                                std::span<const NodeId> nodes);

struct TraceOptions {
  // Node sets checked after the trace; every k-subset when C(n,k) is at
  // most this, otherwise this many drawn uniformly.
  int spot_checks = 64;
  std::uint64_t seed = 0;
};

struct TraceReport {
  int repairs = 0;
  std::map<NodeId, int> repairs_per_node;
  std::int64_t bandwidth_packets = 0;
  std::int64_t transferred_packets = 0;
  std::int64_t computed_packets = 0;
  int min_repair_bandwidth = 0;
  int max_repair_bandwidth = 0;
  bool all_exact = true;
  // Nodes that needed computed packets at least once.
  std::vector<NodeId> computing_nodes;
  int reconstructions_checked = 0;
  int reconstructions_failed = 0;
  std::vector<std::vector<NodeId>> failed_sets;
};

TraceReport run_trace(SystemState& state, std::span<const NodeId> trace,
                      const TraceOptions& options = {});

// Uniform failure sequence over the code's nodes.
std::vector<NodeId> random_trace(const GfrCode& code, int failures,
                                 std::uint64_t seed);

}  // namespace gfr

#endif  // GFR_STORAGE_SIM_H_
