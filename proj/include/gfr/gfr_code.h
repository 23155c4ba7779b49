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

// Outer code: a coefficient row over GF(2^m) for every edge of the repair
// graph, relative to the M file packets.
//
// Phase 1 draws solid rows uniformly and builds every dashed row (u, w) as a
// random combination of the d solid rows stored at its incomplete-family
// endpoint u, so Property 1 holds by construction. Phase 2 (see verify.h)
// checks that any packet set with a.count >= M has rank M.

#ifndef GFR_GFR_CODE_H_
#define GFR_GFR_CODE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gfr/family.h"
#include "gfr/galois.h"
#include "gfr/repair_graph.h"

namespace gfr {

enum class Scheme { fhs, family_plus };

std::string to_string(Scheme scheme);
// Accepts "fhs" and "family-plus".
Scheme parse_scheme(const std::string& text);

struct GfrCode {
  SystemParams params;  // k is 0 for codes straight out of phase1_construct
  Scheme scheme = Scheme::fhs;
  RepairGraph graph;
  FieldSpec field{8};
  PacketCount file_size = 0;
  std::uint64_t seed = 0;
  int attempts = 1;

  // Row e is the coefficient vector of edge e's packet.
  CoeffMatrix rows;
  // Dashed edge (u, w): weights over stored_at(u), in that order. Empty for
  // solid edges.
  std::vector<std::vector<FieldElement>> mixes;
};

// Graph for the scheme: one FHS graph, or per-group graphs combined.
RepairGraph build_scheme_graph(const SystemParams& params, Scheme scheme);

// Closed-form file size for the scheme.
PacketCount scheme_file_size(const SystemParams& params, Scheme scheme);

struct EdgeSubsetTally {
  int a0 = 0;
  std::vector<int> a;  // one entry per incomplete-family node
  int a_count = 0;     // a0 + sum_m min(a_m, d)
};

EdgeSubsetTally a_count(const RepairGraph& graph,
                        std::span<const EdgeId> subset);

struct CountTrace {
  std::vector<NodeId> order;
  std::vector<int> increments;
  int total = 0;
};

// The sequential edge counter over a k-node set. Unhelping nodes are moved
// to the end, keeping the caller's relative order otherwise. Each round
// counts the remaining solid edges at v_i plus, for unhelping v_i, every
// remaining dashed edge (u, v_i) whose u still has more than |N_-c| edges,
// then deletes all edges at v_i. Throws ValidationError if |S| != k.
CountTrace count_subroutine(const RepairGraph& graph,
                            std::span<const NodeId> nodes, int k);

// Deterministic in (graph, file_size, field, seed). The returned code has
// params.k = 0; callers that know k set it.
GfrCode phase1_construct(const RepairGraph& graph, PacketCount file_size,
                         const FieldSpec& field, std::uint64_t seed);

}  // namespace gfr

#endif  // GFR_GFR_CODE_H_
