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

// Phase-2 verification and the retrying constructors.
//
// The subset scans come in two builds: a serial reference that walks
// subsets in order and stops at the first failure, and an OpenMP kernel
// that splits the index space across threads. Both report the failing
// subset with the smallest index, so their results are identical.

#ifndef GFR_VERIFY_H_
#define GFR_VERIFY_H_

#include <cstdint>
#include <vector>

#include "gfr/gfr_code.h"

namespace gfr {

enum class Exec { serial, parallel };

inline constexpr int kDefaultExhaustiveEdgeLimit = 20;
inline constexpr int kDefaultMaxAttempts = 1000;

struct VerifyResult {
  bool ok = true;
  // Failing node set (reconstruction), edge set (Property 2) or the single
  // offending edge id (Property 1).
  std::vector<int> witness;
  // Subsets examined, counting up to and including the witness on failure.
  std::uint64_t checked = 0;
};

// Every dashed row equals the stored mix of its source rows and lies in
// their span (checked by solving against them).
VerifyResult verify_property1(const GfrCode& code);

// Every k-subset of nodes has incident-edge rank M. Subsets are visited in
// lexicographic order.
VerifyResult verify_reconstruction(const GfrCode& code, int k,
                                   Exec exec = Exec::parallel);

// Every edge subset with a.count >= M has rank M. Subset i is the bitmask i
// over edge ids. Throws LimitError when |E| > edge_limit.
VerifyResult verify_property2_exhaustive(
    const GfrCode& code, int edge_limit = kDefaultExhaustiveEdgeLimit,
    Exec exec = Exec::parallel);

struct Phase2Policy {
  // FHS codes with |E| at or below this get the exhaustive Property-2 scan;
  // everything else gets the k-subset scan.
  int exhaustive_edge_limit = kDefaultExhaustiveEdgeLimit;
  Exec exec = Exec::parallel;
};

// Property 1 followed by the policy's Property-2 style check.
VerifyResult phase2_check(const GfrCode& code, int k,
                          const Phase2Policy& policy = {});

// Runs phase1_construct with seeds base_seed, base_seed+1, ... and returns
// the first code passing phase2_check; `attempts` records how many ran.
// Throws ExhaustionError carrying the last witness.
GfrCode construct_with_retry(const SystemParams& params, const FieldSpec& field,
                             int max_attempts, std::uint64_t base_seed,
                             const Phase2Policy& policy = {});

// Family-plus variant: per-group graphs, M from the family-plus formula,
// rank M checked over every global k-subset.
GfrCode construct_family_plus(const SystemParams& params,
                              const FieldSpec& field, std::uint64_t base_seed,
                              int max_attempts = kDefaultMaxAttempts,
                              Exec exec = Exec::parallel);

// Dispatches to construct_with_retry or construct_family_plus.
GfrCode construct(const SystemParams& params, Scheme scheme,
                  const FieldSpec& field, int max_attempts,
                  std::uint64_t base_seed, const Phase2Policy& policy = {});

namespace detail {

VerifyResult verify_reconstruction_serial(const GfrCode& code, int k);
VerifyResult verify_reconstruction_parallel(const GfrCode& code, int k);
VerifyResult verify_property2_serial(const GfrCode& code);
VerifyResult verify_property2_parallel(const GfrCode& code);

}  // namespace detail

}  // namespace gfr

#endif  // GFR_VERIFY_H_
