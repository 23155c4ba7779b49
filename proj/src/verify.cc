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

#include "gfr/verify.h"

#include <algorithm>
#include <string>

#include "gfr/errors.h"
#include "subsets.h"

namespace gfr {
namespace {

// rank(sources) == rank(sources + row), used when the sources are dependent.
bool in_span_by_rank(const GfrCode& code, const std::vector<EdgeId>& sources,
                     EdgeId row) {
  std::vector<EdgeId> extended = sources;
  extended.push_back(row);
  return detail::rank_of_edges(code, sources) ==
         detail::rank_of_edges(code, extended);
}

bool in_span(const GfrCode& code, const std::vector<EdgeId>& sources,
             EdgeId row) {
  // Columns are the source rows: mat * weights = dashed row.
  const std::size_t len = code.rows.cols();
  CoeffMatrix mat(len, sources.size());
  for (std::size_t j = 0; j < sources.size(); ++j) {
    for (std::size_t i = 0; i < len; ++i) {
      mat.at(i, j) = code.rows.at(sources[j], i);
    }
  }
  try {
    solve(code.field, mat, code.rows.row(row));
    return true;
  } catch (const InconsistentError&) {
    return false;
  } catch (const UnsolvableError&) {
    return in_span_by_rank(code, sources, row);
  }
}

}  // namespace

VerifyResult verify_property1(const GfrCode& code) {
  const RepairGraph& g = code.graph;
  VerifyResult result;
  std::vector<FieldElement> combined(code.rows.cols());
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::dashed) continue;
    ++result.checked;
    const auto& sources = g.stored_at(e.u);
    const auto& mix = code.mixes.at(e.id);
    bool ok = mix.size() == sources.size();
    if (ok) {
      std::fill(combined.begin(), combined.end(), FieldElement());
      for (std::size_t j = 0; j < sources.size(); ++j) {
        code.field.axpy(combined, mix[j], code.rows.row(sources[j]));
      }
      const auto row = code.rows.row(e.id);
      ok = std::equal(combined.begin(), combined.end(), row.begin());
    }
    if (ok) ok = in_span(code, sources, e.id);
    if (!ok) {
      result.ok = false;
      result.witness = {e.id};
      return result;
    }
  }
  return result;
}

VerifyResult verify_reconstruction(const GfrCode& code, int k, Exec exec) {
  if (k < 1 || k > code.graph.n()) {
    throw ValidationError("k=" + std::to_string(k) + " outside [1, n]");
  }
  return exec == Exec::serial ? detail::verify_reconstruction_serial(code, k)
                              : detail::verify_reconstruction_parallel(code, k);
}

VerifyResult verify_property2_exhaustive(const GfrCode& code, int edge_limit,
                                         Exec exec) {
  const int edges = static_cast<int>(code.graph.edges().size());
  if (edges > edge_limit || edges > 62) {
    throw LimitError("exhaustive Property-2 scan over " +
                     std::to_string(edges) + " edges exceeds the limit of " +
                     std::to_string(edge_limit) +
                     "; use the k-subset reconstruction check instead");
  }
  return exec == Exec::serial ? detail::verify_property2_serial(code)
                              : detail::verify_property2_parallel(code);
}

VerifyResult phase2_check(const GfrCode& code, int k,
                          const Phase2Policy& policy) {
  VerifyResult p1 = verify_property1(code);
  if (!p1.ok) return p1;
  const int edges = static_cast<int>(code.graph.edges().size());
  if (code.scheme == Scheme::fhs && edges <= policy.exhaustive_edge_limit) {
    return verify_property2_exhaustive(code, policy.exhaustive_edge_limit,
                                       policy.exec);
  }
  return verify_reconstruction(code, k, policy.exec);
}

namespace {

GfrCode construct_scheme(const SystemParams& params, Scheme scheme,
                         const FieldSpec& field, int max_attempts,
                         std::uint64_t base_seed, const Phase2Policy& policy) {
  validate(params);
  if (max_attempts < 1) {
    throw ValidationError("max_attempts must be at least 1");
  }
  const RepairGraph graph = build_scheme_graph(params, scheme);
  const PacketCount file_size = scheme_file_size(params, scheme);
  std::vector<int> witness;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    GfrCode code = phase1_construct(graph, file_size, field, base_seed + attempt);
    code.params = params;
    code.scheme = scheme;
    code.attempts = attempt + 1;
    const VerifyResult check = phase2_check(code, params.k, policy);
    if (check.ok) return code;
    witness = check.witness;
  }
  throw ExhaustionError("no construction passed verification in " +
                            std::to_string(max_attempts) + " attempts",
                        std::move(witness));
}

}  // namespace

GfrCode construct(const SystemParams& params, Scheme scheme,
                  const FieldSpec& field, int max_attempts,
                  std::uint64_t base_seed, const Phase2Policy& policy) {
  if (scheme == Scheme::family_plus) {
    return construct_family_plus(params, field, base_seed, max_attempts,
                                 policy.exec);
  }
  return construct_with_retry(params, field, max_attempts, base_seed, policy);
}

GfrCode construct_with_retry(const SystemParams& params, const FieldSpec& field,
                             int max_attempts, std::uint64_t base_seed,
                             const Phase2Policy& policy) {
  return construct_scheme(params, Scheme::fhs, field, max_attempts, base_seed,
                          policy);
}

GfrCode construct_family_plus(const SystemParams& params,
                              const FieldSpec& field, std::uint64_t base_seed,
                              int max_attempts, Exec exec) {
  return construct_scheme(params, Scheme::family_plus, field, max_attempts,
                          base_seed, {.exhaustive_edge_limit = 0, .exec = exec});
}

}  // namespace gfr
