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

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "gfr/errors.h"
#include "oracles.h"
#include "subset_util.h"

namespace gfr {
namespace {

GfrCode make(const SystemParams& p, int m, std::uint64_t seed) {
  return construct_with_retry(p, FieldSpec(m), kDefaultMaxAttempts, seed);
}

// Rank of the rows of incident_edges(s), computed by the test oracle.
int oracle_rank_of(const GfrCode& code, const std::vector<int>& s) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (EdgeId id : incident_edges(code.graph, s)) {
    auto& r = rows.emplace_back();
    for (auto x : code.rows.row(id)) r.push_back(x.value());
  }
  return oracle::rank(rows, code.field.m(), code.field.poly());
}

TEST(VerifyTest, SevenThreeThreeEndToEnd) {
  const auto code = make({7, 3, 3}, 5, 1);
  EXPECT_TRUE(verify_property1(code).ok);
  const auto rec = verify_reconstruction(code, 3);
  EXPECT_TRUE(rec.ok);
  EXPECT_EQ(rec.checked, 35u);
  const auto p2 = verify_property2_exhaustive(code);
  EXPECT_TRUE(p2.ok);
  EXPECT_EQ(p2.checked, 4096u);
  testing_util::for_each_subset(7, 3, 1, [&](const std::vector<int>& s) {
    EXPECT_EQ(oracle_rank_of(code, s), 7);
  });
}

TEST(VerifyTest, FiveThreeTwo) {
  const auto code = make({5, 3, 2}, 8, 7);
  EXPECT_EQ(code.file_size, 4);
  const auto r = verify_reconstruction(code, 3);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.checked, 10u);
}

TEST(VerifyTest, ZeroRowsFail) {
  auto code = make({7, 3, 3}, 8, 1);
  code.rows = CoeffMatrix(code.rows.rows(), code.rows.cols());
  for (Exec e : {Exec::serial, Exec::parallel}) {
    const auto r = verify_reconstruction(code, 3, e);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.witness, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(r.checked, 1u);
  }
}

TEST(VerifyTest, DuplicatedSolidRowIsCaught) {
  auto code = make({7, 3, 3}, 8, 3);
  // Edges 0 and 1 both touch node 1; copying one over the other makes the
  // pair dependent.
  for (std::size_t c = 0; c < code.rows.cols(); ++c) code.rows.at(1, c) = code.rows.at(0, c);
  const auto serial = verify_property2_exhaustive(code, 20, Exec::serial);
  const auto parallel = verify_property2_exhaustive(code, 20, Exec::parallel);
  EXPECT_FALSE(serial.ok);
  EXPECT_EQ(serial.witness, parallel.witness);
  EXPECT_EQ(serial.checked, parallel.checked);
  // The witness really is a subset with enough a.count and too little rank.
  EXPECT_GE(a_count(code.graph, serial.witness).a_count, code.file_size);
  CoeffMatrix sub;
  for (int id : serial.witness) sub.append_row(code.rows.row(id));
  EXPECT_LT(static_cast<PacketCount>(rank(code.field, sub)), code.file_size);
}

TEST(VerifyTest, PropertyOneTamper) {
  auto code = make({7, 3, 3}, 8, 5);
  EdgeId dashed = code.graph.solid_count();
  code.rows.at(dashed, 0) = code.field.add(code.rows.at(dashed, 0), FieldElement(1));
  const auto r = verify_property1(code);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness, (std::vector<int>{dashed}));
  EXPECT_FALSE(phase2_check(code, 3).ok);
}

TEST(VerifyTest, ExhaustiveLimit) {
  const auto code = make({11, 5, 6}, 8, 1);
  ASSERT_GT(code.graph.edges().size(), 20u);
  EXPECT_THROW(verify_property2_exhaustive(code), LimitError);
  EXPECT_TRUE(verify_reconstruction(code, 5).ok);
}

TEST(VerifyTest, SerialAndParallelAgree) {
  for (auto p : {SystemParams{7, 3, 3}, {8, 4, 5}, {6, 3, 3}, {9, 5, 4}, {10, 4, 6}}) {
    for (int m : {2, 3, 8}) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto code = phase1_construct(build_repair_graph(partition_families(p)),
                                           mbr_file_size_fhs(p), FieldSpec(m), seed);
        const auto a = detail::verify_reconstruction_serial(code, p.k);
        const auto b = detail::verify_reconstruction_parallel(code, p.k);
        ASSERT_EQ(a.ok, b.ok);
        ASSERT_EQ(a.witness, b.witness);
        ASSERT_EQ(a.checked, b.checked);
        if (code.graph.edges().size() <= 16) {
          const auto c = detail::verify_property2_serial(code);
          const auto d = detail::verify_property2_parallel(code);
          ASSERT_EQ(c.ok, d.ok);
          ASSERT_EQ(c.witness, d.witness);
          ASSERT_EQ(c.checked, d.checked);
        }
      }
    }
  }
}

TEST(VerifyTest, ReconstructionMatchesOracle) {
  // Small fields fail often, which exercises both outcomes.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SystemParams p{7, 3, 3};
    const auto code = phase1_construct(build_repair_graph(partition_families(p)), 7,
                                       FieldSpec(2), seed);
    std::vector<int> first_bad;
    testing_util::for_each_subset(7, 3, 1, [&](const std::vector<int>& s) {
      if (first_bad.empty() && oracle_rank_of(code, s) < 7) first_bad = s;
    });
    const auto r = verify_reconstruction(code, 3, Exec::serial);
    EXPECT_EQ(r.ok, first_bad.empty());
    if (!r.ok) EXPECT_EQ(r.witness, first_bad);
  }
}

TEST(VerifyTest, RetryRecordsAttemptsAndSeeds) {
  const auto code = make({7, 3, 3}, 8, 40);
  EXPECT_GE(code.attempts, 1);
  EXPECT_EQ(code.seed, 40u + code.attempts - 1);
  EXPECT_EQ(code.params, (SystemParams{7, 3, 3}));
  EXPECT_THROW(construct_with_retry({7, 3, 3}, FieldSpec(8), 0, 1), ValidationError);
}

TEST(VerifyTest, ExhaustionCarriesWitness) {
  int exhausted = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    try {
      construct_with_retry({7, 3, 3}, FieldSpec(2), 1, seed);
    } catch (const ExhaustionError& e) {
      ++exhausted;
      EXPECT_FALSE(e.witness().empty());
    }
  }
  EXPECT_GT(exhausted, 0);
}

TEST(VerifyTest, FamilyPlusConstruction) {
  const auto code = construct_family_plus({9, 3, 2}, FieldSpec(8), 1);
  EXPECT_EQ(code.scheme, Scheme::family_plus);
  EXPECT_EQ(code.file_size, 4);
  EXPECT_TRUE(verify_property1(code).ok);
  const auto r = verify_reconstruction(code, 3);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.checked, 84u);

  const auto eight = construct_family_plus({8, 4, 2}, FieldSpec(8), 1);
  const auto s = verify_reconstruction(eight, 4);
  EXPECT_TRUE(s.ok);
  EXPECT_EQ(s.checked, 70u);

  // Collapsed plan: same graph and size as FHS.
  const auto seven = construct({7, 3, 3}, Scheme::family_plus, FieldSpec(8), 8, 2);
  EXPECT_EQ(seven.graph.edges(), make({7, 3, 3}, 8, 2).graph.edges());
  EXPECT_EQ(seven.file_size, 7);
}

}  // namespace
}  // namespace gfr
