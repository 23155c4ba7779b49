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

#include <gtest/gtest.h>

#include <memory>
#include <numeric>
#include <vector>

#include "gfr/errors.h"
#include "gfr/verify.h"
#include "subset_util.h"

namespace gfr {
namespace {

using Nodes = std::vector<NodeId>;

class StorageSimTest : public ::testing::Test {
 protected:
  void SetUp() override {
    code_ = std::make_shared<const GfrCode>(
        construct_with_retry({7, 3, 3}, FieldSpec(5), kDefaultMaxAttempts, 1));
  }
  SystemState fresh(std::size_t len = 4, std::uint64_t seed = 2) {
    return encode_file(code_, random_file(*code_, len, seed));
  }
  std::shared_ptr<const GfrCode> code_;
};

TEST_F(StorageSimTest, EncodingInvariants) {
  auto s = fresh();
  EXPECT_TRUE(s.invariants_hold());
  for (NodeId v = 1; v <= 7; ++v) EXPECT_EQ(s.contents(v).size(), 3u);
}

TEST_F(StorageSimTest, ZeroAndUnitFiles) {
  std::vector<Packet> zero(7, Packet(2));
  auto z = encode_file(code_, zero);
  for (NodeId v = 1; v <= 7; ++v)
    for (const auto& p : z.contents(v)) EXPECT_EQ(p.payload, Packet(2));
  const Nodes any{2, 5, 4};
  EXPECT_EQ(reconstruct(z, any), zero);

  std::vector<Packet> unit(7, Packet(1));
  unit[0][0] = FieldElement(1);
  auto u = encode_file(code_, unit);
  for (NodeId v = 1; v <= 7; ++v)
    for (const auto& p : u.contents(v)) EXPECT_EQ(p.payload[0], code_->rows.at(p.edge, 0));
}

TEST_F(StorageSimTest, WrongFileLength) {
  EXPECT_THROW(encode_file(code_, std::vector<Packet>(6, Packet(1))), ValidationError);
  std::vector<Packet> ragged(7, Packet(1));
  ragged[3].push_back(FieldElement(1));
  EXPECT_THROW(encode_file(code_, ragged), ValidationError);
}

TEST_F(StorageSimTest, RepairUnhelpingNode) {
  auto s = fresh();
  const auto before = s.contents(4);
  const auto r = fail_and_repair(s, 4);
  EXPECT_EQ(r.helpers, (Nodes{5, 6, 7}));
  EXPECT_EQ(r.computed_packets, 3);
  EXPECT_EQ(r.transferred_packets, 0);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(s.contents(4), before);
}

TEST_F(StorageSimTest, RepairByTransfer) {
  auto s = fresh();
  const auto one = fail_and_repair(s, 1);
  EXPECT_EQ(one.helpers, (Nodes{5, 6, 7}));
  EXPECT_EQ(one.transferred_packets, 3);
  EXPECT_EQ(one.computed_packets, 0);
  EXPECT_TRUE(one.exact);
  const auto six = fail_and_repair(s, 6);
  EXPECT_EQ(six.helpers, (Nodes{1, 2, 3}));
  EXPECT_EQ(six.transferred_packets, 3);
  EXPECT_EQ(six.computed_packets, 0);
  EXPECT_EQ(s.history().size(), 2u);
}

TEST_F(StorageSimTest, RepairIsIdempotent) {
  auto s = fresh();
  for (NodeId v = 1; v <= 7; ++v) {
    std::vector<std::vector<StoredPacket>> snapshot;
    for (NodeId w = 1; w <= 7; ++w) snapshot.push_back(s.contents(w));
    fail_and_repair(s, v);
    fail_and_repair(s, v);
    for (NodeId w = 1; w <= 7; ++w) EXPECT_EQ(s.contents(w), snapshot[w - 1]);
  }
  EXPECT_TRUE(s.invariants_hold());
}

TEST_F(StorageSimTest, SecondFailureIsRejected) {
  auto s = fresh();
  s.mark_failed(5);
  EXPECT_THROW(fail_and_repair(s, 4), UnsupportedError);
  EXPECT_THROW(fail_and_repair(s, 1), UnsupportedError);
  // Node 6 only needs 1..3.
  EXPECT_NO_THROW(fail_and_repair(s, 6));
  const Nodes with_down{5, 6, 7};
  EXPECT_THROW(reconstruct(s, with_down), ValidationError);
  EXPECT_THROW(fail_and_repair(s, 0), ValidationError);
}

TEST_F(StorageSimTest, ReconstructFromEverySubset) {
  auto s = fresh(3, 9);
  testing_util::for_each_subset(7, 3, 1, [&](const std::vector<int>& nodes) {
    EXPECT_EQ(reconstruct(s, nodes), s.file());
  });
  const Nodes too_few{1, 2};
  EXPECT_THROW(reconstruct(s, too_few), ValidationError);
}

TEST_F(StorageSimTest, BrokenCodeGivesReconstructionError) {
  auto broken = std::make_shared<GfrCode>(*code_);
  broken->rows = CoeffMatrix(broken->rows.rows(), broken->rows.cols());
  auto s = encode_file(broken, random_file(*broken, 1, 1));
  const Nodes any{5, 6, 7};
  EXPECT_THROW(reconstruct(s, any), ReconstructionError);
}

TEST_F(StorageSimTest, TraceReport) {
  auto s = fresh();
  const auto trace = random_trace(*code_, 100, 3);
  ASSERT_EQ(trace, random_trace(*code_, 100, 3));
  const auto r = run_trace(s, trace);
  EXPECT_EQ(r.repairs, 100);
  EXPECT_EQ(r.bandwidth_packets, 300);
  EXPECT_EQ(r.min_repair_bandwidth, 3);
  EXPECT_EQ(r.max_repair_bandwidth, 3);
  EXPECT_TRUE(r.all_exact);
  EXPECT_EQ(r.computing_nodes, (Nodes{4}));
  EXPECT_EQ(r.computed_packets, 3 * r.repairs_per_node.at(4));
  EXPECT_EQ(r.reconstructions_checked, 35);
  EXPECT_EQ(r.reconstructions_failed, 0);
  EXPECT_TRUE(s.invariants_hold());
}

TEST_F(StorageSimTest, EmptyTrace) {
  auto s = fresh();
  const auto snapshot = s.contents(3);
  const auto r = run_trace(s, std::vector<NodeId>{}, TraceOptions{.spot_checks = 0});
  EXPECT_EQ(r.repairs, 0);
  EXPECT_EQ(r.reconstructions_checked, 0);
  EXPECT_EQ(s.contents(3), snapshot);
}

TEST_F(StorageSimTest, SpotCheckSampling) {
  auto s = fresh();
  const auto r = run_trace(s, std::vector<NodeId>{1, 2}, TraceOptions{.spot_checks = 10, .seed = 4});
  EXPECT_EQ(r.reconstructions_checked, 10);
  EXPECT_EQ(r.reconstructions_failed, 0);
}

TEST(StorageSimProperty, OnlyUnhelpingNodesCompute) {
  for (auto p : {SystemParams{8, 4, 5}, {5, 3, 2}, {11, 5, 4}, {6, 3, 3}}) {
    auto code = std::make_shared<const GfrCode>(
        construct_with_retry(p, FieldSpec(8), kDefaultMaxAttempts, 1));
    auto s = encode_file(code, random_file(*code, 2, 5));
    for (NodeId v = 1; v <= p.n; ++v) {
      const auto r = fail_and_repair(s, v);
      EXPECT_EQ(r.transferred_packets + r.computed_packets, p.d);
      EXPECT_EQ(r.helpers, code->graph.helpers(v));
      EXPECT_EQ(r.computed_packets > 0, code->graph.is_unhelping(v) && code->graph.dashed_count() > 0);
      EXPECT_TRUE(r.exact);
    }
    EXPECT_TRUE(s.invariants_hold());
  }
}

TEST(StorageSimProperty, FamilyPlusRepairs) {
  auto code = std::make_shared<const GfrCode>(construct_family_plus({9, 3, 2}, FieldSpec(8), 1));
  auto s = encode_file(code, random_file(*code, 2, 6));
  const auto r = run_trace(s, random_trace(*code, 60, 2));
  EXPECT_TRUE(r.all_exact);
  EXPECT_EQ(r.bandwidth_packets, 120);
  EXPECT_EQ(r.reconstructions_failed, 0);
  for (NodeId v : r.computing_nodes) EXPECT_EQ(v, 7);
}

}  // namespace
}  // namespace gfr
