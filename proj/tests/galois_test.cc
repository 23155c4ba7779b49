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

#include "gfr/galois.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "gfr/errors.h"
#include "oracles.h"

namespace gfr {
namespace {

FieldElement E(std::uint32_t v) { return FieldElement(static_cast<std::uint16_t>(v)); }

TEST(GaloisTest, SmallFieldHandValues) {
  FieldSpec f(3, 0xb);
  EXPECT_EQ(f.add(E(0x5), E(0x3)), E(0x6));
  EXPECT_EQ(f.mul(E(0x2), E(0x6)), E(0x7));
  EXPECT_EQ(f.inv(E(0x2)), E(0x5));
  EXPECT_EQ(f.inv(E(0x1)), E(0x1));
}

TEST(GaloisTest, IdentitiesAndZero) {
  FieldSpec f(5);
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    EXPECT_EQ(f.add(E(0), E(x)), E(x));
    EXPECT_EQ(f.add(E(x), E(x)), E(0));
    EXPECT_EQ(f.mul(E(1), E(x)), E(x));
    EXPECT_EQ(f.mul(E(0), E(x)), E(0));
  }
  EXPECT_THROW(f.inv(E(0)), DomainError);
  EXPECT_THROW(f.div(E(3), E(0)), DomainError);
}

TEST(GaloisTest, DefaultPolynomialsAreIrreducible) {
  for (int m = kMinFieldBits; m <= kMaxFieldBits; ++m) {
    const auto p = default_poly(m);
    EXPECT_TRUE(is_irreducible(p)) << m;
    EXPECT_EQ(std::bit_width(p), m + 1);
  }
  EXPECT_EQ(default_poly(5), 0x25u);
  EXPECT_FALSE(is_irreducible(0x5));  // (x+1)^2
  EXPECT_THROW(FieldSpec(3, 0x9), ValidationError);
  EXPECT_THROW(FieldSpec(1), ValidationError);
  EXPECT_THROW(FieldSpec(17), ValidationError);
}

TEST(GaloisTest, MultiplicationMatchesCarrylessOracle) {
  for (int m = 2; m <= 8; ++m) {
    FieldSpec f(m);
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      for (std::uint32_t b = 0; b < f.order(); ++b) {
        ASSERT_EQ(f.mul(E(a), E(b)).value(), oracle::poly_mul(a, b, m, f.poly()))
            << m << " " << a << " " << b;
      }
    }
  }
  // Non-default polynomial for GF(2^8).
  FieldSpec aes(8, 0x11b);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 2000; ++i) {
    auto a = aes.random(rng), b = aes.random(rng);
    ASSERT_EQ(aes.mul(a, b).value(), oracle::poly_mul(a.value(), b.value(), 8, 0x11b));
  }
  FieldSpec big(16);
  for (int i = 0; i < 2000; ++i) {
    auto a = big.random(rng), b = big.random(rng);
    ASSERT_EQ(big.mul(a, b).value(),
              oracle::poly_mul(a.value(), b.value(), 16, big.poly()));
  }
}

TEST(GaloisTest, InverseExhaustiveUpToEightBits) {
  for (int m = 2; m <= 8; ++m) {
    FieldSpec f(m);
    for (std::uint32_t a = 1; a < f.order(); ++a) {
      ASSERT_EQ(f.mul(E(a), f.inv(E(a))), E(1)) << m << " " << a;
    }
  }
}

TEST(GaloisTest, FieldAxiomsOnRandomTriples) {
  for (int m : {5, 8, 13, 16}) {
    FieldSpec f(m);
    std::mt19937_64 rng(m);
    for (int i = 0; i < 1000; ++i) {
      auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      if (!b.is_zero()) ASSERT_EQ(f.mul(f.div(a, b), b), a);
    }
  }
}

TEST(GaloisTest, RandomDrawUsesTopBits) {
  FieldSpec f(5);
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(f.random(a).value(), b() >> 59);
  }
}

TEST(GaloisTest, HexRoundTrip) {
  FieldSpec f(5);
  EXPECT_EQ(f.to_hex(E(0x1f)), "1f");
  EXPECT_EQ(f.to_hex(E(0x3)), "03");
  EXPECT_EQ(f.from_hex("1f"), E(0x1f));
  EXPECT_THROW(f.from_hex("20"), FormatError);
  EXPECT_THROW(f.from_hex("zz"), FormatError);
  EXPECT_THROW(f.from_hex(""), FormatError);
  FieldSpec g(3);
  EXPECT_EQ(g.to_hex(E(0x5)), "5");
}

CoeffMatrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c,
                          std::mt19937_64& rng) {
  CoeffMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.random(rng);
  return m;
}

std::vector<std::vector<std::uint32_t>> raw(const CoeffMatrix& m) {
  std::vector<std::vector<std::uint32_t>> out(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).value();
  return out;
}

TEST(GaloisTest, RankMatchesReducedEchelonOracle) {
  FieldSpec f(5);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(f, 5, 7, rng);
    ASSERT_EQ(rank(f, m), static_cast<std::size_t>(oracle::rank(raw(m), 5, f.poly())));
  }
  // Low-rank products exercise the deficient branch.
  FieldSpec g(2);
  for (int trial = 0; trial < 300; ++trial) {
    auto m = random_matrix(g, 6, 4, rng);
    for (std::size_t j = 0; j < 4; ++j) m.at(trial % 6, j) = m.at((trial + 1) % 6, j);
    ASSERT_EQ(rank(g, m), static_cast<std::size_t>(oracle::rank(raw(m), 2, g.poly())));
  }
}

TEST(GaloisTest, RankBasics) {
  FieldSpec f(8);
  EXPECT_EQ(rank(f, CoeffMatrix::identity(6)), 6u);
  EXPECT_EQ(rank(f, CoeffMatrix(3, 4)), 0u);
  EXPECT_EQ(rank(f, CoeffMatrix()), 0u);
  std::mt19937_64 rng(1);
  auto m = random_matrix(f, 4, 6, rng);
  m.append_row(m.row(2));
  EXPECT_LT(rank(f, m), m.rows());
}

TEST(GaloisTest, RankInvariantUnderRowOperations) {
  FieldSpec f(8);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(f, 6, 5, rng);
    const auto r0 = rank(f, m);
    auto swapped = m;
    swapped.swap_rows(0, 5);
    EXPECT_EQ(rank(f, swapped), r0);
    auto scaled = m;
    FieldElement s;
    do s = f.random(rng); while (s.is_zero());
    f.scale(scaled.row(3), s);
    EXPECT_EQ(rank(f, scaled), r0);
    auto added = m;
    f.axpy(added.row(1), f.random(rng), m.row(4));
    EXPECT_EQ(rank(f, added), r0);
  }
}

TEST(GaloisTest, SolveRecoversEncodedVector) {
  FieldSpec f(8);
  std::mt19937_64 rng(3);
  int solved = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_matrix(f, 9, 7, rng);
    if (rank(f, a) < 7) continue;
    std::vector<FieldElement> x(7);
    for (auto& v : x) v = f.random(rng);
    std::vector<FieldElement> b(9);
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 7; ++j) b[i] = f.add(b[i], f.mul(a.at(i, j), x[j]));
    EXPECT_EQ(solve(f, a, b), x);
    ++solved;
  }
  EXPECT_GT(solved, 90);
}

TEST(GaloisTest, SolveIdentityAndMatrixRhs) {
  FieldSpec f(4);
  std::vector<FieldElement> b{E(3), E(0), E(15)};
  EXPECT_EQ(solve(f, CoeffMatrix::identity(3), b), b);
  CoeffMatrix rhs(3, 2);
  rhs.at(0, 0) = E(1);
  rhs.at(2, 1) = E(9);
  EXPECT_EQ(solve(f, CoeffMatrix::identity(3), rhs), rhs);
}

TEST(GaloisTest, SolveErrors) {
  FieldSpec f(4);
  std::vector<FieldElement> b{E(1), E(0)};
  EXPECT_THROW(solve(f, CoeffMatrix(2, 2), b), InconsistentError);
  std::vector<FieldElement> zero(2);
  EXPECT_THROW(solve(f, CoeffMatrix(2, 2), zero), UnsolvableError);
  // Overdetermined and inconsistent.
  CoeffMatrix m(3, 2);
  m.at(0, 0) = E(1);
  m.at(1, 1) = E(1);
  m.at(2, 0) = E(1);
  std::vector<FieldElement> bad{E(1), E(2), E(3)};
  EXPECT_THROW(solve(f, m, bad), InconsistentError);
  std::vector<FieldElement> good{E(1), E(2), E(1)};
  EXPECT_EQ(solve(f, m, good), (std::vector<FieldElement>{E(1), E(2)}));
  std::vector<FieldElement> short_rhs{E(1)};
  EXPECT_THROW(solve(f, m, short_rhs), ValidationError);
}

TEST(GaloisTest, ElementRangeChecked) {
  FieldSpec f(3);
  EXPECT_EQ(f.element(7), E(7));
  EXPECT_THROW(f.element(8), ValidationError);
}

}  // namespace
}  // namespace gfr
