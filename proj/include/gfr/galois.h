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

// GF(2^m) arithmetic for 2 <= m <= 16 and Gaussian elimination over it.
//
// An element with integer value v is the polynomial sum_i bit_i(v) x^i.
// Multiplication goes through exp/log tables built once per FieldSpec from
// a primitive element found by search, so any irreducible modulus works,
// primitive or not. FieldSpec copies share the tables.

#ifndef GFR_GALOIS_H_
#define GFR_GALOIS_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gfr {

class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint16_t value) : value_(value) {}

  constexpr std::uint16_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;

 private:
  std::uint16_t value_ = 0;
};

inline constexpr int kMinFieldBits = 2;
inline constexpr int kMaxFieldBits = 16;

// Standard irreducible modulus for GF(2^m), e.g. 0x25 = x^5 + x^2 + 1.
std::uint32_t default_poly(int m);

// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(std::uint32_t poly);

class FieldSpec {
 public:
  explicit FieldSpec(int m);
  FieldSpec(int m, std::uint32_t poly);

  int m() const { return m_; }
  std::uint32_t poly() const { return poly_; }
  std::uint32_t order() const { return std::uint32_t{1} << m_; }

  // Throws ValidationError unless value < 2^m.
  FieldElement element(std::uint32_t value) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    return FieldElement(static_cast<std::uint16_t>(a.value() ^ b.value()));
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return FieldElement();
    return FieldElement(
        tables_->exp[tables_->log[a.value()] + tables_->log[b.value()]]);
  }
  // Throws DomainError on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;

  // dst[i] += factor * src[i]
  void axpy(std::span<FieldElement> dst, FieldElement factor,
            std::span<const FieldElement> src) const;
  void scale(std::span<FieldElement> row, FieldElement factor) const;

  // Uniform element drawn from the top m bits of one 64-bit output, so the
  // stream is identical across standard libraries.
  FieldElement random(std::mt19937_64& rng) const {
    return FieldElement(static_cast<std::uint16_t>(rng() >> (64 - m_)));
  }

  // Lowercase, zero-padded to ceil(m/4) digits.
  std::string to_hex(FieldElement a) const;
  FieldElement from_hex(std::string_view text) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.m_ == b.m_ && a.poly_ == b.poly_;
  }

 private:
  struct Tables {
    std::vector<std::uint16_t> exp;  // 2(q-1) entries, no wraparound needed
    std::vector<std::uint32_t> log;
  };

  int m_;
  std::uint32_t poly_;
  std::shared_ptr<const Tables> tables_;
};

// Dense row-major matrix of field elements.
class CoeffMatrix {
 public:
  CoeffMatrix() = default;
  CoeffMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static CoeffMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  FieldElement at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<FieldElement> row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const FieldElement> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  // Row length must equal cols(); an empty matrix adopts the first length.
  void append_row(std::span<const FieldElement> values);
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const CoeffMatrix&, const CoeffMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> entries_;
};

// Row rank. Pivots are the first nonzero entry at or below the current
// pivot row, scanning columns left to right.
std::size_t rank(const FieldSpec& field, CoeffMatrix mat);

// Solves mat * x = rhs for x. Requires rank(mat) = mat.cols() <= mat.rows().
// Throws InconsistentError when no x exists, otherwise UnsolvableError when
// the solution is not unique.
std::vector<FieldElement> solve(const FieldSpec& field, const CoeffMatrix& mat,
                                std::span<const FieldElement> rhs);

// Column-wise solve for several right-hand sides at once.
CoeffMatrix solve(const FieldSpec& field, const CoeffMatrix& mat,
                  const CoeffMatrix& rhs);

}  // namespace gfr

#endif  // GFR_GALOIS_H_
