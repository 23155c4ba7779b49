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

#include <algorithm>
#include <bit>
#include <charconv>

#include "gfr/errors.h"

namespace gfr {
namespace {

int degree(std::uint32_t poly) { return std::bit_width(poly) - 1; }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
  return a;
}

std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b, int m,
                       std::uint32_t poly) {
  std::uint32_t product = 0;
  while (b != 0) {
    if (b & 1u) product ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (std::uint32_t{1} << m)) a ^= poly;
  }
  return product;
}

}  // namespace

std::uint32_t default_poly(int m) {
  static constexpr std::uint32_t kPolys[] = {
      0,       0,       0x7,    0xb,    0x13,   0x25,    0x43,   0x89,  0x11d,
      0x211,   0x409,   0x805,  0x1053, 0x201b, 0x4443,  0x8003, 0x1100b};
  if (m < kMinFieldBits || m > kMaxFieldBits) {
    throw ValidationError("field bit-width must be in [2, 16], got " +
                          std::to_string(m));
  }
  return kPolys[m];
}

bool is_irreducible(std::uint32_t poly) {
  const int deg = degree(poly);
  if (deg < 1) return false;
  for (std::uint32_t g = 2; degree(g) <= deg / 2; ++g) {
    if (poly_mod(poly, g) == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(int m) : FieldSpec(m, default_poly(m)) {}

FieldSpec::FieldSpec(int m, std::uint32_t poly) : m_(m), poly_(poly) {
  if (m < kMinFieldBits || m > kMaxFieldBits) {
    throw ValidationError("field bit-width must be in [2, 16], got " +
                          std::to_string(m));
  }
  if (degree(poly) != m) {
    throw ValidationError("reduction polynomial must have degree " +
                          std::to_string(m));
  }
  if (!is_irreducible(poly)) {
    throw ValidationError("reduction polynomial is reducible");
  }

  const std::uint32_t q = order();
  auto tables = std::make_shared<Tables>();
  tables->exp.resize(2 * (q - 1));
  tables->log.assign(q, 0);

  // The multiplicative group is cyclic, so some generator exists.
  for (std::uint32_t g = 2; g < q; ++g) {
    std::uint32_t x = 1;
    std::uint32_t i = 0;
    bool primitive = true;
    for (; i < q - 1; ++i) {
      if (i > 0 && x == 1) {
        primitive = false;
        break;
      }
      tables->exp[i] = static_cast<std::uint16_t>(x);
      tables->log[x] = i;
      x = mul_slow(x, g, m, poly);
    }
    if (primitive) break;
  }
  for (std::uint32_t i = q - 1; i < 2 * (q - 1); ++i) {
    tables->exp[i] = tables->exp[i - (q - 1)];
  }
  tables_ = std::move(tables);
}

FieldElement FieldSpec::element(std::uint32_t value) const {
  if (value >= order()) {
    throw ValidationError("value " + std::to_string(value) +
                          " out of range for GF(2^" + std::to_string(m_) + ")");
  }
  return FieldElement(static_cast<std::uint16_t>(value));
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.is_zero()) throw DomainError("zero has no multiplicative inverse");
  const std::uint32_t q = order();
  return FieldElement(tables_->exp[(q - 1 - tables_->log[a.value()]) % (q - 1)]);
}

FieldElement FieldSpec::div(FieldElement a, FieldElement b) const {
  return mul(a, inv(b));
}

void FieldSpec::axpy(std::span<FieldElement> dst, FieldElement factor,
                     std::span<const FieldElement> src) const {
  if (factor.is_zero()) return;
  const std::uint32_t lf = tables_->log[factor.value()];
  const auto& exp = tables_->exp;
  const auto& log = tables_->log;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const std::uint16_t s = src[i].value();
    if (s != 0) {
      dst[i] = FieldElement(
          static_cast<std::uint16_t>(dst[i].value() ^ exp[lf + log[s]]));
    }
  }
}

void FieldSpec::scale(std::span<FieldElement> row, FieldElement factor) const {
  for (auto& x : row) x = mul(x, factor);
}

std::string FieldSpec::to_hex(FieldElement a) const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int width = (m_ + 3) / 4;
  std::string out(width, '0');
  std::uint32_t v = a.value();
  for (int i = width - 1; i >= 0; --i, v >>= 4) out[i] = kDigits[v & 0xf];
  return out;
}

FieldElement FieldSpec::from_hex(std::string_view text) const {
  std::uint32_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value, 16);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw FormatError("not a hex field element: '" + std::string(text) + "'");
  }
  if (value >= order()) {
    throw FormatError("field element '" + std::string(text) +
                      "' out of range");
  }
  return FieldElement(static_cast<std::uint16_t>(value));
}

CoeffMatrix CoeffMatrix::identity(std::size_t size) {
  CoeffMatrix mat(size, size);
  for (std::size_t i = 0; i < size; ++i) mat.at(i, i) = FieldElement(1);
  return mat;
}

void CoeffMatrix::append_row(std::span<const FieldElement> values) {
  if (rows_ == 0 && entries_.empty()) cols_ = values.size();
  if (values.size() != cols_) {
    throw ValidationError("row length " + std::to_string(values.size()) +
                          " does not match column count " +
                          std::to_string(cols_));
  }
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

void CoeffMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

namespace {

// Forward elimination restricted to the first `pivot_cols` columns, applied
// to the whole row. Returns the pivot column of each pivot row.
std::vector<std::size_t> forward_eliminate(const FieldSpec& field,
                                           CoeffMatrix& mat,
                                           std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < pivot_cols && pivot_row < mat.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < mat.rows() && mat.at(r, col).is_zero()) ++r;
    if (r == mat.rows()) continue;
    mat.swap_rows(pivot_row, r);
    const FieldElement inv = field.inv(mat.at(pivot_row, col));
    field.scale(mat.row(pivot_row), inv);
    for (std::size_t below = pivot_row + 1; below < mat.rows(); ++below) {
      const FieldElement f = mat.at(below, col);
      if (!f.is_zero()) field.axpy(mat.row(below), f, mat.row(pivot_row));
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FieldSpec& field, CoeffMatrix mat) {
  return forward_eliminate(field, mat, mat.cols()).size();
}

CoeffMatrix solve(const FieldSpec& field, const CoeffMatrix& mat,
                  const CoeffMatrix& rhs) {
  if (rhs.rows() != mat.rows()) {
    throw ValidationError("right-hand side has " + std::to_string(rhs.rows()) +
                          " rows, matrix has " + std::to_string(mat.rows()));
  }
  const std::size_t n = mat.cols();
  const std::size_t width = n + rhs.cols();
  CoeffMatrix aug(mat.rows(), width);
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    std::copy(mat.row(r).begin(), mat.row(r).end(), aug.row(r).begin());
    std::copy(rhs.row(r).begin(), rhs.row(r).end(), aug.row(r).begin() + n);
  }

  const auto pivots = forward_eliminate(field, aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    for (std::size_t c = n; c < width; ++c) {
      if (!aug.at(r, c).is_zero()) {
        throw InconsistentError("linear system is inconsistent");
      }
    }
  }
  if (pivots.size() < n) {
    throw UnsolvableError("coefficient matrix has rank " +
                          std::to_string(pivots.size()) + " < " +
                          std::to_string(n) + " unknowns");
  }

  // Full rank: pivot i sits in column i. Clear above each pivot.
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t above = 0; above < i; ++above) {
      const FieldElement f = aug.at(above, i);
      if (!f.is_zero()) field.axpy(aug.row(above), f, aug.row(i));
    }
  }
  CoeffMatrix x(n, rhs.cols());
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(aug.row(i).begin() + n, aug.row(i).end(), x.row(i).begin());
  }
  return x;
}

std::vector<FieldElement> solve(const FieldSpec& field, const CoeffMatrix& mat,
                                std::span<const FieldElement> rhs) {
  CoeffMatrix column(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) column.at(i, 0) = rhs[i];
  const CoeffMatrix x = solve(field, mat, column);
  std::vector<FieldElement> out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out[i] = x.at(i, 0);
  return out;
}

}  // namespace gfr
