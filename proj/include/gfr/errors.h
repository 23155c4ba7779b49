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

#ifndef GFR_ERRORS_H_
#define GFR_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gfr {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters or malformed input (bounds, lengths, node ids).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Field operation outside its domain, e.g. inverting zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Linear system whose coefficient matrix has rank below its column count.
class UnsolvableError : public Error {
 public:
  using Error::Error;
};

// Linear system with no solution at all.
class InconsistentError : public Error {
 public:
  using Error::Error;
};

// Operation outside the single-failure model.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// The exhaustive Property-2 scan was asked to enumerate too many edges.
class LimitError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized data.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Reconstruction from a node set failed; the code escaped verification.
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

// Every construction attempt failed Phase-2 verification.
class ExhaustionError : public Error {
 public:
  ExhaustionError(const std::string& what, std::vector<int> witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace gfr

#endif  // GFR_ERRORS_H_
