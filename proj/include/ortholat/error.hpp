// Copyright 2026 The ortholat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORTHOLAT_ERROR_HPP_
#define ORTHOLAT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ortholat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Jacobi eigensolver did not reach its off-diagonal threshold.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// An element required to lie in the positive cone does not.
class NotPositive : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Two numerical routes that must agree gave different verdicts. This is a
/// tolerance failure, never a mathematical one.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Raised by the witness search when the pair is Loewner-comparable, in
/// which case the ordinary minimum is the true infimum.
class ComparablePair : public Error {
 public:
  using Error::Error;
};

class NotOrderUnit : public Error {
 public:
  using Error::Error;
};

/// Malformed input: non-finite entries, bad JSON shape, non-square data.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionMismatch(std::string(where) + ": dimensions " + std::to_string(a) +
                            " and " + std::to_string(b) + " differ");
  }
}

}  // namespace ortholat

#endif  // ORTHOLAT_ERROR_HPP_
