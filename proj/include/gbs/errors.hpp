// Copyright 2026 The gbssim Authors
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

#ifndef GBS_ERRORS_HPP
#define GBS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbs {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// Incompatible or non-square matrix dimensions.
class DimensionError : public Error {
  public:
    explicit DimensionError(const std::string &what) : Error(what) {}
};

/// Row/column index outside the matrix.
class IndexError : public Error {
  public:
    explicit IndexError(const std::string &what) : Error(what) {}
};

/// Matrix inversion hit a pivot below the singularity threshold.
class SingularMatrixError : public Error {
  public:
    SingularMatrixError(const std::string &what, double pivot_magnitude)
        : Error(what), pivot_magnitude_(pivot_magnitude) {}

    double pivot_magnitude() const { return pivot_magnitude_; }

  private:
    double pivot_magnitude_;
};

/// A covariance matrix failed a validity check (Hermiticity, positive
/// definiteness of sigma_Q, ...).
class InvalidStateError : public Error {
  public:
    explicit InvalidStateError(const std::string &what) : Error(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string &what) : Error(what) {}
};

/// Work size exceeds a configured cap (e.g. hafnian dimension).
class ResourceLimitError : public Error {
  public:
    explicit ResourceLimitError(const std::string &what, std::size_t size = 0)
        : Error(what), size_(size) {}

    /// The offending size (matrix dimension or pattern photon count).
    std::size_t size() const { return size_; }

  private:
    std::size_t size_;
};

/// Input file or serialized payload does not match the expected schema.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string &what) : Error(what) {}
};

} // namespace gbs

#endif // GBS_ERRORS_HPP
