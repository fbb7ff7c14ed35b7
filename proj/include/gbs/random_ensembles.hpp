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

#ifndef GBS_RANDOM_ENSEMBLES_HPP
#define GBS_RANDOM_ENSEMBLES_HPP

#include <cstdint>

#include "gbs/complex_matrix.hpp"
#include "gbs/gaussian_state.hpp"

namespace gbs {

/// Counter-style 64-bit generator (SplitMix64). The k-th output is a fixed
/// avalanche hash of seed + k * 0x9e3779b97f4a7c15, so a stream is a pure
/// function of (seed, k) and trivial to reimplement in another language.
///
/// Derived variates, in consumption order:
///   - next_double: next_u64() >> 11 scaled by 2^-53, uniform in [0, 1);
///   - next_normal: Marsaglia polar method on pairs (2u-1, 2v-1), rejecting
///     s = x^2 + y^2 outside (0, 1); the second variate of a pair is returned
///     by the following call;
///   - next_complex_normal: real part then imaginary part via next_normal.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_normal();

    Complex next_complex_normal() {
        const double re = next_normal();
        const double im = next_normal();
        return Complex(re, im);
    }

  private:
    std::uint64_t state_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// Haar-random M x M unitary, deterministic in (modes, seed).
///
/// The matrix is filled row by row with standard complex normal entries and
/// orthonormalized column by column with two Gram-Schmidt passes. That is a
/// QR factorization whose triangular factor has a positive real diagonal;
/// with that phase fixed the result carries the Haar measure (plain
/// orthonormalization with arbitrary phases would not).
InterferometerUnitary haar_unitary(std::size_t modes, std::uint64_t seed);

/// T T^t for a Haar unitary T drawn with the same (modes, seed): a symmetric
/// unitary from the circular orthogonal ensemble.
ComplexMatrix coe_matrix(std::size_t modes, std::uint64_t seed);

} // namespace gbs

#endif // GBS_RANDOM_ENSEMBLES_HPP
