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

#include "gbs/random_ensembles.hpp"

#include <cmath>

#include "gbs/errors.hpp"

namespace gbs {

double SplitMix64::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    while (true) {
        const double x = 2.0 * next_double() - 1.0;
        const double y = 2.0 * next_double() - 1.0;
        const double s = x * x + y * y;
        if (s >= 1.0 || s == 0.0) {
            continue;
        }
        const double scale = std::sqrt(-2.0 * std::log(s) / s);
        spare_normal_ = y * scale;
        has_spare_ = true;
        return x * scale;
    }
}

InterferometerUnitary haar_unitary(std::size_t modes, std::uint64_t seed) {
    if (modes == 0) {
        throw DimensionError("haar_unitary needs at least one mode");
    }
    SplitMix64 rng(seed);
    ComplexMatrix q(modes, modes);
    for (std::size_t i = 0; i < modes; ++i) {
        for (std::size_t j = 0; j < modes; ++j) {
            q(i, j) = rng.next_complex_normal();
        }
    }
    // Column-wise Gram-Schmidt, run twice per column so the orthogonality
    // residual lands at machine precision. The triangular factor this builds
    // has positive real diagonal (norms), which is the phase convention that
    // makes the sample Haar-distributed.
    for (std::size_t j = 0; j < modes; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex overlap(0.0, 0.0);
                for (std::size_t i = 0; i < modes; ++i) {
                    overlap += std::conj(q(i, k)) * q(i, j);
                }
                for (std::size_t i = 0; i < modes; ++i) {
                    q(i, j) -= overlap * q(i, k);
                }
            }
        }
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < modes; ++i) {
            norm_sq += std::norm(q(i, j));
        }
        const double inv_norm = 1.0 / std::sqrt(norm_sq);
        for (std::size_t i = 0; i < modes; ++i) {
            q(i, j) *= inv_norm;
        }
    }
    return InterferometerUnitary(std::move(q));
}

ComplexMatrix coe_matrix(std::size_t modes, std::uint64_t seed) {
    const InterferometerUnitary t = haar_unitary(modes, seed);
    return t.matrix() * t.matrix().transpose();
}

} // namespace gbs
