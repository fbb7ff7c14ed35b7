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

#ifndef GBS_CONFIG_HPP
#define GBS_CONFIG_HPP

#include <cstddef>

namespace gbs {

/// Central numeric configuration. Tolerances are absolute on the max-norm
/// unless the name says relative.
struct NumericConfig {
    /// Max allowed ||m - m^dagger||_max for matrices required Hermitian.
    double hermitian_tol = 1e-10;
    /// Max allowed ||a - a^t||_max before hafnian input is rejected.
    double symmetry_tol = 1e-10;
    /// Max allowed ||t^dagger t - I||_max for interferometer unitaries.
    double unitarity_tol = 1e-10;
    /// Cholesky pivot floor in the positive-definiteness test.
    double positivity_tol = 1e-10;
    /// Probabilities with a larger imaginary residue raise instead of clamp.
    double imag_residue_tol = 1e-10;
    /// An LU pivot below this fraction of the max row norm aborts inversion.
    double singular_pivot_rel = 1e-12;
    /// Relative agreement demanded between redundant computation paths.
    double cross_check_rel = 1e-9;

    /// Largest matrix dimension fed to the matching-enumeration hafnian.
    /// Configurable, but never above hafnian_hard_cap.
    std::size_t hafnian_dim_cap = 16;

    /// 2n = 20 means 654729075 matchings; beyond that is out of reach here.
    static constexpr std::size_t hafnian_hard_cap = 20;
};

/// Shared default configuration used when no override is passed.
inline const NumericConfig &default_config() {
    static const NumericConfig cfg{};
    return cfg;
}

} // namespace gbs

#endif // GBS_CONFIG_HPP
