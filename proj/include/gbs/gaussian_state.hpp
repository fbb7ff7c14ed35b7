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

#ifndef GBS_GAUSSIAN_STATE_HPP
#define GBS_GAUSSIAN_STATE_HPP

#include <cstddef>
#include <vector>

#include "gbs/complex_matrix.hpp"
#include "gbs/config.hpp"

namespace gbs {

// Mode-operator ordering convention used throughout: the 2M basis vector is
// (a_1 .. a_M, a'_1 .. a'_M) with the creation operators in the second half,
// and the covariance pairs each operator with the conjugate of the second
// one, so the vacuum covariance is exactly I/2. Displacements are zero
// everywhere in this library; states are squeezed vacua and what linear
// optics makes of them.

/// Per-mode squeezing strengths r_j >= 0 (zero phase).
struct SqueezeParams {
    std::vector<double> r;

    explicit SqueezeParams(std::vector<double> values);

    std::size_t modes() const { return r.size(); }
    /// Number of active (nonzero) squeezers, the K of the experiment.
    std::size_t nonzero_count() const;
};

/// An M x M unitary describing a lossless linear interferometer.
class InterferometerUnitary {
  public:
    /// Validates squareness and ||t^dagger t - I||_max <= cfg.unitarity_tol.
    explicit InterferometerUnitary(ComplexMatrix t,
                                   const NumericConfig &cfg = default_config());

    std::size_t modes() const { return t_.rows(); }
    const ComplexMatrix &matrix() const { return t_; }

  private:
    ComplexMatrix t_;
};

/// A zero-displacement Gaussian state: mode count plus its 2M x 2M
/// covariance matrix in the ordering above.
class GaussianState {
  public:
    /// Validates the shape and Hermiticity of sigma.
    GaussianState(std::size_t modes, ComplexMatrix sigma,
                  const NumericConfig &cfg = default_config());

    std::size_t modes() const { return modes_; }
    const ComplexMatrix &sigma() const { return sigma_; }

  private:
    std::size_t modes_;
    ComplexMatrix sigma_;
};

/// M-mode vacuum, sigma = I/2.
GaussianState vacuum(std::size_t modes);

/// The 2M x 2M squeezing matrix: cosh r_j on the two diagonal blocks,
/// sinh r_j on the two off-diagonal blocks, all blocks diagonal.
ComplexMatrix squeeze_matrix(const SqueezeParams &params);

/// Covariance of squeezed vacua pushed through the interferometer:
/// sigma = (1/2) diag(T, T*) S S^dagger diag(T^dagger, T^t).
GaussianState output_state(const InterferometerUnitary &t, const SqueezeParams &params);

/// sigma + I/2, the Q-function covariance. Throws InvalidStateError when the
/// result is not positive definite, which no physical state produces.
ComplexMatrix sigma_q(const GaussianState &state, const NumericConfig &cfg = default_config());

/// The sampling matrix A = [[0, I], [I, 0]] (I - sigma_Q^{-1}). For pure
/// squeezed inputs it is block diagonal, A = B + B* on complementary blocks.
ComplexMatrix sampling_matrix_a(const GaussianState &state,
                                const NumericConfig &cfg = default_config());

/// B = T (diag tanh r_j) T^t, the squeezing-only sampling matrix. Symmetric,
/// with rank equal to the number of active squeezers.
ComplexMatrix b_matrix(const InterferometerUnitary &t, const SqueezeParams &params);

/// Trace over every mode not in keep: retains rows/columns j and j + M for
/// each kept mode j, in the order given.
GaussianState reduce_modes(const GaussianState &state, const std::vector<std::size_t> &keep);

} // namespace gbs

#endif // GBS_GAUSSIAN_STATE_HPP
