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

#include "gbs/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <unordered_set>
#include <utility>

#include "gbs/errors.hpp"
#include "gbs/linalg.hpp"

namespace gbs {

namespace {
std::string format_double(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", v);
    return buffer;
}
} // namespace

SqueezeParams::SqueezeParams(std::vector<double> values) : r(std::move(values)) {
    for (double v : r) {
        if (!std::isfinite(v)) {
            throw DomainError("squeezing parameters must be finite");
        }
        if (v < 0.0) {
            throw DomainError("squeezing parameters must be non-negative, got " +
                              format_double(v));
        }
    }
}

std::size_t SqueezeParams::nonzero_count() const {
    return static_cast<std::size_t>(std::count_if(r.begin(), r.end(),
                                                  [](double v) { return v != 0.0; }));
}

InterferometerUnitary::InterferometerUnitary(ComplexMatrix t, const NumericConfig &cfg)
    : t_(std::move(t)) {
    if (!t_.is_square() || t_.rows() == 0) {
        throw DimensionError("interferometer matrix must be square and non-empty");
    }
    const double defect = (t_.adjoint() * t_ - ComplexMatrix::identity(t_.rows())).max_abs();
    if (defect > cfg.unitarity_tol) {
        throw DomainError("interferometer matrix is not unitary (defect " +
                          format_double(defect) + ")");
    }
}

GaussianState::GaussianState(std::size_t modes, ComplexMatrix sigma, const NumericConfig &cfg)
    : modes_(modes), sigma_(std::move(sigma)) {
    if (modes_ == 0) {
        throw DimensionError("a Gaussian state needs at least one mode");
    }
    if (sigma_.rows() != 2 * modes_ || sigma_.cols() != 2 * modes_) {
        throw DimensionError("covariance matrix must be " + std::to_string(2 * modes_) + "x" +
                             std::to_string(2 * modes_));
    }
    const double defect = sigma_.hermiticity_defect();
    if (defect > cfg.hermitian_tol) {
        throw InvalidStateError("covariance matrix is not Hermitian (defect " +
                                format_double(defect) + ")");
    }
}

GaussianState vacuum(std::size_t modes) {
    if (modes == 0) {
        throw DimensionError("vacuum needs at least one mode");
    }
    ComplexMatrix sigma = ComplexMatrix::identity(2 * modes) * Complex(0.5, 0.0);
    return GaussianState(modes, std::move(sigma));
}

ComplexMatrix squeeze_matrix(const SqueezeParams &params) {
    const std::size_t m = params.modes();
    ComplexMatrix s(2 * m, 2 * m);
    for (std::size_t j = 0; j < m; ++j) {
        const double ch = std::cosh(params.r[j]);
        const double sh = std::sinh(params.r[j]);
        s(j, j) = Complex(ch, 0.0);
        s(m + j, m + j) = Complex(ch, 0.0);
        s(j, m + j) = Complex(sh, 0.0);
        s(m + j, j) = Complex(sh, 0.0);
    }
    return s;
}

GaussianState output_state(const InterferometerUnitary &t, const SqueezeParams &params) {
    const std::size_t m = t.modes();
    if (params.modes() != m) {
        throw DimensionError("squeezing vector has " + std::to_string(params.modes()) +
                             " entries for a " + std::to_string(m) + "-mode interferometer");
    }
    const ComplexMatrix s = squeeze_matrix(params);
    const ComplexMatrix passive = t.matrix().direct_sum(t.matrix().conjugate());
    ComplexMatrix sigma = passive * (s * s.adjoint()) * passive.adjoint() * Complex(0.5, 0.0);
    return GaussianState(m, std::move(sigma));
}

ComplexMatrix sigma_q(const GaussianState &state, const NumericConfig &cfg) {
    ComplexMatrix q = state.sigma() + ComplexMatrix::identity(2 * state.modes()) *
                                          Complex(0.5, 0.0);
    if (!is_hermitian_positive_definite(q, cfg.positivity_tol)) {
        throw InvalidStateError("sigma_Q is not positive definite; covariance does not "
                                "describe a physical state");
    }
    return q;
}

ComplexMatrix sampling_matrix_a(const GaussianState &state, const NumericConfig &cfg) {
    const std::size_t m = state.modes();
    const ComplexMatrix q = sigma_q(state, cfg);
    ComplexMatrix q_inv;
    try {
        q_inv = inverse(q, cfg);
    } catch (const SingularMatrixError &e) {
        throw InvalidStateError(std::string("sigma_Q is numerically singular: ") + e.what());
    }
    const ComplexMatrix residue = ComplexMatrix::identity(2 * m) - q_inv;
    // Applying the block swap [[0, I], [I, 0]] on the column side lands B on
    // the upper-left block (the row-side swap would land its conjugate
    // there; the two layouts differ by the index relabeling j <-> j + M,
    // which every pattern submatrix hafnian is blind to).
    ComplexMatrix a(2 * m, 2 * m);
    for (std::size_t i = 0; i < 2 * m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            a(i, j) = residue(i, m + j);
            a(i, m + j) = residue(i, j);
        }
    }
    return a;
}

ComplexMatrix b_matrix(const InterferometerUnitary &t, const SqueezeParams &params) {
    const std::size_t m = t.modes();
    if (params.modes() != m) {
        throw DimensionError("squeezing vector has " + std::to_string(params.modes()) +
                             " entries for a " + std::to_string(m) + "-mode interferometer");
    }
    ComplexMatrix scaled = t.matrix(); // columns scaled by tanh r_j
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            scaled(i, j) *= std::tanh(params.r[j]);
        }
    }
    return scaled * t.matrix().transpose();
}

GaussianState reduce_modes(const GaussianState &state, const std::vector<std::size_t> &keep) {
    if (keep.empty()) {
        throw DomainError("reduce_modes needs a non-empty set of modes to keep");
    }
    std::unordered_set<std::size_t> seen;
    for (std::size_t j : keep) {
        if (j >= state.modes()) {
            throw IndexError("mode " + std::to_string(j) + " outside " +
                             std::to_string(state.modes()) + " modes");
        }
        if (!seen.insert(j).second) {
            throw DomainError("duplicate mode " + std::to_string(j) + " in keep set");
        }
    }
    const std::size_t m = state.modes();
    std::vector<std::size_t> indices;
    indices.reserve(2 * keep.size());
    for (std::size_t j : keep) {
        indices.push_back(j);
    }
    for (std::size_t j : keep) {
        indices.push_back(j + m);
    }
    ComplexMatrix reduced = submatrix_by_multiset(state.sigma(), indices, indices);
    return GaussianState(keep.size(), std::move(reduced));
}

} // namespace gbs
