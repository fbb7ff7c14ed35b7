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

#include "gbs/probability.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "gbs/errors.hpp"
#include "gbs/hafnian.hpp"
#include "gbs/linalg.hpp"

namespace gbs {

namespace {
std::string format_double(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", v);
    return buffer;
}

// Allowed overshoot above 1 before a probability is treated as broken.
constexpr double kProbabilityOvershoot = 1e-9;
// Below this prefactor magnitude the computation moves to log space.
constexpr double kLinearSpaceFloor = 1e-300;

// Turns exp(log_prefactor) * value into a checked probability. Works in
// linear space unless the prefactor underflows, in which case magnitudes are
// assembled in log space.
double finalize_probability(double log_prefactor, Complex value, const NumericConfig &cfg) {
    double real;
    double imag_mag;
    const double prefactor = std::exp(log_prefactor);
    if (prefactor >= kLinearSpaceFloor) {
        const Complex p = prefactor * value;
        real = p.real();
        imag_mag = std::abs(p.imag());
    } else {
        const auto rescale = [&](double component) {
            const double mag = std::abs(component);
            if (mag == 0.0) {
                return 0.0;
            }
            const double scaled = std::exp(log_prefactor + std::log(mag));
            return component < 0.0 ? -scaled : scaled;
        };
        real = rescale(value.real());
        imag_mag = std::abs(rescale(value.imag()));
    }
    if (imag_mag > cfg.imag_residue_tol) {
        throw InvalidStateError("probability has imaginary residue " + format_double(imag_mag) +
                                "; state or sampling matrix is inconsistent");
    }
    if (real < 0.0) {
        if (real < -cfg.imag_residue_tol) {
            throw InvalidStateError("probability is negative: " + format_double(real));
        }
        real = 0.0;
    }
    if (real > 1.0 + kProbabilityOvershoot) {
        throw InvalidStateError("probability exceeds 1: " + format_double(real));
    }
    return real;
}

void require_pattern_modes(const PhotonPattern &pattern, std::size_t modes) {
    if (pattern.modes() != modes) {
        throw DimensionError("pattern has " + std::to_string(pattern.modes()) +
                             " modes, experiment has " + std::to_string(modes));
    }
}

void check_photon_budget(std::size_t submatrix_dim, std::size_t photons,
                         const NumericConfig &cfg) {
    const std::size_t cap = std::min(cfg.hafnian_dim_cap, NumericConfig::hafnian_hard_cap);
    if (submatrix_dim > cap) {
        throw ResourceLimitError("pattern with " + std::to_string(photons) +
                                     " photons needs a " + std::to_string(submatrix_dim) +
                                     "-dimensional hafnian, above the cap of " +
                                     std::to_string(cap),
                                 photons);
    }
}

// Lexicographic enumeration of occupations with an exact total.
void emit_fixed_total(std::size_t modes, std::size_t total, std::size_t max_per_mode,
                      std::vector<int> &current, std::size_t pos,
                      std::vector<PhotonPattern> &out) {
    if (pos == modes) {
        if (total == 0) {
            out.push_back(PhotonPattern(current));
        }
        return;
    }
    const std::size_t cap = std::min(total, max_per_mode);
    for (std::size_t n = 0; n <= cap; ++n) {
        current[pos] = static_cast<int>(n);
        emit_fixed_total(modes, total - n, max_per_mode, current, pos + 1, out);
    }
    current[pos] = 0;
}

double log_binomial(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void require_squeeze_value(double r) {
    if (!std::isfinite(r) || r < 0.0) {
        throw DomainError("squeezing strength must be finite and non-negative");
    }
}

} // namespace

PhotonPattern::PhotonPattern(std::vector<int> n) : occupations(std::move(n)) {
    for (int v : occupations) {
        if (v < 0) {
            throw DomainError("photon occupations must be non-negative");
        }
    }
}

std::size_t PhotonPattern::total() const {
    std::size_t sum = 0;
    for (int v : occupations) {
        sum += static_cast<std::size_t>(v);
    }
    return sum;
}

double PhotonPattern::factorial_product() const {
    double f = 1.0;
    for (int v : occupations) {
        for (int k = 2; k <= v; ++k) {
            f *= static_cast<double>(k);
        }
    }
    return f;
}

double pattern_probability_general(const GaussianState &state, const PhotonPattern &pattern,
                                   const NumericConfig &cfg) {
    require_pattern_modes(pattern, state.modes());
    const std::size_t m = state.modes();
    const std::size_t photons = pattern.total();
    check_photon_budget(2 * photons, photons, cfg);

    const ComplexMatrix q = sigma_q(state, cfg);
    const double log_prefactor = -0.5 * log_abs_determinant(q);
    const ComplexMatrix a = sampling_matrix_a(state, cfg);

    std::vector<std::size_t> indices;
    indices.reserve(2 * photons);
    for (std::size_t j = 0; j < m; ++j) {
        for (int k = 0; k < pattern.occupations[j]; ++k) {
            indices.push_back(j);
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        for (int k = 0; k < pattern.occupations[j]; ++k) {
            indices.push_back(j + m);
        }
    }
    const Complex haf = hafnian_pmp(submatrix_by_multiset(a, indices, indices), cfg);
    return finalize_probability(log_prefactor, haf / pattern.factorial_product(), cfg);
}

double pattern_probability_squeezed(const InterferometerUnitary &t, const SqueezeParams &params,
                                    const PhotonPattern &pattern, const NumericConfig &cfg) {
    require_pattern_modes(pattern, t.modes());
    const std::size_t photons = pattern.total();
    check_photon_budget(photons, photons, cfg);

    // det sigma_Q = prod cosh^2 r_j for pure squeezed inputs.
    double log_prefactor = 0.0;
    for (double r : params.r) {
        log_prefactor -= std::log(std::cosh(r));
    }

    const ComplexMatrix b = b_matrix(t, params);
    std::vector<std::size_t> indices;
    indices.reserve(photons);
    for (std::size_t j = 0; j < t.modes(); ++j) {
        for (int k = 0; k < pattern.occupations[j]; ++k) {
            indices.push_back(j);
        }
    }
    const Complex haf = hafnian_pmp(submatrix_by_multiset(b, indices, indices), cfg);
    const double value = std::norm(haf) / pattern.factorial_product();
    return finalize_probability(log_prefactor, Complex(value, 0.0), cfg);
}

std::string rank_deficiency_note(const SqueezeParams &params, const PhotonPattern &pattern) {
    const std::size_t active = params.nonzero_count();
    const std::size_t photons = pattern.total();
    if (photons <= active) {
        return {};
    }
    return "pattern detects " + std::to_string(photons) + " photons with " +
           std::to_string(active) + " active squeezer(s); a rank-" + std::to_string(active) +
           " sampling matrix cannot carry the hardness of a " + std::to_string(photons) +
           "-photon experiment";
}

std::vector<PhotonPattern> enumerate_collision_free_patterns(std::size_t modes,
                                                             std::size_t photons) {
    if (photons > modes) {
        throw DomainError("cannot place " + std::to_string(photons) +
                          " collision-free photons in " + std::to_string(modes) + " modes");
    }
    std::vector<PhotonPattern> out;
    std::vector<int> current(modes, 0);
    emit_fixed_total(modes, photons, 1, current, 0, out);
    return out;
}

std::vector<PhotonPattern> enumerate_bounded_patterns(std::size_t modes, std::size_t max_total,
                                                      std::size_t max_per_mode) {
    std::vector<PhotonPattern> out;
    std::vector<int> current(modes, 0);
    for (std::size_t total = 0; total <= max_total; ++total) {
        emit_fixed_total(modes, total, max_per_mode, current, 0, out);
    }
    return out;
}

double ppe_distribution(const PpeDistributionSpec &spec) {
    if (spec.squeezer_count == 0) {
        throw DomainError("pair-event distribution needs at least one squeezer");
    }
    require_squeeze_value(spec.squeeze);
    const double k = static_cast<double>(spec.squeezer_count);
    const double n = static_cast<double>(spec.pair_events);
    if (spec.squeeze == 0.0) {
        return spec.pair_events == 0 ? 1.0 : 0.0;
    }
    const double log_coeff = std::lgamma(k / 2.0 + n) - std::lgamma(n + 1.0) -
                             std::lgamma(k / 2.0);
    const double log_p = log_coeff - k * std::log(std::cosh(spec.squeeze)) +
                         2.0 * n * std::log(std::tanh(spec.squeeze));
    return std::exp(log_p);
}

std::pair<double, double> mean_and_modal(const PpeDistributionSpec &spec) {
    if (spec.squeezer_count == 0) {
        throw DomainError("pair-event distribution needs at least one squeezer");
    }
    require_squeeze_value(spec.squeeze);
    const double sh2 = std::pow(std::sinh(spec.squeeze), 2);
    const double k = static_cast<double>(spec.squeezer_count);
    return {k * sh2, (k - 1.0) * sh2};
}

double pfbs_probability(std::size_t squeezers, std::size_t photons, double squeeze) {
    require_squeeze_value(squeeze);
    if (squeezers == 0) {
        throw DomainError("postselected generation needs at least one source");
    }
    if (photons > squeezers) {
        return 0.0; // cannot herald more pairs than sources
    }
    if (squeeze == 0.0) {
        return photons == 0 ? 1.0 : 0.0;
    }
    const double k = static_cast<double>(squeezers);
    const double n = static_cast<double>(photons);
    const double log_p = log_binomial(k, n) - 2.0 * k * std::log(std::cosh(squeeze)) +
                         2.0 * n * std::log(std::tanh(squeeze));
    return std::exp(log_p);
}

GenerationRatio generation_ratio(std::size_t squeezers, std::size_t photons) {
    if (photons < 1 || squeezers <= photons) {
        throw DomainError("generation ratio needs K > N >= 1");
    }
    const double k = static_cast<double>(squeezers);
    const double n = static_cast<double>(photons);
    // C(K, N) / C(K + N - 1, N) as a running product keeps full precision.
    double exact = 1.0;
    for (std::size_t j = 0; j < photons; ++j) {
        exact *= (k - static_cast<double>(j)) / (k + n - 1.0 - static_cast<double>(j));
    }
    const double asymptotic = std::pow((k - n) / (k - 1.0), n);
    return {exact, asymptotic};
}

SamplingSpaceSizes sampling_space_sizes(std::size_t photons) {
    if (photons == 0) {
        throw DomainError("sampling space sizes need at least one photon");
    }
    const std::uint64_t n = static_cast<std::uint64_t>(photons);
    BigUint gbs_size = BigUint::binomial(n * n, n);
    BigUint sbs_size = gbs_size * gbs_size;
    return {std::move(gbs_size), std::move(sbs_size)};
}

} // namespace gbs
