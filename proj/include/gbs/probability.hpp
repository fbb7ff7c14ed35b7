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

#ifndef GBS_PROBABILITY_HPP
#define GBS_PROBABILITY_HPP

#include <cstddef>
#include <vector>

#include "gbs/bigint.hpp"
#include "gbs/config.hpp"
#include "gbs/gaussian_state.hpp"

namespace gbs {

/// Photon occupations per output mode.
struct PhotonPattern {
    std::vector<int> occupations;

    explicit PhotonPattern(std::vector<int> n);

    std::size_t modes() const { return occupations.size(); }
    std::size_t total() const;
    /// n_1! n_2! ... n_M!
    double factorial_product() const;

    bool operator==(const PhotonPattern &other) const {
        return occupations == other.occupations;
    }
    bool operator<(const PhotonPattern &other) const {
        return occupations < other.occupations;
    }
};

/// Parameters of the photon-pair-event number distribution: K active
/// squeezers of common strength r, evaluated at N pair events (2N photons).
struct PpeDistributionSpec {
    std::size_t squeezer_count = 1; // K
    double squeeze = 0.0;           // r
    std::size_t pair_events = 0;    // N
};

/// Probability of measuring `pattern` on a general zero-displacement Gaussian
/// state:
///   Pr = |sigma_Q|^{-1/2} Haf(A_S) / nbar!
/// where A_S selects, from the sampling matrix A, the row/column multiset
/// {j repeated n_j times} then {j + M repeated n_j times}. A mode detecting
/// n_j photons simply repeats its indices n_j times.
double pattern_probability_general(const GaussianState &state, const PhotonPattern &pattern,
                                   const NumericConfig &cfg = default_config());

/// Same probability on the squeezing-only fast path:
///   Pr = |sigma_Q|^{-1/2} |Haf(B_S)|^2 / nbar!
/// with B_S the submatrix of B at the detected modes (repeated per photon)
/// and |sigma_Q|^{-1/2} = prod_j sech r_j.
double pattern_probability_squeezed(const InterferometerUnitary &t, const SqueezeParams &params,
                                    const PhotonPattern &pattern,
                                    const NumericConfig &cfg = default_config());

/// Human-readable note when a pattern detects more photons than there are
/// active squeezers (the sampling matrix rank cannot support the pattern's
/// complexity); empty when all is well. Advisory only, never an error.
std::string rank_deficiency_note(const SqueezeParams &params, const PhotonPattern &pattern);

/// All patterns with n_j in {0, 1} and total N, lexicographic. (M choose N)
/// of them.
std::vector<PhotonPattern> enumerate_collision_free_patterns(std::size_t modes,
                                                             std::size_t photons);

/// All patterns with total <= max_total and n_j <= max_per_mode, grouped by
/// ascending total and lexicographic within each group.
std::vector<PhotonPattern> enumerate_bounded_patterns(std::size_t modes, std::size_t max_total,
                                                      std::size_t max_per_mode);

/// Probability of N photon-pair events from K equal squeezers, the negative
/// binomial law
///   P_K(N) = C(K/2 + N - 1, N) sech^K(r) tanh^{2N}(r)
/// with the Gamma-based generalized coefficient so odd K works.
double ppe_distribution(const PpeDistributionSpec &spec);

/// Mean and modal photon number of the pair-event distribution:
/// (K sinh^2 r, (K - 1) sinh^2 r).
std::pair<double, double> mean_and_modal(const PpeDistributionSpec &spec);

/// Probability that exactly N of K heralded pair sources fire exactly once
/// (all others silent), the postselected-Fock generation law
///   C(K, N) sech^{2K}(r) tanh^{2N}(r).
/// N > K returns 0.
double pfbs_probability(std::size_t squeezers, std::size_t photons, double squeeze);

struct GenerationRatio {
    double exact;      // C(K, N) / C(K + N - 1, N)
    double asymptotic; // ((K - N) / (K - 1))^N
};

/// Ratio of postselected-Fock to Gaussian generation probabilities at equal
/// squeezing, both the exact binomial form and its large-N limit.
GenerationRatio generation_ratio(std::size_t squeezers, std::size_t photons);

struct SamplingSpaceSizes {
    BigUint gbs; // C(N^2, N)
    BigUint sbs; // C(N^2, N)^2
};

/// Output-pattern space sizes for an N-photon experiment in N^2 modes, exact.
SamplingSpaceSizes sampling_space_sizes(std::size_t photons);

} // namespace gbs

#endif // GBS_PROBABILITY_HPP
