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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "gbs/errors.hpp"
#include "gbs/linalg.hpp"
#include "gbs/probability.hpp"
#include "gbs/random_ensembles.hpp"
#include "oracles.hpp"

using namespace gbs;

TEST_CASE("vacuum pattern on the vacuum state has probability one") {
    const PhotonPattern none({0, 0, 0});
    CHECK(pattern_probability_general(vacuum(3), none) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("vacuum pattern through any interferometer keeps probability one at r = 0") {
    const InterferometerUnitary t = haar_unitary(4, 99);
    const SqueezeParams off({0.0, 0.0, 0.0, 0.0});
    const PhotonPattern none({0, 0, 0, 0});
    CHECK(pattern_probability_squeezed(t, off, none) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pattern_probability_general(output_state(t, off), none) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single squeezed mode reproduces the analytic photon-number law") {
    const InterferometerUnitary t(ComplexMatrix::identity(1));
    for (double r : {0.3, 0.5, 0.8, 1.2}) {
        const SqueezeParams params({r});
        const GaussianState state = output_state(t, params);
        for (int n = 0; n <= 8; ++n) {
            const double expected = test::squeezed_vacuum_photon_probability(n, r);
            const PhotonPattern pattern({n});
            CHECK(std::abs(pattern_probability_general(state, pattern) - expected) < 1e-10);
            CHECK(std::abs(pattern_probability_squeezed(t, params, pattern) - expected) < 1e-10);
        }
    }
    // the specific value quoted for r = 0.5, n = 2
    CHECK(pattern_probability_squeezed(t, SqueezeParams({0.5}), PhotonPattern({2})) ==
          doctest::Approx(0.0946925).epsilon(1e-5));
}

TEST_CASE("two equal squeezers on a balanced beamsplitter form a two-mode squeezed pair") {
    const InterferometerUnitary bs(test::balanced_beamsplitter());
    for (double r : {0.3, 0.5, 0.8}) {
        const SqueezeParams params({r, r});
        for (int n = 0; n <= 4; ++n) {
            const double expected = test::two_mode_squeezed_probability(n, r);
            CHECK(std::abs(pattern_probability_squeezed(bs, params, PhotonPattern({n, n})) -
                           expected) < 1e-10);
        }
        // mismatched counts are impossible
        for (int n = 0; n <= 3; ++n) {
            for (int m = 0; m <= 3; ++m) {
                if (n == m) {
                    continue;
                }
                CHECK(pattern_probability_squeezed(bs, params, PhotonPattern({n, m})) == 0.0);
            }
        }
    }
    const double r = 0.5;
    CHECK(pattern_probability_squeezed(bs, SqueezeParams({r, r}), PhotonPattern({1, 1})) ==
          doctest::Approx(0.16795).epsilon(1e-4));
}

TEST_CASE("odd total photon numbers are impossible, exactly") {
    const InterferometerUnitary t = haar_unitary(3, 1234);
    const SqueezeParams params({0.5, 0.3, 0.0});
    const GaussianState state = output_state(t, params);
    for (const auto &occ : {std::vector<int>{1, 0, 0}, {0, 1, 2}, {1, 1, 1}, {3, 1, 1}}) {
        const PhotonPattern pattern(occ);
        // exact zero on the squeezing-only path (odd-dimension hafnian)
        CHECK(pattern_probability_squeezed(t, params, pattern) == 0.0);
        // the general path goes through sigma_Q^{-1}, whose rounding leaves
        // noise in the structurally zero cross blocks
        CHECK(pattern_probability_general(state, pattern) <= 1e-12);
    }
}

TEST_CASE("general and squeezed paths agree on random experiments") {
    std::mt19937_64 seeds(5150);
    for (int trial = 0; trial < 4; ++trial) {
        const std::size_t m = 2 + trial % 2;
        std::vector<double> r(m);
        std::uniform_real_distribution<double> u(0.0, 0.7);
        std::mt19937_64 rng(seeds());
        for (double &v : r) {
            v = u(rng);
        }
        const InterferometerUnitary t = haar_unitary(m, seeds());
        const SqueezeParams params(r);
        const GaussianState state = output_state(t, params);
        for (const PhotonPattern &pattern : enumerate_bounded_patterns(m, 4, 4)) {
            const double ps = pattern_probability_squeezed(t, params, pattern);
            const double pg = pattern_probability_general(state, pattern);
            CHECK(std::abs(ps - pg) <= 1e-9 * std::max(1.0, std::max(ps, pg)));
            CHECK(ps >= 0.0);
            CHECK(pg >= 0.0);
        }
    }
}

TEST_CASE("series-expansion oracle confirms the formula including repeated modes") {
    // M = 1: patterns up to n = 4
    {
        const InterferometerUnitary t(ComplexMatrix::identity(1));
        const SqueezeParams params({0.5});
        const GaussianState state = output_state(t, params);
        const ComplexMatrix a = sampling_matrix_a(state);
        const double det_q = test::cofactor_determinant(sigma_q(state)).real();
        for (int n = 0; n <= 4; ++n) {
            const double expected = test::series_expansion_probability(a, det_q, {n});
            CHECK(std::abs(pattern_probability_general(state, PhotonPattern({n})) - expected) <
                  1e-10);
        }
    }
    // M = 2 with a Haar interferometer: collision patterns included
    {
        const InterferometerUnitary t = haar_unitary(2, 777);
        const SqueezeParams params({0.5, 0.3});
        const GaussianState state = output_state(t, params);
        const ComplexMatrix a = sampling_matrix_a(state);
        const double det_q = test::cofactor_determinant(sigma_q(state)).real();
        for (const auto &occ :
             {std::vector<int>{0, 0}, {1, 1}, {2, 0}, {0, 2}, {2, 2}, {3, 1}, {1, 3}, {4, 0}}) {
            const double expected = test::series_expansion_probability(a, det_q, occ);
            const double actual = pattern_probability_general(state, PhotonPattern(occ));
            CHECK(std::abs(actual - expected) < 1e-10);
        }
    }
}

TEST_CASE("probabilities are invariant under permuting output modes") {
    const std::size_t m = 3;
    const InterferometerUnitary t = haar_unitary(m, 31337);
    const SqueezeParams params({0.4, 0.6, 0.2});
    const std::vector<std::size_t> perm{2, 0, 1};
    ComplexMatrix permuted(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            permuted(i, j) = t.matrix()(perm[i], j); // row-permuted interferometer
        }
    }
    const InterferometerUnitary tp(permuted);
    for (const PhotonPattern &pattern : enumerate_bounded_patterns(m, 4, 4)) {
        std::vector<int> relabeled(m);
        for (std::size_t i = 0; i < m; ++i) {
            relabeled[i] = pattern.occupations[perm[i]];
        }
        const double p_orig = pattern_probability_squeezed(t, params, pattern);
        const double p_perm = pattern_probability_squeezed(tp, params, PhotonPattern(relabeled));
        CHECK(std::abs(p_orig - p_perm) <= 1e-12);
    }
}

TEST_CASE("enumerate_collision_free_patterns: counts and order") {
    CHECK(enumerate_collision_free_patterns(4, 0).size() == 1);
    CHECK(enumerate_collision_free_patterns(4, 2).size() == 6);

    const auto patterns = enumerate_collision_free_patterns(6, 3);
    CHECK(patterns.size() == 20);
    std::set<std::vector<int>> unique;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        CHECK(patterns[i].total() == 3);
        for (int v : patterns[i].occupations) {
            CHECK((v == 0 || v == 1));
        }
        unique.insert(patterns[i].occupations);
        if (i > 0) {
            CHECK(patterns[i - 1] < patterns[i]); // strict lexicographic order
        }
    }
    CHECK(unique.size() == 20);

    CHECK_THROWS_AS(enumerate_collision_free_patterns(3, 4), DomainError);
}

TEST_CASE("enumerate_bounded_patterns: counts against a nested-loop oracle") {
    const auto small = enumerate_bounded_patterns(2, 2, 2);
    CHECK(small.size() == 6);
    std::set<std::vector<int>> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {0, 2}};
    std::set<std::vector<int>> actual;
    for (const PhotonPattern &p : small) {
        actual.insert(p.occupations);
    }
    CHECK(actual == expected);

    CHECK(enumerate_bounded_patterns(1, 4, 4).size() == 5);

    // oracle: three explicit nested loops
    std::size_t count = 0;
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
            for (int c = 0; c <= 2; ++c) {
                if (a + b + c <= 4) {
                    ++count;
                }
            }
        }
    }
    CHECK(enumerate_bounded_patterns(3, 4, 2).size() == count);

    // documented order: ascending total, lexicographic within a total
    const auto ordered = enumerate_bounded_patterns(3, 3, 3);
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        const std::size_t prev = ordered[i - 1].total();
        const std::size_t cur = ordered[i].total();
        CHECK(prev <= cur);
        if (prev == cur) {
            CHECK(ordered[i - 1] < ordered[i]);
        }
    }
}

TEST_CASE("ppe_distribution: fixed values and closed forms") {
    // K = 1 reproduces the single squeezed mode at N pairs = 2N photons
    CHECK(ppe_distribution({1, 0.5, 1}) ==
          doctest::Approx(0.5 * std::tanh(0.5) * std::tanh(0.5) / std::cosh(0.5))
              .epsilon(1e-12));
    CHECK(ppe_distribution({1, 0.5, 1}) == doctest::Approx(0.0946925).epsilon(1e-5));
    for (int n = 0; n <= 6; n += 2) {
        CHECK(ppe_distribution({1, 0.7, static_cast<std::size_t>(n / 2)}) ==
              doctest::Approx(test::squeezed_vacuum_photon_probability(n, 0.7)).epsilon(1e-12));
    }
    // K = 2 is geometric
    const double r = 0.6;
    for (std::size_t n = 0; n <= 5; ++n) {
        const double expected = std::pow(std::tanh(r), 2.0 * static_cast<double>(n)) /
                                std::pow(std::cosh(r), 2);
        CHECK(ppe_distribution({2, r, n}) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("ppe_distribution normalizes and hits the stated mean, odd K included") {
    for (std::size_t k : {1, 2, 3, 5}) {
        for (double r : {0.3, 0.8}) {
            double total = 0.0;
            double mean_photons = 0.0;
            for (std::size_t n = 0; n < 400; ++n) {
                const double p = ppe_distribution({k, r, n});
                total += p;
                mean_photons += 2.0 * static_cast<double>(n) * p;
            }
            CHECK(std::abs(total - 1.0) < 1e-10);
            const double expected_mean = static_cast<double>(k) * std::pow(std::sinh(r), 2);
            CHECK(mean_photons == doctest::Approx(expected_mean).epsilon(1e-10));
        }
    }
    CHECK(ppe_distribution({1, 0.0, 0}) == 1.0);
    CHECK(ppe_distribution({1, 0.0, 3}) == 0.0);
    CHECK_THROWS_AS(ppe_distribution({0, 0.5, 1}), DomainError);
}

TEST_CASE("mean_and_modal: formulas and the argmax cross-check") {
    CHECK(mean_and_modal({4, 0.0, 0}) == std::pair<double, double>{0.0, 0.0});
    CHECK(mean_and_modal({1, 1.3, 0}).second == 0.0);

    const double r = std::asinh(0.4); // sinh^2 r = 0.16
    const auto [mean, modal] = mean_and_modal({100, r, 0});
    CHECK(mean == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(modal == doctest::Approx(15.84).epsilon(1e-12));

    // argmax over pair events of the actual distribution, within one pair
    std::size_t best_n = 0;
    double best_p = 0.0;
    for (std::size_t n = 0; n < 60; ++n) {
        const double p = ppe_distribution({100, r, n});
        if (p > best_p) {
            best_p = p;
            best_n = n;
        }
    }
    CHECK(std::abs(static_cast<double>(best_n) - modal / 2.0) <= 1.0);
}

TEST_CASE("pfbs_probability: fixed cases and the Monte-Carlo pair-source oracle") {
    const double r = 0.5;
    CHECK(pfbs_probability(1, 1, r) ==
          doctest::Approx(std::pow(std::tanh(r) / std::cosh(r), 2)).epsilon(1e-12));
    CHECK(pfbs_probability(3, 0, 0.0) == 1.0);
    CHECK(pfbs_probability(2, 3, 0.7) == 0.0); // more pairs than sources

    const double expected =
        6.0 * std::pow(1.0 / std::cosh(r), 8) * std::pow(std::tanh(r), 4);
    CHECK(pfbs_probability(4, 2, r) == doctest::Approx(expected).epsilon(1e-12));

    // simulate 4 independent pair sources; count runs where exactly 2 emit a
    // single pair and the others stay silent
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double p_pair = std::pow(std::tanh(r), 2); // geometric parameter
    const int runs = 200000;
    int hits = 0;
    for (int run = 0; run < runs; ++run) {
        int singles = 0;
        bool rejected = false;
        for (int source = 0; source < 4; ++source) {
            int pairs = 0;
            while (u(rng) < p_pair) {
                ++pairs;
            }
            if (pairs == 1) {
                ++singles;
            } else if (pairs > 1) {
                rejected = true;
            }
        }
        if (!rejected && singles == 2) {
            ++hits;
        }
    }
    const double estimate = static_cast<double>(hits) / runs;
    const double sigma = std::sqrt(expected * (1.0 - expected) / runs);
    CHECK(std::abs(estimate - expected) < 5.0 * sigma);
}

TEST_CASE("generation_ratio: unity at N = 1, asymptotic agreement, e-fold limit") {
    CHECK(generation_ratio(7, 1).exact == doctest::Approx(1.0).epsilon(1e-12));

    const GenerationRatio big = generation_ratio(400, 20);
    CHECK(big.asymptotic == doctest::Approx(0.3769).epsilon(2e-4));
    CHECK(std::abs(big.exact / big.asymptotic - 1.0) < 0.05);

    const GenerationRatio efold = generation_ratio(50 * 50, 50);
    CHECK(std::abs(efold.asymptotic - 1.0 / std::exp(1.0)) / (1.0 / std::exp(1.0)) < 0.02);

    CHECK_THROWS_AS(generation_ratio(5, 5), DomainError);
    CHECK_THROWS_AS(generation_ratio(5, 0), DomainError);
}

TEST_CASE("sampling_space_sizes: exact integers") {
    const auto two = sampling_space_sizes(2);
    CHECK(two.gbs.to_string() == "6");
    CHECK(two.sbs.to_string() == "36");

    const auto three = sampling_space_sizes(3);
    CHECK(three.gbs.to_string() == "84");
    CHECK(three.sbs.to_string() == "7056");

    // N <= 8 cross-checked against exact 64-bit arithmetic
    for (std::size_t n = 1; n <= 8; ++n) {
        unsigned long long c = 1;
        for (std::size_t i = 0; i < n; ++i) {
            c = c * (n * n - i) / (i + 1);
        }
        const auto sizes = sampling_space_sizes(n);
        CHECK(sizes.gbs.to_string() == std::to_string(c));
        CHECK(sizes.sbs == sizes.gbs * sizes.gbs);
    }
    CHECK_THROWS_AS(sampling_space_sizes(0), DomainError);
}

TEST_CASE("normalization: bounded sum plus analytic tail brackets unity") {
    // the mass beyond 8 photons is the pair-law tail beyond 4 pair events
    const struct {
        std::size_t modes;
        std::vector<double> r;
        std::size_t active;
        double common_r;
    } experiments[] = {
        {1, {0.5}, 1, 0.5},
        {2, {0.5, 0.5}, 2, 0.5},
        {3, {0.4, 0.4, 0.4}, 3, 0.4},
    };
    for (const auto &exp : experiments) {
        const InterferometerUnitary t = haar_unitary(exp.modes, 60601);
        const GaussianState state = output_state(t, SqueezeParams(exp.r));
        double covered = 0.0;
        for (const PhotonPattern &pattern : enumerate_bounded_patterns(exp.modes, 8, 8)) {
            covered += pattern_probability_general(state, pattern);
        }
        double tail = 0.0;
        for (std::size_t n = 5; n < 400; ++n) {
            tail += ppe_distribution({exp.active, exp.common_r, n});
        }
        CHECK(covered >= 1.0 - tail - 1e-10);
        CHECK(covered <= 1.0 + 1e-8);
    }
}

TEST_CASE("a covariance without pair symmetry errors instead of clamping") {
    // Hermitian sigma whose anomalous block is antisymmetric: not a physical
    // photonic state. The sampling submatrix comes out asymmetric and the
    // evaluation must refuse it.
    ComplexMatrix sigma(4, 4);
    sigma(0, 0) = sigma(1, 1) = sigma(2, 2) = sigma(3, 3) = Complex(0.6, 0.0);
    sigma(0, 3) = Complex(0.3, 0.0);
    sigma(1, 2) = Complex(-0.3, 0.0);
    sigma(3, 0) = Complex(0.3, 0.0);
    sigma(2, 1) = Complex(-0.3, 0.0);
    const GaussianState broken(2, sigma);
    CHECK_THROWS_AS(pattern_probability_general(broken, PhotonPattern({1, 1})), Error);
}

TEST_CASE("total-photon marginal follows the pair-event law for any interferometer") {
    const std::size_t m = 4;
    const double r = 0.4;
    for (std::uint64_t seed : {11ULL, 22ULL}) {
        const InterferometerUnitary t = haar_unitary(m, seed);
        const SqueezeParams params({r, r, 0.0, 0.0}); // K = 2
        for (std::size_t pairs = 0; pairs <= 2; ++pairs) {
            double marginal = 0.0;
            for (const PhotonPattern &pattern :
                 enumerate_bounded_patterns(m, 2 * pairs, 2 * pairs)) {
                if (pattern.total() == 2 * pairs) {
                    marginal += pattern_probability_squeezed(t, params, pattern);
                }
            }
            CHECK(std::abs(marginal - ppe_distribution({2, r, pairs})) < 1e-8);
        }
    }
}

TEST_CASE("extreme squeezing underflows to zero through the log-space path") {
    // prod sech r_j ~ e^-870 is far below the linear-space floor; the result
    // must come back as a clean zero, not an overflow or an error
    const std::size_t m = 120;
    const InterferometerUnitary t(ComplexMatrix::identity(m));
    const SqueezeParams params(std::vector<double>(m, 8.0));
    const PhotonPattern none(std::vector<int>(m, 0));
    const double p = pattern_probability_squeezed(t, params, none);
    CHECK(p == 0.0);
}

TEST_CASE("rank deficiency produces a note, not an error") {
    const SqueezeParams params({0.5, 0.0});
    CHECK(rank_deficiency_note(params, PhotonPattern({1, 0})).empty());
    CHECK(!rank_deficiency_note(params, PhotonPattern({1, 1})).empty());
}

TEST_CASE("input validation: mismatched patterns, caps, negative occupations") {
    CHECK_THROWS_AS(PhotonPattern({1, -1}), DomainError);
    CHECK_THROWS_AS(
        pattern_probability_general(vacuum(2), PhotonPattern({1})), DimensionError);

    const InterferometerUnitary t(ComplexMatrix::identity(1));
    const SqueezeParams params({0.5});
    try {
        pattern_probability_squeezed(t, params, PhotonPattern({30}));
        FAIL("expected ResourceLimitError");
    } catch (const ResourceLimitError &e) {
        CHECK(e.size() == 30);
    }
    // the general path doubles the submatrix dimension, so it caps earlier
    CHECK_THROWS_AS(
        pattern_probability_general(output_state(t, params), PhotonPattern({10})),
        ResourceLimitError);
}
