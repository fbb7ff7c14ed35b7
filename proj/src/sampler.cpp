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

#include "gbs/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "gbs/errors.hpp"
#include "gbs/random_ensembles.hpp"

namespace gbs {

namespace {
std::string format_double(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", v);
    return buffer;
}

constexpr double kMassAccountingTol = 1e-6;

} // namespace

double pair_events_mass_up_to(const SqueezeParams &params, std::size_t max_pairs) {
    // Convolve the per-squeezer pair-event laws, truncated at max_pairs;
    // partial sums up to max_pairs only ever touch these entries.
    std::vector<double> dist(max_pairs + 1, 0.0);
    dist[0] = 1.0;
    std::vector<double> single(max_pairs + 1, 0.0);
    std::vector<double> next(max_pairs + 1, 0.0);
    for (double r : params.r) {
        if (r == 0.0) {
            continue;
        }
        for (std::size_t n = 0; n <= max_pairs; ++n) {
            single[n] = ppe_distribution({1, r, n});
        }
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t a = 0; a <= max_pairs; ++a) {
            if (dist[a] == 0.0) {
                continue;
            }
            for (std::size_t b = 0; a + b <= max_pairs; ++b) {
                next[a + b] += dist[a] * single[b];
            }
        }
        dist.swap(next);
    }
    double mass = 0.0;
    for (double p : dist) {
        mass += p;
    }
    return std::min(mass, 1.0);
}

DistributionTable build_distribution(const InterferometerUnitary &t, const SqueezeParams &params,
                                     std::size_t max_total, std::size_t max_per_mode,
                                     std::optional<std::uint64_t> haar_seed,
                                     const NumericConfig &cfg) {
    if (params.modes() != t.modes()) {
        throw DimensionError("squeezing vector and interferometer disagree on mode count");
    }
    const std::size_t largest_pattern =
        std::min(max_total, t.modes() * max_per_mode);
    const std::size_t cap = std::min(cfg.hafnian_dim_cap, NumericConfig::hafnian_hard_cap);
    if (largest_pattern > cap) {
        throw ResourceLimitError("distribution cutoff admits patterns with " +
                                     std::to_string(largest_pattern) +
                                     " photons, above the hafnian cap of " + std::to_string(cap),
                                 largest_pattern);
    }

    DistributionTable table;
    table.metadata.modes = t.modes();
    table.metadata.squeeze = params.r;
    table.metadata.haar_seed = haar_seed;
    table.metadata.max_total = max_total;
    table.metadata.max_per_mode = max_per_mode;

    double covered = 0.0;
    for (PhotonPattern &pattern : enumerate_bounded_patterns(t.modes(), max_total, max_per_mode)) {
        const double p = pattern_probability_squeezed(t, params, pattern, cfg);
        if (p == 0.0) {
            continue;
        }
        covered += p;
        table.entries.push_back({std::move(pattern), p});
    }
    table.residual = std::max(0.0, 1.0 - pair_events_mass_up_to(params, max_total / 2));

    const double accounted = covered + table.residual;
    if (std::abs(accounted - 1.0) > kMassAccountingTol) {
        throw DomainError("distribution table accounts for " + format_double(accounted) +
                          " of the probability mass; lower max_total or raise max_per_mode");
    }
    return table;
}

SampleSummary draw(const DistributionTable &table, std::uint64_t draws, std::uint64_t seed) {
    std::vector<double> cumulative;
    cumulative.reserve(table.entries.size());
    double acc = 0.0;
    for (const TableEntry &entry : table.entries) {
        acc += entry.probability;
        cumulative.push_back(acc);
    }
    // Anything at or beyond the covered mass is the explicit residual bucket.
    std::vector<std::uint64_t> counts(table.entries.size(), 0);
    std::uint64_t residual_draws = 0;
    SplitMix64 rng(seed);
    for (std::uint64_t d = 0; d < draws; ++d) {
        const double u = rng.next_double();
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) {
            ++residual_draws;
        } else {
            ++counts[static_cast<std::size_t>(it - cumulative.begin())];
        }
    }
    SampleSummary summary;
    summary.records.reserve(table.entries.size());
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        summary.records.push_back({table.entries[i].pattern, counts[i]});
    }
    summary.residual_draws = residual_draws;
    summary.total_draws = draws;
    summary.seed = seed;
    return summary;
}

std::map<std::size_t, std::uint64_t> total_photon_histogram(
    const std::vector<SampleRecord> &records) {
    std::map<std::size_t, std::uint64_t> histogram;
    for (const SampleRecord &record : records) {
        histogram[record.pattern.total()] += record.count;
    }
    return histogram;
}

} // namespace gbs
