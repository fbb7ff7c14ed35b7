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

#ifndef GBS_SAMPLER_HPP
#define GBS_SAMPLER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gbs/config.hpp"
#include "gbs/gaussian_state.hpp"
#include "gbs/probability.hpp"

namespace gbs {

struct TableEntry {
    PhotonPattern pattern;
    double probability;
};

struct TableMetadata {
    std::size_t modes = 0;
    std::vector<double> squeeze;
    std::optional<std::uint64_t> haar_seed; // unset for explicit unitaries
    std::size_t max_total = 0;
    std::size_t max_per_mode = 0;
};

/// Exhaustive (pattern, probability) table up to a photon cutoff, with the
/// leftover tail mass kept explicit so nothing is silently renormalized.
struct DistributionTable {
    std::vector<TableEntry> entries;
    double residual = 0.0; // probability of more than max_total photons
    TableMetadata metadata;
};

struct SampleRecord {
    PhotonPattern pattern;
    std::uint64_t count;
};

struct SampleSummary {
    std::vector<SampleRecord> records; // one per table entry, in table order
    std::uint64_t residual_draws = 0;  // landed beyond the cutoff
    std::uint64_t total_draws = 0;
    std::uint64_t seed = 0;
};

/// Exact probability of seeing at most max_pairs photon-pair events from the
/// given squeezers (any mix of strengths; per-squeezer laws are convolved).
double pair_events_mass_up_to(const SqueezeParams &params, std::size_t max_pairs);

/// Enumerates every pattern with total <= max_total and per-mode <= max_per_mode,
/// scores it on the squeezing-only path, and keeps the nonzero entries. The
/// residual is the exact probability of exceeding max_total photons, so the
/// table plus residual accounts for all mass; a max_per_mode below max_total
/// that excludes real mass fails the accounting check and is rejected.
DistributionTable build_distribution(const InterferometerUnitary &t, const SqueezeParams &params,
                                     std::size_t max_total, std::size_t max_per_mode,
                                     std::optional<std::uint64_t> haar_seed = std::nullopt,
                                     const NumericConfig &cfg = default_config());

/// Inverse-CDF categorical sampling over the table entries plus one explicit
/// beyond-cutoff bucket. One sequential stream per seed; same seed, same
/// sequence.
SampleSummary draw(const DistributionTable &table, std::uint64_t draws, std::uint64_t seed);

/// Total detected photons per record, aggregated into a count histogram.
std::map<std::size_t, std::uint64_t> total_photon_histogram(
    const std::vector<SampleRecord> &records);

} // namespace gbs

#endif // GBS_SAMPLER_HPP
