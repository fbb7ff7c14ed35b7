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

#ifndef GBS_SERIALIZATION_HPP
#define GBS_SERIALIZATION_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "gbs/complex_matrix.hpp"
#include "gbs/gaussian_state.hpp"
#include "gbs/probability.hpp"
#include "gbs/sampler.hpp"

namespace gbs {

// Shared wire format, used identically by every module and the CLI:
//   complex scalar   [re, im]
//   matrix           array of row arrays
//   photon pattern   array of integers
//   file             {"schema_version": 1, "payload": ...}
// Malformed input raises ParseError.

inline constexpr int kSchemaVersion = 1;

nlohmann::json complex_to_json(const Complex &z);
Complex complex_from_json(const nlohmann::json &j);

nlohmann::json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const nlohmann::json &j);

nlohmann::json pattern_to_json(const PhotonPattern &p);
PhotonPattern pattern_from_json(const nlohmann::json &j);

/// {"modes": M, "t": rows, "seed": s?}; the seed records how the unitary was
/// generated and is absent for explicit matrices.
nlohmann::json unitary_to_json(const InterferometerUnitary &t,
                               std::optional<std::uint64_t> seed = std::nullopt);
InterferometerUnitary unitary_from_json(const nlohmann::json &j);

/// {"modes": M, "sigma": rows}
nlohmann::json state_to_json(const GaussianState &state);
GaussianState state_from_json(const nlohmann::json &j);

nlohmann::json table_to_json(const DistributionTable &table);
DistributionTable table_from_json(const nlohmann::json &j);

nlohmann::json samples_to_json(const SampleSummary &summary);
SampleSummary samples_from_json(const nlohmann::json &j);

/// Wraps a payload in the versioned envelope and serializes it. The output
/// is fully deterministic: keys are sorted and numbers use the shortest
/// round-trip representation.
std::string dump_envelope(const nlohmann::json &payload);

/// Parses an envelope, checks the schema version, returns the payload.
nlohmann::json load_envelope(const std::string &text);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

} // namespace gbs

#endif // GBS_SERIALIZATION_HPP
