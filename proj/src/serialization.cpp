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

#include "gbs/serialization.hpp"

#include <fstream>
#include <sstream>

#include "gbs/errors.hpp"

namespace gbs {

using nlohmann::json;

namespace {

double number_from_json(const json &j, const char *what) {
    if (!j.is_number()) {
        throw ParseError(std::string("expected a number for ") + what);
    }
    return j.get<double>();
}

} // namespace

json complex_to_json(const Complex &z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("complex scalar must be a two-element array [re, im]");
    }
    return Complex(number_from_json(j[0], "real part"), number_from_json(j[1], "imaginary part"));
}

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_array()) {
        throw ParseError("matrix must be an array of row arrays");
    }
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Complex> entries;
    for (std::size_t i = 0; i < rows; ++i) {
        const json &row = j[i];
        if (!row.is_array()) {
            throw ParseError("matrix row " + std::to_string(i) + " is not an array");
        }
        if (i == 0) {
            cols = row.size();
            entries.reserve(rows * cols);
        } else if (row.size() != cols) {
            throw ParseError("matrix row " + std::to_string(i) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(cols));
        }
        for (const json &cell : row) {
            entries.push_back(complex_from_json(cell));
        }
    }
    try {
        return ComplexMatrix(rows, cols, std::move(entries));
    } catch (const Error &e) {
        throw ParseError(std::string("invalid matrix: ") + e.what());
    }
}

json pattern_to_json(const PhotonPattern &p) { return json(p.occupations); }

PhotonPattern pattern_from_json(const json &j) {
    if (!j.is_array()) {
        throw ParseError("pattern must be an array of integers");
    }
    std::vector<int> occupations;
    occupations.reserve(j.size());
    for (const json &cell : j) {
        if (!cell.is_number_integer()) {
            throw ParseError("pattern entries must be integers");
        }
        occupations.push_back(cell.get<int>());
    }
    try {
        return PhotonPattern(std::move(occupations));
    } catch (const Error &e) {
        throw ParseError(std::string("invalid pattern: ") + e.what());
    }
}

json unitary_to_json(const InterferometerUnitary &t, std::optional<std::uint64_t> seed) {
    json j{{"modes", t.modes()}, {"t", matrix_to_json(t.matrix())}};
    if (seed) {
        j["seed"] = *seed;
    }
    return j;
}

InterferometerUnitary unitary_from_json(const json &j) {
    if (!j.is_object() || !j.contains("modes") || !j.contains("t")) {
        throw ParseError("unitary record must be {modes, t}");
    }
    ComplexMatrix t = matrix_from_json(j["t"]);
    if (!j["modes"].is_number_integer() || j["modes"].get<std::size_t>() != t.rows()) {
        throw ParseError("unitary mode count does not match the matrix");
    }
    try {
        return InterferometerUnitary(std::move(t));
    } catch (const Error &e) {
        throw ParseError(std::string("invalid unitary: ") + e.what());
    }
}

json state_to_json(const GaussianState &state) {
    return json{{"modes", state.modes()}, {"sigma", matrix_to_json(state.sigma())}};
}

GaussianState state_from_json(const json &j) {
    if (!j.is_object() || !j.contains("modes") || !j.contains("sigma")) {
        throw ParseError("state record must be {modes, sigma}");
    }
    ComplexMatrix sigma = matrix_from_json(j["sigma"]);
    const std::size_t modes = j["modes"].get<std::size_t>();
    try {
        return GaussianState(modes, std::move(sigma));
    } catch (const Error &e) {
        throw ParseError(std::string("invalid state: ") + e.what());
    }
}

json table_to_json(const DistributionTable &table) {
    json entries = json::array();
    for (const TableEntry &entry : table.entries) {
        entries.push_back(json{{"pattern", pattern_to_json(entry.pattern)},
                               {"probability", entry.probability}});
    }
    json metadata{{"modes", table.metadata.modes},
                  {"squeeze", table.metadata.squeeze},
                  {"max_total", table.metadata.max_total},
                  {"max_per_mode", table.metadata.max_per_mode}};
    if (table.metadata.haar_seed) {
        metadata["haar_seed"] = *table.metadata.haar_seed;
    }
    return json{{"entries", std::move(entries)},
                {"residual_tail_bound", table.residual},
                {"metadata", std::move(metadata)}};
}

DistributionTable table_from_json(const json &j) {
    if (!j.is_object() || !j.contains("entries") || !j.contains("residual_tail_bound")) {
        throw ParseError("table record must contain entries and residual_tail_bound");
    }
    DistributionTable table;
    for (const json &entry : j["entries"]) {
        if (!entry.contains("pattern") || !entry.contains("probability")) {
            throw ParseError("table entries must be {pattern, probability}");
        }
        table.entries.push_back({pattern_from_json(entry["pattern"]),
                                 number_from_json(entry["probability"], "probability")});
    }
    table.residual = number_from_json(j["residual_tail_bound"], "residual_tail_bound");
    if (j.contains("metadata")) {
        const json &meta = j["metadata"];
        table.metadata.modes = meta.value("modes", std::size_t(0));
        table.metadata.squeeze = meta.value("squeeze", std::vector<double>{});
        table.metadata.max_total = meta.value("max_total", std::size_t(0));
        table.metadata.max_per_mode = meta.value("max_per_mode", std::size_t(0));
        if (meta.contains("haar_seed")) {
            table.metadata.haar_seed = meta["haar_seed"].get<std::uint64_t>();
        }
    }
    return table;
}

json samples_to_json(const SampleSummary &summary) {
    json records = json::array();
    for (const SampleRecord &record : summary.records) {
        records.push_back(
            json{{"pattern", pattern_to_json(record.pattern)}, {"count", record.count}});
    }
    return json{{"records", std::move(records)},
                {"metadata", json{{"seed", summary.seed},
                                  {"draws", summary.total_draws},
                                  {"residual_draws", summary.residual_draws}}}};
}

SampleSummary samples_from_json(const json &j) {
    if (!j.is_object() || !j.contains("records") || !j.contains("metadata")) {
        throw ParseError("sample record must contain records and metadata");
    }
    SampleSummary summary;
    for (const json &record : j["records"]) {
        if (!record.contains("pattern") || !record.contains("count")) {
            throw ParseError("sample records must be {pattern, count}");
        }
        summary.records.push_back(
            {pattern_from_json(record["pattern"]), record["count"].get<std::uint64_t>()});
    }
    const json &meta = j["metadata"];
    summary.seed = meta.value("seed", std::uint64_t(0));
    summary.total_draws = meta.value("draws", std::uint64_t(0));
    summary.residual_draws = meta.value("residual_draws", std::uint64_t(0));
    return summary;
}

std::string dump_envelope(const json &payload) {
    const json envelope{{"schema_version", kSchemaVersion}, {"payload", payload}};
    return envelope.dump(2) + "\n";
}

json load_envelope(const std::string &text) {
    json envelope;
    try {
        envelope = json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!envelope.is_object() || !envelope.contains("schema_version") ||
        !envelope.contains("payload")) {
        throw ParseError("file must be {schema_version, payload}");
    }
    if (envelope["schema_version"].get<int>() != kSchemaVersion) {
        throw ParseError("unsupported schema_version " + envelope["schema_version"].dump());
    }
    return envelope["payload"];
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << content;
}

} // namespace gbs
