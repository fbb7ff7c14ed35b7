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
//
// Drives the built binary end to end through a shell. GBS_CLI_PATH is
// injected by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gbs/sampler.hpp"
#include "gbs/serialization.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout only
};

RunResult run_cli(const std::string &args) {
    const std::string command = std::string(GBS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
        output.append(buffer, got);
    }
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string ones_matrix_file(std::size_t n, const std::string &path) {
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            row.push_back(json::array({1.0, 0.0}));
        }
        rows.push_back(row);
    }
    write_file(path, gbs::dump_envelope(rows));
    return path;
}

std::string first_line(const std::string &text) {
    return text.substr(0, text.find('\n'));
}

} // namespace

TEST_CASE("haf: counts matchings of the all-ones matrix") {
    const auto result = run_cli("haf " + ones_matrix_file(4, "cli_ones4.json"));
    CHECK(result.exit_code == 0);
    CHECK(first_line(result.output) == "3");
}

TEST_CASE("haf: two-by-two fixed value and odd-dimension zero") {
    write_file("cli_m2.json",
               gbs::dump_envelope(json::parse("[[[1,0],[2,0]],[[2,0],[3,0]]]")));
    auto result = run_cli("haf cli_m2.json");
    CHECK(result.exit_code == 0);
    CHECK(first_line(result.output) == "2");

    result = run_cli("haf " + ones_matrix_file(3, "cli_ones3.json"));
    CHECK(result.exit_code == 0);
    CHECK(first_line(result.output) == "0");
}

TEST_CASE("haf --check reports both algorithms and their difference") {
    const auto result = run_cli("haf --check --json " + ones_matrix_file(6, "cli_ones6.json"));
    CHECK(result.exit_code == 0);
    const json record = json::parse(result.output);
    CHECK(record["hafnian"][0] == 15.0);
    CHECK(record["recursive"][0] == 15.0);
    CHECK(record["difference"].get<double>() <= 1e-9 * 15.0);
}

TEST_CASE("haf: unreadable and malformed files exit 2, oversize exits 3") {
    CHECK(run_cli("haf cli_no_such_file.json").exit_code == 2);
    write_file("cli_bad.json", "this is not json\n");
    CHECK(run_cli("haf cli_bad.json").exit_code == 2);
    CHECK(run_cli("haf " + ones_matrix_file(18, "cli_ones18.json")).exit_code == 3);
}

TEST_CASE("--json errors arrive as JSON records on stderr") {
    // redirect stderr into the captured stream
    const std::string command =
        std::string(GBS_CLI_PATH) + " haf cli_no_such_file.json --json 2>&1 1>/dev/null";
    FILE *pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
        output.append(buffer, got);
    }
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 2);
    const json record = json::parse(output);
    CHECK(record.contains("error"));
    CHECK(record["error"]["type"] == "input");
    CHECK(record["error"]["message"].is_string());
}

TEST_CASE("prob: single squeezed mode, two photons") {
    const auto result = run_cli("prob --squeeze 0.5 --pattern 2");
    CHECK(result.exit_code == 0);
    const double value = std::stod(result.output);
    const double expected =
        std::pow(std::tanh(0.5), 2) / (2.0 * std::cosh(0.5));
    CHECK(value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("prob: all-zero pattern prints the vacuum overlap, odd pattern prints zero") {
    auto result = run_cli("prob --haar-seed 5 --squeeze 0.4,0.4 --pattern 0,0");
    CHECK(result.exit_code == 0);
    const double expected = 1.0 / (std::cosh(0.4) * std::cosh(0.4));
    CHECK(std::stod(result.output) == doctest::Approx(expected).epsilon(1e-12));

    result = run_cli("prob --haar-seed 5 --squeeze 0.4,0.4 --pattern 1,0");
    CHECK(result.exit_code == 0);
    CHECK(std::stod(result.output) == 0.0);
}

TEST_CASE("prob: dimension mismatch exits 2") {
    CHECK(run_cli("prob --squeeze 0.5,0.4 --pattern 2").exit_code == 2);
    // unitary file with the wrong mode count
    const auto unitary = run_cli("unitary --modes 3 --seed 4 --out cli_t3.json");
    CHECK(unitary.exit_code == 0);
    CHECK(run_cli("prob --unitary cli_t3.json --squeeze 0.5,0.4 --pattern 1,1").exit_code == 2);
}

TEST_CASE("prob --json emits a record with the probability") {
    const auto result = run_cli("prob --json --haar-seed 7 --squeeze 0.5,0.5 --pattern 1,1");
    CHECK(result.exit_code == 0);
    const json record = json::parse(result.output);
    CHECK(record["probability"].is_number());
    CHECK(record["haar_seed"] == 7);
    CHECK(record["pattern"] == json::parse("[1,1]"));
}

TEST_CASE("prob accepts a unitary produced by the unitary subcommand") {
    CHECK(run_cli("unitary --modes 2 --seed 12 --out cli_t2.json").exit_code == 0);
    const auto from_file =
        run_cli("prob --unitary cli_t2.json --squeeze 0.5,0.5 --pattern 1,1");
    const auto from_seed = run_cli("prob --haar-seed 12 --squeeze 0.5,0.5 --pattern 1,1");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.output == from_seed.output);
}

TEST_CASE("sample: reruns with identical flags are byte-identical") {
    const std::string base =
        "sample --squeeze 0.4,0.4,0,0 --haar-seed 21 --cutoff 6 --draws 2000 --sample-seed 9";
    CHECK(run_cli(base + " --out cli_s1.json").exit_code == 0);
    CHECK(run_cli(base + " --out cli_s2.json").exit_code == 0);
    CHECK(read_file("cli_s1.json") == read_file("cli_s2.json"));

    const json payload = gbs::load_envelope(read_file("cli_s1.json"));
    CHECK(payload.contains("table"));
    CHECK(payload.contains("samples"));
    CHECK(payload["samples"]["metadata"]["draws"] == 2000);
    CHECK(payload["table"]["metadata"]["haar_seed"] == 21);
}

TEST_CASE("sample: --draws 0 writes the table only") {
    CHECK(run_cli("sample --squeeze 0.5 --cutoff 8 --draws 0 --out cli_s3.json").exit_code ==
          0);
    const json payload = gbs::load_envelope(read_file("cli_s3.json"));
    CHECK(payload.contains("table"));
    CHECK(!payload.contains("samples"));
    CHECK(payload["table"]["entries"].size() == 5); // n = 0, 2, 4, 6, 8
}

TEST_CASE("sample: cutoff above the hafnian cap exits 3") {
    CHECK(run_cli("sample --squeeze 0.5 --cutoff 40 --out cli_s4.json").exit_code == 3);
}

TEST_CASE("sample: emitted histogram follows the pair-event law") {
    const auto result = run_cli(
        "sample --modes 4 --squeeze 0.4,0.4 --haar-seed 55 --cutoff 8 --draws 10000 "
        "--sample-seed 3 --out cli_s5.json");
    CHECK(result.exit_code == 0);
    const json payload = gbs::load_envelope(read_file("cli_s5.json"));
    const gbs::SampleSummary summary = gbs::samples_from_json(payload["samples"]);
    const auto histogram = gbs::total_photon_histogram(summary.records);
    const double r = 0.4;
    const double sech2 = 1.0 / (std::cosh(r) * std::cosh(r));
    const double t2 = std::pow(std::tanh(r), 2);
    for (std::size_t pairs = 0; pairs <= 3; ++pairs) {
        const double expected = sech2 * std::pow(t2, static_cast<double>(pairs));
        const auto it = histogram.find(2 * pairs);
        const double count =
            static_cast<double>(it == histogram.end() ? 0 : it->second);
        const double sigma = std::sqrt(expected * (1.0 - expected) * 10000.0);
        CHECK(std::abs(count - expected * 10000.0) <= 5.0 * sigma + 1e-9);
    }
}

TEST_CASE("prob: --modes pads the squeeze list with idle modes") {
    const auto padded = run_cli("prob --modes 4 --squeeze 0.4,0.4 --haar-seed 5 --pattern 1,1,0,0");
    const auto manual = run_cli("prob --squeeze 0.4,0.4,0,0 --haar-seed 5 --pattern 1,1,0,0");
    CHECK(padded.exit_code == 0);
    CHECK(padded.output == manual.output);
    CHECK(run_cli("prob --modes 1 --squeeze 0.4,0.4 --pattern 1").exit_code == 2);
}

TEST_CASE("compare: fixed small case and the large-K ratio") {
    auto result = run_cli("compare --json --photons 2 --squeezers 3 --squeeze 0.4");
    CHECK(result.exit_code == 0);
    json record = json::parse(result.output);
    CHECK(record["space_gbs"] == "6");
    CHECK(record["space_sbs"] == "36");

    result = run_cli("compare --json --photons 20 --squeezers 400 --squeeze 0.5");
    CHECK(result.exit_code == 0);
    record = json::parse(result.output);
    CHECK(record["ratio_asymptotic"].get<double>() == doctest::Approx(0.3769).epsilon(2e-4));
    CHECK(std::abs(record["ratio_exact"].get<double>() /
                       record["ratio_asymptotic"].get<double>() -
                   1.0) < 0.05);

    // K = 2, N = 1: the pair-event law is geometric
    result = run_cli("compare --json --photons 1 --squeezers 2 --squeeze 0.6");
    record = json::parse(result.output);
    const double expected = std::pow(std::tanh(0.6) / std::cosh(0.6), 2);
    CHECK(record["p_gbs"].get<double>() == doctest::Approx(expected).epsilon(1e-12));

    CHECK(run_cli("compare --photons 5 --squeezers 5 --squeeze 0.4").exit_code == 2);
}

TEST_CASE("unitary: deterministic output, COE flag gives a symmetric matrix") {
    const auto a = run_cli("unitary --modes 4 --seed 33");
    const auto b = run_cli("unitary --modes 4 --seed 33");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    const json payload = gbs::load_envelope(a.output);
    CHECK(payload["seed"] == 33);
    CHECK(payload["ensemble"] == "haar");
    CHECK(payload["modes"] == 4);

    const auto coe = run_cli("unitary --modes 4 --seed 33 --coe");
    const json coe_payload = gbs::load_envelope(coe.output);
    const gbs::ComplexMatrix c = gbs::matrix_from_json(coe_payload["t"]);
    CHECK(c.asymmetry() <= 1e-12);
}
