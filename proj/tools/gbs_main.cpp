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
// Command-line front door. Every command is deterministic given its flags:
// all randomness is seeded explicitly, there is no wall-clock default.
// Exit codes: 0 success, 2 input/domain error, 3 resource cap exceeded.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbs/errors.hpp"
#include "gbs/hafnian.hpp"
#include "gbs/probability.hpp"
#include "gbs/random_ensembles.hpp"
#include "gbs/sampler.hpp"
#include "gbs/serialization.hpp"

namespace {

using nlohmann::json;

// All numeric text output uses 15 significant digits, lowercase scientific
// notation where needed.
std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.15g", value);
    return buffer;
}

std::string format_complex(gbs::Complex z) {
    if (z.imag() == 0.0) {
        return format_real(z.real());
    }
    const std::string im = format_real(std::abs(z.imag()));
    return format_real(z.real()) + (z.imag() < 0.0 ? " - " : " + ") + im + "i";
}

// Mode count comes from --modes when given, else from the unitary file, else
// from the squeeze list; the squeeze list may be shorter than M and is padded
// with idle (r = 0) modes.
struct Experiment {
    gbs::InterferometerUnitary t;
    gbs::SqueezeParams params;
};

Experiment resolve_experiment(const std::string &unitary_path,
                              std::optional<std::uint64_t> haar_seed,
                              std::optional<std::size_t> modes_flag,
                              std::vector<double> squeeze) {
    std::optional<gbs::InterferometerUnitary> from_file;
    if (!unitary_path.empty()) {
        const json payload = gbs::load_envelope(gbs::read_text_file(unitary_path));
        from_file = gbs::unitary_from_json(payload);
    }
    const std::size_t modes =
        modes_flag.value_or(from_file ? from_file->modes() : squeeze.size());
    if (squeeze.size() > modes) {
        throw gbs::DimensionError("squeeze list has " + std::to_string(squeeze.size()) +
                                  " entries for " + std::to_string(modes) + " modes");
    }
    squeeze.resize(modes, 0.0);
    if (from_file) {
        if (from_file->modes() != modes) {
            throw gbs::DimensionError("unitary has " + std::to_string(from_file->modes()) +
                                      " modes, expected " + std::to_string(modes));
        }
        return {std::move(*from_file), gbs::SqueezeParams(std::move(squeeze))};
    }
    if (haar_seed) {
        return {gbs::haar_unitary(modes, *haar_seed), gbs::SqueezeParams(std::move(squeeze))};
    }
    return {gbs::InterferometerUnitary(gbs::ComplexMatrix::identity(modes)),
            gbs::SqueezeParams(std::move(squeeze))};
}

struct HafArgs {
    std::string matrix_path;
    bool check = false;
};

int run_haf(const HafArgs &args, bool as_json) {
    const json payload = gbs::load_envelope(gbs::read_text_file(args.matrix_path));
    const gbs::ComplexMatrix m = gbs::matrix_from_json(payload);
    const gbs::Complex value = gbs::hafnian_pmp(m);
    json record{{"hafnian", gbs::complex_to_json(value)}};
    std::string text = format_complex(value);
    if (args.check) {
        const gbs::Complex recursive = gbs::hafnian_recursive(m);
        const double difference = std::abs(value - recursive);
        record["recursive"] = gbs::complex_to_json(recursive);
        record["difference"] = difference;
        text += "\nrecursive: " + format_complex(recursive) +
                "\ndifference: " + format_real(difference);
    }
    if (as_json) {
        std::cout << record.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
    return 0;
}

struct ProbArgs {
    std::string unitary_path;
    std::optional<std::uint64_t> haar_seed;
    std::optional<std::size_t> modes;
    std::vector<double> squeeze;
    std::vector<int> pattern;
};

int run_prob(const ProbArgs &args, bool as_json) {
    auto [t, params] =
        resolve_experiment(args.unitary_path, args.haar_seed, args.modes, args.squeeze);
    const gbs::PhotonPattern pattern(args.pattern);
    const std::string note = gbs::rank_deficiency_note(params, pattern);
    if (!note.empty()) {
        std::cerr << "note: " << note << "\n";
    }
    const double p = gbs::pattern_probability_squeezed(t, params, pattern);
    if (as_json) {
        json record{{"probability", p},
                    {"pattern", gbs::pattern_to_json(pattern)},
                    {"squeeze", params.r},
                    {"modes", params.modes()}};
        if (args.haar_seed) {
            record["haar_seed"] = *args.haar_seed;
        }
        std::cout << record.dump() << "\n";
    } else {
        std::cout << format_real(p) << "\n";
    }
    return 0;
}

struct SampleArgs {
    std::string unitary_path;
    std::optional<std::uint64_t> haar_seed;
    std::optional<std::size_t> modes;
    std::vector<double> squeeze;
    std::size_t cutoff = 8;
    std::optional<std::size_t> max_per_mode;
    std::uint64_t draws = 0;
    std::uint64_t sample_seed = 0;
    std::string out_path;
};

int run_sample(const SampleArgs &args, bool as_json) {
    auto [t, params] =
        resolve_experiment(args.unitary_path, args.haar_seed, args.modes, args.squeeze);
    const std::size_t per_mode = args.max_per_mode.value_or(args.cutoff);
    const gbs::DistributionTable table =
        gbs::build_distribution(t, params, args.cutoff, per_mode, args.haar_seed);
    json payload{{"table", gbs::table_to_json(table)}};
    if (args.draws > 0) {
        const gbs::SampleSummary summary = gbs::draw(table, args.draws, args.sample_seed);
        payload["samples"] = gbs::samples_to_json(summary);
    }
    gbs::write_text_file(args.out_path, gbs::dump_envelope(payload));
    if (as_json) {
        std::cout << json{{"written", args.out_path},
                          {"entries", table.entries.size()},
                          {"residual_tail_bound", table.residual}}
                         .dump()
                  << "\n";
    }
    return 0;
}

struct CompareArgs {
    std::size_t photons = 0;
    std::size_t squeezers = 0;
    double squeeze = 0.0;
};

int run_compare(const CompareArgs &args, bool as_json) {
    const double p_gbs =
        gbs::ppe_distribution({args.squeezers, args.squeeze, args.photons});
    const double p_pfbs = gbs::pfbs_probability(args.squeezers, args.photons, args.squeeze);
    const gbs::GenerationRatio ratio = gbs::generation_ratio(args.squeezers, args.photons);
    const gbs::SamplingSpaceSizes sizes = gbs::sampling_space_sizes(args.photons);
    if (as_json) {
        std::cout << json{{"p_gbs", p_gbs},
                          {"p_pfbs", p_pfbs},
                          {"ratio_exact", ratio.exact},
                          {"ratio_asymptotic", ratio.asymptotic},
                          {"space_gbs", sizes.gbs.to_string()},
                          {"space_sbs", sizes.sbs.to_string()}}
                         .dump()
                  << "\n";
        return 0;
    }
    std::cout << "P_gbs(N)          " << format_real(p_gbs) << "\n"
              << "P_pfbs(N)         " << format_real(p_pfbs) << "\n"
              << "ratio exact       " << format_real(ratio.exact) << "\n"
              << "ratio asymptotic  " << format_real(ratio.asymptotic) << "\n"
              << "space gbs         " << sizes.gbs.to_string() << "\n"
              << "space sbs         " << sizes.sbs.to_string() << "\n";
    return 0;
}

struct UnitaryArgs {
    std::size_t modes = 0;
    std::uint64_t seed = 0;
    bool coe = false;
    std::string out_path;
};

int run_unitary(const UnitaryArgs &args, bool as_json) {
    json payload;
    if (args.coe) {
        const gbs::ComplexMatrix c = gbs::coe_matrix(args.modes, args.seed);
        payload = json{{"modes", args.modes},
                       {"t", gbs::matrix_to_json(c)},
                       {"seed", args.seed},
                       {"ensemble", "coe"}};
    } else {
        const gbs::InterferometerUnitary t = gbs::haar_unitary(args.modes, args.seed);
        payload = gbs::unitary_to_json(t, args.seed);
        payload["ensemble"] = "haar";
    }
    const std::string text = gbs::dump_envelope(payload);
    if (args.out_path.empty()) {
        std::cout << text;
    } else {
        gbs::write_text_file(args.out_path, text);
        if (as_json) {
            std::cout << json{{"written", args.out_path}}.dump() << "\n";
        }
    }
    return 0;
}

void report_error(bool as_json, const std::string &type, const std::string &message) {
    if (as_json) {
        std::cerr << json{{"error", {{"type", type}, {"message", message}}}}.dump() << "\n";
    } else {
        std::cerr << "error: " << message << "\n";
    }
}

} // namespace

int main(int argc, char **argv) {
    bool as_json = false;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--json") {
            as_json = true;
        }
    }

    CLI::App app{"Exact Gaussian boson sampling toolkit"};
    app.require_subcommand(1);
    app.add_flag("--json", as_json, "machine-readable output and errors");

    HafArgs haf;
    CLI::App *haf_cmd = app.add_subcommand(
        "haf", "hafnian of a symmetric matrix read from a JSON file");
    haf_cmd->fallthrough();
    haf_cmd->add_option("matrix", haf.matrix_path, "matrix file")->required();
    haf_cmd->add_flag("--check", haf.check, "also run the first-row expansion and report"
                                            " the difference");

    ProbArgs prob;
    std::uint64_t prob_seed = 0;
    std::size_t prob_modes = 0;
    CLI::App *prob_cmd = app.add_subcommand(
        "prob", "probability of one output photon pattern from squeezed inputs");
    prob_cmd->fallthrough();
    prob_cmd->add_option("--unitary", prob.unitary_path, "interferometer file {modes, t}");
    CLI::Option *prob_seed_opt = prob_cmd->add_option(
        "--haar-seed", prob_seed, "draw the interferometer from the Haar measure");
    CLI::Option *prob_modes_opt = prob_cmd->add_option(
        "--modes", prob_modes, "mode count (default: from the unitary or squeeze list)");
    prob_cmd->add_option("--squeeze", prob.squeeze,
                         "squeezing strengths, padded with idle modes up to --modes")
        ->required()
        ->delimiter(',');
    prob_cmd->add_option("--pattern", prob.pattern, "photon counts per output mode")
        ->required()
        ->delimiter(',');
    prob_cmd->footer("Without --unitary or --haar-seed the interferometer is the identity.");

    SampleArgs sample;
    std::uint64_t sample_haar_seed = 0;
    std::size_t sample_modes = 0;
    CLI::App *sample_cmd = app.add_subcommand(
        "sample", "tabulate the output distribution and draw seeded samples");
    sample_cmd->fallthrough();
    sample_cmd->add_option("--unitary", sample.unitary_path, "interferometer file {modes, t}");
    CLI::Option *sample_seed_opt = sample_cmd->add_option(
        "--haar-seed", sample_haar_seed, "draw the interferometer from the Haar measure");
    CLI::Option *sample_modes_opt = sample_cmd->add_option(
        "--modes", sample_modes, "mode count (default: from the unitary or squeeze list)");
    sample_cmd->add_option("--squeeze", sample.squeeze,
                           "squeezing strengths, padded with idle modes up to --modes")
        ->required()
        ->delimiter(',');
    sample_cmd->add_option("--cutoff", sample.cutoff, "largest total photon number tabulated");
    std::size_t per_mode_value = 0;
    CLI::Option *per_mode_opt = sample_cmd->add_option(
        "--max-per-mode", per_mode_value, "per-mode photon cap (default: --cutoff)");
    sample_cmd->add_option("--draws", sample.draws, "number of samples (0: table only)");
    sample_cmd->add_option("--sample-seed", sample.sample_seed, "seed for the draw stream");
    sample_cmd->add_option("--out", sample.out_path, "output file")->required();

    CompareArgs compare;
    CLI::App *compare_cmd = app.add_subcommand(
        "compare", "generation probabilities and sampling-space sizes across protocols");
    compare_cmd->fallthrough();
    compare_cmd->add_option("--photons", compare.photons, "pair events N")->required();
    compare_cmd->add_option("--squeezers", compare.squeezers, "source count K")->required();
    compare_cmd->add_option("--squeeze", compare.squeeze, "common squeezing strength r")
        ->required();

    UnitaryArgs unitary;
    CLI::App *unitary_cmd = app.add_subcommand(
        "unitary", "emit a seeded Haar-random unitary or COE matrix");
    unitary_cmd->fallthrough();
    unitary_cmd->add_option("--modes", unitary.modes, "matrix dimension")->required();
    unitary_cmd->add_option("--seed", unitary.seed, "generator seed")->required();
    unitary_cmd->add_flag("--coe", unitary.coe, "emit T T^t instead of T");
    unitary_cmd->add_option("--out", unitary.out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        report_error(as_json, "cli", e.what());
        return 2;
    }

    try {
        if (haf_cmd->parsed()) {
            return run_haf(haf, as_json);
        }
        if (prob_cmd->parsed()) {
            if (prob_seed_opt->count() > 0) {
                prob.haar_seed = prob_seed;
            }
            if (prob_modes_opt->count() > 0) {
                prob.modes = prob_modes;
            }
            return run_prob(prob, as_json);
        }
        if (sample_cmd->parsed()) {
            if (sample_seed_opt->count() > 0) {
                sample.haar_seed = sample_haar_seed;
            }
            if (sample_modes_opt->count() > 0) {
                sample.modes = sample_modes;
            }
            if (per_mode_opt->count() > 0) {
                sample.max_per_mode = per_mode_value;
            }
            return run_sample(sample, as_json);
        }
        if (compare_cmd->parsed()) {
            return run_compare(compare, as_json);
        }
        if (unitary_cmd->parsed()) {
            return run_unitary(unitary, as_json);
        }
    } catch (const gbs::ResourceLimitError &e) {
        report_error(as_json, "resource", e.what());
        return 3;
    } catch (const gbs::Error &e) {
        report_error(as_json, "input", e.what());
        return 2;
    } catch (const std::exception &e) {
        report_error(as_json, "internal", e.what());
        return 1;
    }
    return 0;
}
