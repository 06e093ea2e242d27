// Copyright 2026 The loqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file loqsim.cpp
/// Command-line front end: canned experiments with structured reports.
///
/// Subcommands: teleport, bsm-table, hom, cascade, budget.
/// Exit codes: 0 success, 1 usage/config error, 2 degenerate scenario.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loqsim/loqsim.hpp"

namespace {

/// Scenario settings as read from a config file.  Every field is optional
/// so that command-line flags can override only what the file actually set.
struct FileConfig {
    std::map<std::string, std::string> values;  // dotted key -> raw value
    std::map<std::string, int> lines;           // dotted key -> line number
};

/// Parses a `key = value` config file with `#` comments and dotted keys
/// (e.g. `noise.background = 0.15`).  Throws loqsim::InvalidArgumentError
/// with a line diagnostic on malformed input.
FileConfig parse_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw loqsim::InvalidArgumentError("config: cannot open '" + path + "'");
    }
    FileConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) {
                return std::string();
            }
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw loqsim::InvalidArgumentError("config: line " + std::to_string(lineno) +
                                               ": expected 'key = value', got '" + stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw loqsim::InvalidArgumentError("config: line " + std::to_string(lineno) +
                                               ": empty key");
        }
        if (value.empty()) {
            throw loqsim::InvalidArgumentError("config: line " + std::to_string(lineno) +
                                               ": empty value for field '" + key + "'");
        }
        cfg.values[key] = value;
        cfg.lines[key] = lineno;
    }
    return cfg;
}

double config_double(const FileConfig &cfg, const std::string &key) {
    const std::string &raw = cfg.values.at(key);
    try {
        size_t used = 0;
        const double v = std::stod(raw, &used);
        if (used != raw.size()) {
            throw std::invalid_argument(raw);
        }
        return v;
    } catch (const std::exception &) {
        throw loqsim::InvalidArgumentError("config: line " + std::to_string(cfg.lines.at(key)) +
                                           ": field '" + key + "': expected a number, got '" +
                                           raw + "'");
    }
}

long long config_int(const FileConfig &cfg, const std::string &key) {
    const std::string &raw = cfg.values.at(key);
    try {
        size_t used = 0;
        const long long v = std::stoll(raw, &used);
        if (used != raw.size()) {
            throw std::invalid_argument(raw);
        }
        return v;
    } catch (const std::exception &) {
        throw loqsim::InvalidArgumentError("config: line " + std::to_string(cfg.lines.at(key)) +
                                           ": field '" + key + "': expected an integer, got '" +
                                           raw + "'");
    }
}

bool config_bool(const FileConfig &cfg, const std::string &key) {
    const std::string &raw = cfg.values.at(key);
    if (raw == "true" || raw == "1" || raw == "yes" || raw == "on") {
        return true;
    }
    if (raw == "false" || raw == "0" || raw == "no" || raw == "off") {
        return false;
    }
    throw loqsim::InvalidArgumentError("config: line " + std::to_string(cfg.lines.at(key)) +
                                       ": field '" + key + "': expected a boolean, got '" + raw +
                                       "'");
}

/// All settings for one invocation after merging defaults, config file and
/// command-line flags (flags win).
struct Scenario {
    std::string command;
    loqsim::ReportFormat format = loqsim::ReportFormat::Table;
    std::uint64_t seed = 0;
    std::string out_path;

    // teleport / budget
    std::string state = "A";
    bool all_states = false;
    bool ideal = false;
    loqsim::NoiseParams noise;  // budget defaults to the calibration preset
    long long shots = 0;

    // hom
    std::string interferometer = "bs1";
    double tau_fs = loqsim::kCoherenceTimeFs;
    double max_overlap = 1.0;
    double delay_min_fs = -1200.0;
    double delay_max_fs = 1200.0;
    double delay_step_fs = 100.0;

    // cascade
    int n = 3;
};

void apply_config_file(Scenario &s, const FileConfig &cfg) {
    static const std::map<std::string, int> known = {
        {"format", 0},        {"seed", 1},
        {"out", 2},           {"state", 3},
        {"all", 4},           {"ideal", 5},
        {"shots", 6},         {"noise.mu1", 7},
        {"noise.mu2", 8},     {"noise.mu3", 9},
        {"noise.overlap_pbs", 10},
        {"noise.overlap_bs1", 11},
        {"noise.overlap_bs2", 12},
        {"noise.pair23_fidelity", 13},
        {"noise.pair45_fidelity", 14},
        {"noise.input_state_fidelity", 15},
        {"noise.oam_leakage", 16},
        {"noise.background", 17},
        {"noise.lossy_elements", 18},
        {"hom.interferometer", 19},
        {"hom.tau_fs", 20},
        {"hom.max_overlap", 21},
        {"hom.delay_min_fs", 22},
        {"hom.delay_max_fs", 23},
        {"hom.delay_step_fs", 24},
        {"cascade.n", 25},
    };
    for (const auto &[key, raw] : cfg.values) {
        const auto it = known.find(key);
        if (it == known.end()) {
            throw loqsim::InvalidArgumentError("config: line " +
                                               std::to_string(cfg.lines.at(key)) +
                                               ": unknown field '" + key + "'");
        }
        switch (it->second) {
            case 0:
                try {
                    s.format = loqsim::report_format_from_string(raw);
                } catch (const loqsim::InvalidArgumentError &) {
                    throw loqsim::InvalidArgumentError(
                        "config: line " + std::to_string(cfg.lines.at(key)) +
                        ": field 'format': expected json, csv or table, got '" + raw + "'");
                }
                break;
            case 1:
                s.seed = static_cast<std::uint64_t>(config_int(cfg, key));
                break;
            case 2:
                s.out_path = raw;
                break;
            case 3:
                s.state = raw;
                break;
            case 4:
                s.all_states = config_bool(cfg, key);
                break;
            case 5:
                s.ideal = config_bool(cfg, key);
                break;
            case 6:
                s.shots = config_int(cfg, key);
                break;
            case 7:
                s.noise.mu_per_source[0] = config_double(cfg, key);
                break;
            case 8:
                s.noise.mu_per_source[1] = config_double(cfg, key);
                break;
            case 9:
                s.noise.mu_per_source[2] = config_double(cfg, key);
                break;
            case 10:
                s.noise.overlap_pbs = config_double(cfg, key);
                break;
            case 11:
                s.noise.overlap_bs1 = config_double(cfg, key);
                break;
            case 12:
                s.noise.overlap_bs2 = config_double(cfg, key);
                break;
            case 13:
                s.noise.pair23_fidelity = config_double(cfg, key);
                break;
            case 14:
                s.noise.pair45_fidelity = config_double(cfg, key);
                break;
            case 15:
                s.noise.input_state_fidelity = config_double(cfg, key);
                break;
            case 16:
                s.noise.oam_leakage = config_double(cfg, key);
                break;
            case 17:
                s.noise.background_weight = config_double(cfg, key);
                break;
            case 18:
                s.noise.lossy_elements = config_bool(cfg, key);
                break;
            case 19:
                s.interferometer = raw;
                break;
            case 20:
                s.tau_fs = config_double(cfg, key);
                break;
            case 21:
                s.max_overlap = config_double(cfg, key);
                break;
            case 22:
                s.delay_min_fs = config_double(cfg, key);
                break;
            case 23:
                s.delay_max_fs = config_double(cfg, key);
                break;
            case 24:
                s.delay_step_fs = config_double(cfg, key);
                break;
            case 25:
                s.n = static_cast<int>(config_int(cfg, key));
                break;
        }
    }
}

void emit(const Scenario &s, const std::string &text) {
    if (s.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(s.out_path, std::ios::binary);
    if (!out) {
        throw loqsim::InvalidArgumentError("cannot open output file '" + s.out_path + "'");
    }
    out << text;
}

std::vector<loqsim::InputStateId> requested_states(const Scenario &s) {
    if (s.all_states) {
        const auto ids = loqsim::all_input_ids();
        return {ids.begin(), ids.end()};
    }
    return {loqsim::input_id_from_string(s.state)};
}

int run_teleport_command(Scenario s) {
    if (s.ideal) {
        s.noise = loqsim::NoiseParams::ideal();
    }
    s.noise.validate();
    std::vector<loqsim::TeleportReport> records;
    for (loqsim::InputStateId id : requested_states(s)) {
        records.push_back(loqsim::run_teleportation(id, s.noise));
    }
    if (s.shots > 0) {
        loqsim::SampledCounts counts;
        counts.shots = s.shots;
        counts.seed = s.seed;
        for (size_t i = 0; i < records.size(); ++i) {
            const auto sampled = loqsim::sample_counts(
                {records[i].outcomes[0].probability, records[i].outcomes[1].probability},
                s.shots, s.seed + i);
            long long rest = s.shots - sampled[0] - sampled[1];
            counts.per_record.push_back({sampled[0], sampled[1], rest});
        }
        emit(s, loqsim::render_teleport(records, s.noise, s.format, &counts));
    } else {
        emit(s, loqsim::render_teleport(records, s.noise, s.format, nullptr));
    }
    return 0;
}

int run_budget_command(Scenario s) {
    if (s.ideal) {
        s.noise = loqsim::NoiseParams::ideal();
    }
    s.noise.validate();
    const auto records = loqsim::error_budget_eval(s.noise);
    emit(s, loqsim::render_budget(records, s.noise, s.format));
    return 0;
}

int run_bsm_table_command(const Scenario &s) {
    const auto pbs = loqsim::pbs_conformance_table();
    const auto bs = loqsim::bs_conformance_table();
    emit(s, loqsim::render_bsm_table(pbs, bs, s.format));
    return 0;
}

int run_hom_command(const Scenario &s) {
    const loqsim::Interferometer which = loqsim::interferometer_from_string(s.interferometer);
    if (s.tau_fs <= 0) {
        throw loqsim::InvalidArgumentError("hom: tau must be positive");
    }
    if (s.delay_step_fs <= 0 || s.delay_max_fs < s.delay_min_fs) {
        throw loqsim::InvalidArgumentError("hom: invalid delay grid");
    }
    std::vector<double> delays;
    for (double d = s.delay_min_fs; d <= s.delay_max_fs + 1e-9; d += s.delay_step_fs) {
        delays.push_back(d);
    }
    const auto scan = loqsim::hom_scan(which, delays, s.tau_fs, s.max_overlap);
    emit(s, loqsim::render_hom(scan, which, s.tau_fs, s.max_overlap, s.format));
    return 0;
}

int run_cascade_command(const Scenario &s) {
    const auto result = loqsim::run_cascade(s.n);
    emit(s, loqsim::render_cascade(result, s.format));
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"loqsim: exact multi-photon linear-optics simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string format_str;
    std::uint64_t seed = 0;
    std::string out_path;

    // Per-subcommand option holders; CLI11 counts tell us what was provided.
    struct Flags {
        std::string state;
        bool all = false;
        bool ideal = false;
        double background = 0.0;
        double overlap_pbs = 1.0;
        double overlap_bs1 = 1.0;
        double overlap_bs2 = 1.0;
        long long shots = 0;
        std::string interferometer;
        double tau_fs = loqsim::kCoherenceTimeFs;
        double max_overlap = 1.0;
        int n = 3;
    } flags;

    const auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--config", config_path, "key = value config file (flags override it)");
        cmd->add_option("--format", format_str, "Output format: json, csv or table");
        cmd->add_option("--seed", seed, "Random seed for sampled counts");
        cmd->add_option("--out", out_path, "Write the report to this file instead of stdout");
    };
    const auto add_noise = [&](CLI::App *cmd) {
        cmd->add_flag("--ideal", flags.ideal, "Use the ideal (noise-free) scenario");
        cmd->add_option("--background", flags.background, "Background white-noise weight in [0,1]");
        cmd->add_option("--overlap-pbs", flags.overlap_pbs,
                        "Wavepacket overlap at the polarizing beam splitter");
        cmd->add_option("--overlap-bs1", flags.overlap_bs1,
                        "Wavepacket overlap at the first ancilla beam splitter");
        cmd->add_option("--overlap-bs2", flags.overlap_bs2,
                        "Wavepacket overlap at the second ancilla beam splitter");
    };

    CLI::App *teleport = app.add_subcommand("teleport", "End-to-end teleportation of one photon");
    teleport->add_option("--state", flags.state, "Input state id: A, B, C, D or E");
    teleport->add_flag("--all", flags.all, "Run all five canned input states");
    teleport->add_option("--shots", flags.shots, "Sample illustrative counts from the outcome probabilities");
    add_noise(teleport);
    add_common(teleport);

    CLI::App *budget = app.add_subcommand(
        "budget", "Noise budget: all five inputs under the calibration preset");
    add_noise(budget);
    add_common(budget);

    CLI::App *bsm = app.add_subcommand("bsm-table", "Bell-state measurement conformance tables");
    add_common(bsm);

    CLI::App *hom = app.add_subcommand("hom", "Two-photon interference delay scan");
    hom->add_option("--interferometer", flags.interferometer,
                    "Which interferometer to scan: pbs, bs1 or bs2");
    hom->add_option("--tau", flags.tau_fs, "Coherence time in femtoseconds");
    hom->add_option("--max-overlap", flags.max_overlap, "Wavepacket overlap at zero delay");
    add_common(hom);

    CLI::App *cascade = app.add_subcommand("cascade", "N-degree-of-freedom cascade survivor counts");
    cascade->add_option("--n", flags.n, "Number of degrees of freedom (1..8)");
    add_common(cascade);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    try {
        Scenario s;
        CLI::App *cmd = app.get_subcommands().front();
        s.command = cmd->get_name();
        if (s.command == "budget") {
            s.noise = loqsim::NoiseParams::calibration();
        }
        if (!config_path.empty()) {
            apply_config_file(s, parse_config_file(config_path));
        }

        // Flags override the config file.
        const auto provided = [&](CLI::App *c, const std::string &name) {
            return c->count(name) > 0;
        };
        if (provided(cmd, "--format")) {
            s.format = loqsim::report_format_from_string(format_str);
        } else if (!format_str.empty()) {
            s.format = loqsim::report_format_from_string(format_str);
        }
        if (provided(cmd, "--seed")) {
            s.seed = seed;
        }
        if (provided(cmd, "--out")) {
            s.out_path = out_path;
        }
        if (s.command == "teleport" || s.command == "budget") {
            if (provided(cmd, "--ideal")) {
                s.ideal = flags.ideal;
            }
            if (provided(cmd, "--background")) {
                s.noise.background_weight = flags.background;
            }
            if (provided(cmd, "--overlap-pbs")) {
                s.noise.overlap_pbs = flags.overlap_pbs;
            }
            if (provided(cmd, "--overlap-bs1")) {
                s.noise.overlap_bs1 = flags.overlap_bs1;
            }
            if (provided(cmd, "--overlap-bs2")) {
                s.noise.overlap_bs2 = flags.overlap_bs2;
            }
        }
        if (s.command == "teleport") {
            if (provided(cmd, "--state")) {
                s.state = flags.state;
            }
            if (provided(cmd, "--all")) {
                s.all_states = flags.all;
            }
            if (provided(cmd, "--shots")) {
                s.shots = flags.shots;
            }
            if (!s.all_states && !provided(cmd, "--state") && s.state.empty()) {
                std::cerr << "teleport: need --state or --all\n";
                return 1;
            }
            return run_teleport_command(s);
        }
        if (s.command == "budget") {
            return run_budget_command(s);
        }
        if (s.command == "bsm-table") {
            return run_bsm_table_command(s);
        }
        if (s.command == "hom") {
            if (provided(cmd, "--interferometer")) {
                s.interferometer = flags.interferometer;
            }
            if (provided(cmd, "--tau")) {
                s.tau_fs = flags.tau_fs;
            }
            if (provided(cmd, "--max-overlap")) {
                s.max_overlap = flags.max_overlap;
            }
            return run_hom_command(s);
        }
        if (s.command == "cascade") {
            if (provided(cmd, "--n")) {
                s.n = flags.n;
            }
            return run_cascade_command(s);
        }
        std::cerr << "unknown command\n";
        return 1;
    } catch (const loqsim::ZeroStateError &e) {
        std::cerr << "degenerate scenario: " << e.what() << "\n";
        return 2;
    } catch (const loqsim::LoqsimError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
