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

#include "loqsim/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>

#include "loqsim/elements.hpp"
#include "loqsim/errors.hpp"

namespace loqsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_unit_interval(double value, const char *field) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw InvalidArgumentError(std::string(field) + " must lie in [0, 1], got " +
                                   std::to_string(value));
    }
}

}  // namespace

NoiseParams NoiseParams::ideal() {
    return NoiseParams{};
}

NoiseParams NoiseParams::calibration() {
    NoiseParams p;
    p.overlap_pbs = 0.95;
    p.overlap_bs1 = 0.95;
    p.overlap_bs2 = 0.95;
    p.pair23_fidelity = 0.95;
    p.pair45_fidelity = 0.91;
    p.input_state_fidelity = 0.92;
    p.oam_leakage = 0.02;
    p.background_weight = 0.15;
    p.lossy_elements = true;
    return p;
}

void NoiseParams::validate() const {
    for (size_t i = 0; i < mu_per_source.size(); ++i) {
        if (!(mu_per_source[i] >= 0.0)) {
            throw InvalidArgumentError("mu_per_source[" + std::to_string(i) +
                                       "] must be non-negative, got " +
                                       std::to_string(mu_per_source[i]));
        }
    }
    check_unit_interval(overlap_pbs, "overlap_pbs");
    check_unit_interval(overlap_bs1, "overlap_bs1");
    check_unit_interval(overlap_bs2, "overlap_bs2");
    check_unit_interval(pair23_fidelity, "pair23_fidelity");
    check_unit_interval(pair45_fidelity, "pair45_fidelity");
    check_unit_interval(input_state_fidelity, "input_state_fidelity");
    check_unit_interval(oam_leakage, "oam_leakage");
    check_unit_interval(background_weight, "background_weight");
}

namespace {

/// Applies the readout-stage decoherence channels to a normalized density.
Eigen::Matrix4cd report_stage_noise(Eigen::Matrix4cd rho, const NoiseParams &noise) {
    if (noise.oam_leakage > 0.0) {
        // Orbital decoherence: the OAM register is replaced by the
        // maximally mixed qubit with weight oam_leakage.
        Eigen::Matrix2cd rho_sam = Eigen::Matrix2cd::Zero();
        for (int s = 0; s < 2; ++s) {
            for (int t = 0; t < 2; ++t) {
                rho_sam(s, t) = rho(2 * s, 2 * t) + rho(2 * s + 1, 2 * t + 1);
            }
        }
        rho = (1.0 - noise.oam_leakage) * rho +
              noise.oam_leakage * kron(rho_sam, 0.5 * Eigen::Matrix2cd::Identity());
    }
    if (noise.background_weight > 0.0) {
        rho = (1.0 - noise.background_weight) * rho +
              noise.background_weight * 0.25 * Eigen::Matrix4cd::Identity();
    }
    return rho;
}

}  // namespace

TeleportReport run_teleportation(InputStateId input_id, const NoiseParams &noise) {
    noise.validate();

    const PureState trigger = PureState::vacuum().create_photons({ModeLabel{0, Pol::H, 0, 0}});
    const MixedState input =
        (input_id == InputStateId::E)
            ? noisy_input_state(input_id, 1, noise.input_state_fidelity)
            : MixedState(prepare_input_state(input_id, 1));
    const MixedState pair23 = noisy_hyper_pair(2, 3, noise.pair23_fidelity);
    const MixedState pair45 = noisy_oam_pair(4, 5, noise.pair45_fidelity);

    HbsmOptions options;
    options.ancilla_included = true;
    options.lossy_readout = noise.lossy_elements;
    options.overlap_pbs = noise.overlap_pbs;
    options.overlap_bs1 = noise.overlap_bs1;
    options.overlap_bs2 = noise.overlap_bs2;

    const std::array<HyperBellLabel, 2> labels = {
        HyperBellLabel{SamBell::PhiMinus, OamBell::OmegaPlus},
        HyperBellLabel{SamBell::PhiPlus, OamBell::OmegaMinus}};
    std::array<double, 2> outcome_probability{0.0, 0.0};
    std::array<Eigen::Matrix4cd, 2> outcome_rho{Eigen::Matrix4cd::Zero(),
                                                Eigen::Matrix4cd::Zero()};

    DetectionPattern trigger_pattern;
    trigger_pattern.require(0, 1);

    for (const auto &input_branch : input.branches()) {
        for (const auto &b23 : pair23.branches()) {
            for (const auto &b45 : pair45.branches()) {
                const double weight = input_branch.weight * b23.weight * b45.weight;
                if (weight <= kPruneEps) {
                    continue;
                }
                const PureState circuit = trigger.product(input_branch.state)
                                              .product(b23.state)
                                              .product(b45.state);
                const HbsmResult res = full_hbsm(circuit, 1, 2, 4, 5, options);
                for (const auto &sig : res.signatures) {
                    if (sig.probability <= kPruneEps) {
                        continue;
                    }
                    // Six-fold coincidence: the trigger must be present;
                    // stripping it leaves photon 3 alone.
                    const ProjectionResult stripped = project(sig.conditional, trigger_pattern);
                    if (stripped.probability <= kPruneEps) {
                        continue;
                    }
                    const QubitPairDensity d = extract_qubit_pair_density(stripped.conditional, 3);
                    const size_t which = (sig.label == labels[0]) ? 0 : 1;
                    const Eigen::Matrix4cd correction =
                        correction_matrix(correction_for_outcome(sig.label));
                    const double mass = weight * sig.probability * stripped.probability;
                    outcome_probability[which] += mass;
                    outcome_rho[which] += mass * (correction * d.rho * correction.adjoint());
                }
            }
        }
    }

    const double total = outcome_probability[0] + outcome_probability[1];
    if (total <= kPruneEps) {
        throw ZeroStateError("run_teleportation: no valid signature fires");
    }

    const Eigen::Vector4cd target = input_state_vector(input_id);
    TeleportReport report;
    report.input_id = input_id;
    report.success_probability = total;
    for (size_t i = 0; i < 2; ++i) {
        report.outcomes[i].outcome = labels[i];
        report.outcomes[i].probability = outcome_probability[i];
        if (outcome_probability[i] > kPruneEps) {
            const Eigen::Matrix4cd rho =
                report_stage_noise(outcome_rho[i] / outcome_probability[i], noise);
            report.outcomes[i].fidelity = (target.adjoint() * rho * target)(0).real();
        }
    }
    const Eigen::Matrix4cd rho_total =
        report_stage_noise((outcome_rho[0] + outcome_rho[1]) / total, noise);
    report.fidelity = (target.adjoint() * rho_total * target)(0).real();
    report.outcome = (outcome_probability[0] >= outcome_probability[1]) ? labels[0] : labels[1];
    PauliTriple triple;
    triple.xx = pauli_expectation(rho_total, PauliAxis::X, PauliAxis::X);
    triple.yy = pauli_expectation(rho_total, PauliAxis::Y, PauliAxis::Y);
    triple.zz = pauli_expectation(rho_total, PauliAxis::Z, PauliAxis::Z);
    report.pauli_expectations = triple;
    return report;
}

std::vector<TeleportReport> error_budget_eval(const NoiseParams &noise) {
    std::vector<TeleportReport> rows;
    rows.reserve(5);
    for (InputStateId id : all_input_ids()) {
        rows.push_back(run_teleportation(id, noise));
    }
    return rows;
}

std::string to_string(Interferometer which) {
    switch (which) {
        case Interferometer::Pbs:
            return "pbs";
        case Interferometer::Bs1:
            return "bs1";
        case Interferometer::Bs2:
            return "bs2";
    }
    return "pbs";
}

Interferometer interferometer_from_string(const std::string &s) {
    std::string lower;
    lower.reserve(s.size());
    for (char c : s) {
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (lower == "pbs") {
        return Interferometer::Pbs;
    }
    if (lower == "bs1") {
        return Interferometer::Bs1;
    }
    if (lower == "bs2") {
        return Interferometer::Bs2;
    }
    throw InvalidArgumentError("unknown interferometer '" + s + "' (expected pbs, bs1 or bs2)");
}

double overlap_at_delay(double delay_fs, double tau_fs, double max_overlap) {
    if (!(tau_fs > 0.0)) {
        throw InvalidArgumentError("coherence time must be positive");
    }
    check_unit_interval(max_overlap, "max_overlap");
    return max_overlap * std::exp(-delay_fs * delay_fs / (2.0 * tau_fs * tau_fs));
}

namespace {

/// Coincidence probability of two diagonal photons meeting on the PBS,
/// analyzed at +45 deg on output 1 and +-45 deg on output 2.
double pbs_coincidence(double overlap, bool parallel) {
    PureState in = PureState::vacuum().create_photons(
        {ModeLabel{1, Pol::H, 0, 0}, ModeLabel{2, Pol::H, 0, 0}});
    TransformSequence seq;
    seq.push(wave_plate(1, WavePlateKind::Half, kPi / 8));
    seq.push(wave_plate(2, WavePlateKind::Half, kPi / 8));
    if (overlap < 1.0) {
        seq.push(wavepacket_rotation(2, overlap, 1));
    }
    seq.push(polarizing_beam_splitter(1, 2, 1, 2));
    seq.push(polarizer(1, kPi / 4));
    seq.push(polarizer(2, parallel ? kPi / 4 : -kPi / 4));
    DetectionPattern coincidence;
    coincidence.require(1, 1).require(2, 1);
    return probability_of(seq.apply(in), coincidence);
}

/// Coincidence probability of two orthogonal orbital modes meeting on the
/// reflection-inverting beam splitter.
double bs_coincidence(double overlap) {
    PureState in = PureState::vacuum().create_photons(
        {ModeLabel{1, Pol::H, 1, 0}, ModeLabel{2, Pol::H, -1, 0}});
    TransformSequence seq;
    if (overlap < 1.0) {
        seq.push(wavepacket_rotation(2, overlap, 1));
    }
    seq.push(beam_splitter(1, 2, 1, 2));
    DetectionPattern coincidence;
    coincidence.require(1, 1).require(2, 1);
    return probability_of(seq.apply(in), coincidence);
}

}  // namespace

double visibility_at_overlap(Interferometer which, double overlap) {
    check_unit_interval(overlap, "overlap");
    if (which == Interferometer::Pbs) {
        const double c_perp = pbs_coincidence(overlap, /*parallel=*/false);
        const double c_par = pbs_coincidence(overlap, /*parallel=*/true);
        const double denom = c_perp + c_par;
        return denom > 0.0 ? (c_perp - c_par) / denom : 0.0;
    }
    const double c_zero = bs_coincidence(overlap);
    const double c_far = bs_coincidence(0.0);
    return c_far > 0.0 ? 1.0 - c_zero / c_far : 0.0;
}

double overlap_for_visibility(Interferometer which, double visibility, double tol) {
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw InvalidArgumentError("visibility must lie in [0, 1]");
    }
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (visibility_at_overlap(which, mid) < visibility) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

HomScanResult hom_scan(Interferometer which, const std::vector<double> &delays_fs, double tau_fs,
                       double max_overlap) {
    HomScanResult result;
    result.delays_fs = delays_fs;
    result.coincidences.reserve(delays_fs.size());
    for (double delay : delays_fs) {
        const double x = overlap_at_delay(delay, tau_fs, max_overlap);
        result.coincidences.push_back(which == Interferometer::Pbs
                                          ? pbs_coincidence(x, /*parallel=*/true)
                                          : bs_coincidence(x));
    }
    result.visibility = visibility_at_overlap(which, max_overlap);
    result.formula = (which == Interferometer::Pbs) ? HomFormula::DipPeak : HomFormula::Dip;
    return result;
}

std::vector<FeedForwardStep> feed_forward_plan(const HyperBellLabel &outcome) {
    const CorrectionEntry entry = correction_for_outcome(outcome);
    return {
        {FeedForwardKind::Modulator, entry.sam_op},
        {FeedForwardKind::Swap, PauliAxis::I},
        {FeedForwardKind::Modulator, entry.oam_op},
        {FeedForwardKind::Swap, PauliAxis::I},
    };
}

PureState apply_feed_forward(const PureState &in, int path,
                             const std::vector<FeedForwardStep> &plan) {
    PureState state = in;
    for (const FeedForwardStep &step : plan) {
        const ModeTransform op = (step.kind == FeedForwardKind::Modulator)
                                     ? pauli_sam(path, step.setting)
                                     : swap_gate(path);
        state = op.apply(state);
    }
    return state;
}

std::vector<long long> sample_counts(const std::vector<double> &probabilities, long long shots,
                                     std::uint64_t seed) {
    double total = 0.0;
    for (double p : probabilities) {
        if (p < 0.0) {
            throw InvalidArgumentError("sample_counts: negative probability");
        }
        total += p;
    }
    if (total > 1.0 + 1e-9) {
        throw InvalidArgumentError("sample_counts: probabilities sum to more than one");
    }
    if (shots < 0) {
        throw InvalidArgumentError("sample_counts: negative shot count");
    }
    std::vector<long long> counts(probabilities.size(), 0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (long long s = 0; s < shots; ++s) {
        double r = uniform(rng);
        for (size_t i = 0; i < probabilities.size(); ++i) {
            if (r < probabilities[i]) {
                ++counts[i];
                break;
            }
            r -= probabilities[i];
        }
        // Falling through every bucket is the no-detection remainder.
    }
    return counts;
}

}  // namespace loqsim
