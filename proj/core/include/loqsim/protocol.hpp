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

#ifndef LOQSIM_PROTOCOL_HPP
#define LOQSIM_PROTOCOL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loqsim/measurement.hpp"

namespace loqsim {

/// Gaussian coherence time of the down-converted photons, femtoseconds.
inline constexpr double kCoherenceTimeFs = 448.0;

/// Every imperfection knob of the end-to-end run.  All parameters live in
/// [0, 1] except the mean pair numbers, which are only required to be
/// non-negative.
struct NoiseParams {
    /// Mean photon pairs per pulse of the three parametric sources
    /// (trigger/input, resource pair, ancilla pair).  Double-pair emission
    /// enters the analytic pipeline through background_weight; the mu
    /// values feed the slow squeezed-source verification path.
    std::array<double, 3> mu_per_source{0.0, 0.0, 0.0};
    double overlap_pbs = 1.0;   ///< photon-1 wavepacket overlap at the PBS
    double overlap_bs1 = 1.0;   ///< ancilla overlap at the QND splitter
    double overlap_bs2 = 1.0;   ///< QND-output overlap at the final splitter
    double pair23_fidelity = 1.0;       ///< resource-pair white-noise fidelity
    double pair45_fidelity = 1.0;       ///< ancilla-pair white-noise fidelity
    double input_state_fidelity = 1.0;  ///< preparation fidelity (applies to E)
    double oam_leakage = 0.0;           ///< orbital decoherence weight at readout
    double background_weight = 0.0;     ///< white-noise admixture at readout
    bool lossy_elements = false;        ///< enable detector-channel crosstalk

    static NoiseParams ideal();
    /// Experiment-calibrated magnitudes of every channel at once.
    static NoiseParams calibration();
    /// Throws InvalidArgumentError naming the offending field.
    void validate() const;
};

struct OutcomeReport {
    HyperBellLabel outcome;
    double probability = 0.0;  ///< total over this outcome's fine signatures
    double fidelity = 0.0;     ///< corrected photon-3 fidelity to the ideal input
};

struct PauliTriple {
    double xx = 0.0;
    double yy = 0.0;
    double zz = 0.0;
};

struct TeleportReport {
    InputStateId input_id = InputStateId::A;
    /// Dominant identified outcome (ties resolve to (phi-, omega+)).
    HyperBellLabel outcome{SamBell::PhiMinus, OamBell::OmegaPlus};
    /// Probability that any valid six-fold signature fires (1/32 ideal).
    double success_probability = 0.0;
    /// Probability-weighted corrected fidelity over both outcomes.
    double fidelity = 0.0;
    std::optional<PauliTriple> pauli_expectations;
    /// Per-outcome breakdown: (phi-, omega+) then (phi+, omega-).
    std::array<OutcomeReport, 2> outcomes{};
};

/// Runs the six-photon scenario end to end: trigger + prepared photon 1,
/// the hyper-entangled resource pair (2,3), the orbital ancilla pair (4,5),
/// the three-stage hyper-Bell measurement, and photon-3 analysis with the
/// outcome correction applied.  Throws ZeroStateError when no signature
/// fires at all (a mis-wired circuit).
TeleportReport run_teleportation(InputStateId input_id, const NoiseParams &noise);

/// Runs all five canonical inputs under the same noise.
std::vector<TeleportReport> error_budget_eval(const NoiseParams &noise);

/// Which two-photon interference port a delay scan addresses.
enum class Interferometer { Pbs, Bs1, Bs2 };

std::string to_string(Interferometer which);
/// Parses "pbs" / "bs1" / "bs2" (case-insensitive); throws
/// InvalidArgumentError.
Interferometer interferometer_from_string(const std::string &s);

/// Visibility definition used by a scan: dip (V = 1 - C0/Cinf) or dip/peak
/// contrast (V = (C_perp - C_par)/(C_perp + C_par)).
enum class HomFormula { Dip, DipPeak };

struct HomScanResult {
    std::vector<double> delays_fs;
    std::vector<double> coincidences;
    double visibility = 0.0;
    HomFormula formula = HomFormula::Dip;
};

/// Wavepacket overlap of two photons at relative delay dt:
/// x = max_overlap * exp(-dt^2 / (2 tau^2)).
double overlap_at_delay(double delay_fs, double tau_fs, double max_overlap);

/// Simulated two-photon interference visibility at a given wavepacket
/// overlap: the PBS scenario interferes two diagonal photons and reports
/// the polarization dip/peak contrast; the BS scenarios interfere
/// orthogonal orbital modes and report the coincidence-dip visibility.
double visibility_at_overlap(Interferometer which, double overlap);

/// Inverts visibility_at_overlap by bisection (monotone in the overlap).
double overlap_for_visibility(Interferometer which, double visibility, double tol = 1e-9);

/// Delay scan: coincidence probability per delay plus the zero-delay
/// visibility.
HomScanResult hom_scan(Interferometer which, const std::vector<double> &delays_fs,
                       double tau_fs = kCoherenceTimeFs, double max_overlap = 1.0);

/// One feed-forward element: a fast polarization modulator applying a SAM
/// Pauli, or a SWAP-gate pass.
enum class FeedForwardKind { Modulator, Swap };

struct FeedForwardStep {
    FeedForwardKind kind = FeedForwardKind::Modulator;
    PauliAxis setting = PauliAxis::I;  ///< modulator Pauli (identity for Swap)
};

/// Active correction sequence for one measurement outcome:
/// [modulator sam-op] -> [swap] -> [modulator oam-op] -> [swap].  The
/// second modulator applies the orbital correction while the SWAP gates
/// hold the orbital qubit in the polarization register.
std::vector<FeedForwardStep> feed_forward_plan(const HyperBellLabel &outcome);

/// Applies the plan to the photon on `path`.
PureState apply_feed_forward(const PureState &in, int path,
                             const std::vector<FeedForwardStep> &plan);

/// Deterministic multinomial sampler for illustrative count tables.  The
/// probabilities may sum to less than one; the remainder is a silent
/// no-detection bucket.  Throws InvalidArgumentError on negative entries or
/// a sum above one.
std::vector<long long> sample_counts(const std::vector<double> &probabilities, long long shots,
                                     std::uint64_t seed);

}  // namespace loqsim

#endif  // LOQSIM_PROTOCOL_HPP
