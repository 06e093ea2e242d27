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

#ifndef LOQSIM_MEASUREMENT_HPP
#define LOQSIM_MEASUREMENT_HPP

#include <array>
#include <optional>
#include <vector>

#include "loqsim/detection.hpp"
#include "loqsim/sources.hpp"
#include "loqsim/transform.hpp"

namespace loqsim {

/// Ideal probability that a dual-channel readout reports the correct
/// channel; in lossy mode the complement leaks into the wrong channel
/// (record-level crosstalk).
inline constexpr double kReadoutAccuracy = 0.97;

/// Pauli pair undoing one hyper-Bell measurement outcome.  The conditional
/// teleported state equals phase * (sigma_sam (x) sigma_oam) |input>, so
/// applying (sigma_sam (x) sigma_oam) recovers the input up to the recorded
/// global phase.
struct CorrectionEntry {
    HyperBellLabel outcome;
    PauliAxis sam_op;
    PauliAxis oam_op;
    cplx phase;
};

/// The 16-entry correction map.
CorrectionEntry correction_for_outcome(const HyperBellLabel &outcome);

/// 4x4 matrix of the correction (sigma_sam (x) sigma_oam), SAM factor first.
Eigen::Matrix4cd correction_matrix(const CorrectionEntry &entry);

struct DecompositionRow {
    HyperBellLabel outcome;
    double probability;          ///< projection probability (1/16 ideal)
    double corrected_fidelity;   ///< photon-3 fidelity to the input after correction
};

/// Expands |phi>_1 |xi>_23 in the hyper-Bell basis of photons (1, 2):
/// projection probabilities and corrected photon-3 fidelities per outcome.
/// `input` is the photon-1 state as a two-qubit vector.
std::vector<DecompositionRow> hyper_bell_decompose(const Eigen::Vector4cd &input);

/// First h-BSM stage: polarizing beam splitter on (path1, path2), both
/// outputs through 45-degree polarizers, then half-wave plates resetting the
/// transmitted diagonal polarization back to H; conditioned on one photon
/// in each output.
struct SamBsmStageResult {
    /// Headline per-stage efficiency: pass_probability scaled by the 1/4
    /// weight an equally-likely Bell ensemble assigns to each orbital
    /// family (1/8 for every surviving hyper-Bell state, 0 otherwise).
    double efficiency = 0.0;
    /// Exact conditional probability of the coincidence record for this
    /// specific input (1/2 for each of the four survivors).
    double pass_probability = 0.0;
    bool survives = false;
    /// Normalized post-stage state: photons continue on (path1, path2) with
    /// SAM reset to H and the orbital Bell state intact.  Empty when the
    /// stage annihilates the input.
    PureState conditional;
};

SamBsmStageResult sam_bsm_stage(const PureState &in, int path1, int path2);

/// Dual-channel orbital readout circuit: the Sagnac sorter copies the
/// orbital qubit onto the polarization, and a polarizing beam splitter
/// routes l = +1 to `plus_path` and l = -1 to `minus_path`.  `minus_path`
/// must be vacant; detectors sit on the two channel paths.
ModeTransform dual_channel_oam_readout(int path, int plus_path, int minus_path);

struct ChannelProbabilities {
    double p_plus = 0.0;
    double p_minus = 0.0;
};

/// Channel statistics of a readout on a single-photon orbital qubit.  In
/// lossy mode each record flips to the other channel with probability
/// 1 - kReadoutAccuracy (crosstalk), so a pure |0>o photon reports "+1"
/// with probability kReadoutAccuracy instead of 1.
ChannelProbabilities channel_probabilities(const PureState &single_photon, int path,
                                           bool lossy = false);

/// One detection record of an orbital Bell analyzer (a beam splitter
/// followed by dual-channel readouts on both outputs).
struct OamRecord {
    OamBell bell_class;           ///< omega+ or omega-
    std::array<int, 4> counts;    ///< (plus_a, minus_a, plus_b, minus_b)
};

/// The four herald records of the orbital Bell analyzer on two paths:
/// omega- heralds as a coincidence with equal channels, omega+ as two
/// photons in one output with orthogonal channels.
std::vector<OamRecord> oam_analyzer_records();

/// Teleportation-based QND detection: the incoming photon on `in_path`
/// meets one half of an ancillary omega+ pair on a beam splitter, both
/// outputs are read out in the orbital basis, and a valid record heralds
/// the photon while its orbital qubit continues on `out_path` (the other
/// ancilla arm).  The omega- record class teleports Z|u>; the branch
/// conditionals below have the Pauli correction already applied.
struct QndBranch {
    OamBell outcome;        ///< record class (omega+ or omega-)
    std::array<int, 4> counts;
    double probability;     ///< this fine record (1/8 ideal, photon present)
    MixedState conditional; ///< corrected state of the remaining paths
};

struct QndResult {
    double herald_probability = 0.0;  ///< sum over records (1/2 ideal)
    std::vector<QndBranch> branches;
};

/// `in` must already contain the photon under test; the ancilla pair is
/// created internally on (ancilla_in, out_path).
QndResult qnd_teleport(const PureState &in, int in_path, int ancilla_in, int out_path);

/// Second orbital Bell-analyzer stage (between the retained stage-1 photon
/// and the QND output photon).
enum class OamBsmOutcome { OmegaPlus, OmegaMinus, None };

struct OamBsmResult {
    OamBsmOutcome outcome = OamBsmOutcome::None;
    double probability = 0.0;           ///< total probability of the winning class
    double probability_omega_plus = 0.0;
    double probability_omega_minus = 0.0;
    MixedState conditional;             ///< unmeasured remainder for the winning class
};

OamBsmResult oam_bsm_stage(const PureState &in, int path_a, int path_b);

/// One full fine signature of the three-stage pipeline: a QND record on the
/// (path1, ancilla_in) analyzer channels plus a record on the
/// (path2, qnd_out) analyzer channels.
struct HbsmSignature {
    HyperBellLabel label;          ///< hyper-Bell state this signature identifies
    OamBell qnd_class;
    OamBell stage3_class;
    std::array<int, 4> qnd_counts;
    std::array<int, 4> stage3_counts;
    double probability = 0.0;
    MixedState conditional;        ///< remainder (unmeasured paths), normalized
};

struct HbsmOptions {
    bool lossy_readout = false;    ///< apply record-level channel crosstalk
    double overlap_pbs = 1.0;      ///< photon-1 wavepacket overlap at the PBS
    double overlap_bs1 = 1.0;      ///< ancilla overlap at the QND splitter
    double overlap_bs2 = 1.0;      ///< QND output overlap at the final splitter
    /// When set, the ancilla pair on (ancilla_in, ancilla_out) is already
    /// part of `in` instead of being created internally.
    bool ancilla_included = false;
};

/// Complete hyper-Bell-state measurement: the polarization stage on
/// (path1, path2), QND teleportation of photon 1's orbital qubit through
/// the ancilla, and the orbital analyzer between photon 2 and the QND
/// output.  Enumerates every fine signature.
struct HbsmResult {
    std::optional<HyperBellLabel> identified;
    /// Probability of the canonical fine signature of the identified label
    /// (1/32 for a pure identifiable Bell input).
    double success_probability = 0.0;
    /// Summed probability over all fine signatures of the identified label.
    double aggregate_probability = 0.0;
    /// Conditional state of the unmeasured paths for the canonical
    /// signature.
    MixedState conditional_state;
    std::vector<HbsmSignature> signatures;
};

HbsmResult full_hbsm(const PureState &in, int path1, int path2, int ancilla_in,
                     int ancilla_out, const HbsmOptions &options = {});

/// Detector channel paths used by full_hbsm for a photon path p:
/// plus channel 10*p, minus channel 10*p + 1.
int plus_channel(int path);
int minus_channel(int path);

}  // namespace loqsim

#endif  // LOQSIM_MEASUREMENT_HPP
