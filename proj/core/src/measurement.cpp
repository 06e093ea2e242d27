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

#include "loqsim/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "loqsim/elements.hpp"
#include "loqsim/errors.hpp"

namespace loqsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};

}  // namespace

int plus_channel(int path) {
    return 10 * path;
}

int minus_channel(int path) {
    return 10 * path + 1;
}

CorrectionEntry correction_for_outcome(const HyperBellLabel &outcome) {
    // Teleportation through the (phi-, omega+) resource: the conditional
    // photon-3 state equals phase * (sigma_sam (x) sigma_oam) |input>.
    // SAM factor (phi- channel): phi+ -> Z, phi- -> I, psi+ -> iY,
    // psi- -> -X.
    PauliAxis sam_op = PauliAxis::I;
    cplx sam_phase = 1.0;
    switch (outcome.sam) {
        case SamBell::PhiPlus:
            sam_op = PauliAxis::Z;
            sam_phase = 1.0;
            break;
        case SamBell::PhiMinus:
            sam_op = PauliAxis::I;
            sam_phase = 1.0;
            break;
        case SamBell::PsiPlus:
            sam_op = PauliAxis::Y;
            sam_phase = kI;
            break;
        case SamBell::PsiMinus:
            sam_op = PauliAxis::X;
            sam_phase = -1.0;
            break;
    }
    // OAM factor (omega+ channel): omega+ -> I, omega- -> Z, chi+ -> X,
    // chi- -> -iY.
    PauliAxis oam_op = PauliAxis::I;
    cplx oam_phase = 1.0;
    switch (outcome.oam) {
        case OamBell::OmegaPlus:
            oam_op = PauliAxis::I;
            oam_phase = 1.0;
            break;
        case OamBell::OmegaMinus:
            oam_op = PauliAxis::Z;
            oam_phase = 1.0;
            break;
        case OamBell::ChiPlus:
            oam_op = PauliAxis::X;
            oam_phase = 1.0;
            break;
        case OamBell::ChiMinus:
            oam_op = PauliAxis::Y;
            oam_phase = -kI;
            break;
    }
    return {outcome, sam_op, oam_op, sam_phase * oam_phase};
}

Eigen::Matrix4cd correction_matrix(const CorrectionEntry &entry) {
    return kron(pauli_matrix(entry.sam_op), pauli_matrix(entry.oam_op));
}

std::vector<DecompositionRow> hyper_bell_decompose(const Eigen::Vector4cd &input) {
    if (input.squaredNorm() <= kPruneEps) {
        throw ZeroStateError("hyper_bell_decompose: zero input vector");
    }
    const Eigen::Vector4cd in = input.normalized();
    const PureState psi = qubit_pair_photon(in, 1).product(hyper_entangled_pair(2, 3));

    std::vector<DecompositionRow> rows;
    rows.reserve(16);
    for (const HyperBellLabel &label : all_hyper_labels()) {
        const PureState bell12 = hyper_bell_state(label, 1, 2);
        Eigen::Vector4cd photon3 = Eigen::Vector4cd::Zero();
        for (int b = 0; b < 4; ++b) {
            Eigen::Vector4cd basis_vec = Eigen::Vector4cd::Zero();
            basis_vec(b) = 1.0;
            const PureState bra = bell12.product(qubit_pair_photon(basis_vec, 3));
            photon3(b) = bra.inner(psi);
        }
        DecompositionRow row;
        row.outcome = label;
        row.probability = photon3.squaredNorm();
        if (row.probability > kPruneEps) {
            const Eigen::Vector4cd corrected = correction_matrix(correction_for_outcome(label)) * photon3;
            row.corrected_fidelity = std::norm(in.dot(corrected)) / corrected.squaredNorm();
        } else {
            row.corrected_fidelity = 0.0;
        }
        rows.push_back(row);
    }
    return rows;
}

SamBsmStageResult sam_bsm_stage(const PureState &in, int path1, int path2) {
    TransformSequence seq;
    seq.push(polarizing_beam_splitter(path1, path2, path1, path2));
    seq.push(polarizer(path1, kPi / 4));
    seq.push(polarizer(path2, kPi / 4));
    seq.push(wave_plate(path1, WavePlateKind::Half, kPi / 8));
    seq.push(wave_plate(path2, WavePlateKind::Half, kPi / 8));
    const PureState out = seq.apply(in);

    DetectionPattern coincidence;
    coincidence.require(path1, 1).require(path2, 1);
    const PureState selected = post_select(out, coincidence);

    SamBsmStageResult result;
    result.pass_probability = selected.norm_sq();
    result.efficiency = result.pass_probability / 4.0;
    result.survives = result.pass_probability > kPruneEps;
    if (result.survives) {
        result.conditional = selected.normalized();
    }
    return result;
}

ModeTransform dual_channel_oam_readout(int path, int plus_path, int minus_path) {
    if (path == plus_path || path == minus_path || plus_path == minus_path) {
        throw InvalidArgumentError("dual_channel_oam_readout: paths must be distinct");
    }
    return compose_elements("dual_channel_oam_readout",
                            {oam_sagnac_sorter(path, path),
                             polarizing_beam_splitter(path, minus_path, plus_path, minus_path)});
}

ChannelProbabilities channel_probabilities(const PureState &single_photon, int path, bool lossy) {
    const int plus = plus_channel(path);
    const int minus = minus_channel(path);
    const PureState out = dual_channel_oam_readout(path, plus, minus).apply(single_photon);

    DetectionPattern on_plus;
    on_plus.require(plus, 1).require(minus, 0);
    DetectionPattern on_minus;
    on_minus.require(plus, 0).require(minus, 1);

    ChannelProbabilities cp;
    cp.p_plus = probability_of(out, on_plus);
    cp.p_minus = probability_of(out, on_minus);
    if (lossy) {
        const double a = kReadoutAccuracy;
        const double reported_plus = a * cp.p_plus + (1.0 - a) * cp.p_minus;
        const double reported_minus = a * cp.p_minus + (1.0 - a) * cp.p_plus;
        cp.p_plus = reported_plus;
        cp.p_minus = reported_minus;
    }
    return cp;
}

std::vector<OamRecord> oam_analyzer_records() {
    // counts = (plus_a, minus_a, plus_b, minus_b).  omega- anti-bunches
    // (coincidence with equal channels); omega+ bunches with orthogonal
    // channels in one output; chi+- land two photons in a single channel
    // and never produce a valid record.
    return {
        {OamBell::OmegaMinus, {1, 0, 1, 0}},
        {OamBell::OmegaMinus, {0, 1, 0, 1}},
        {OamBell::OmegaPlus, {1, 1, 0, 0}},
        {OamBell::OmegaPlus, {0, 0, 1, 1}},
    };
}

namespace {

/// Adds `pattern` constraints for one analyzer record on (path_a, path_b).
void require_record(DetectionPattern &pattern, const std::array<int, 4> &counts, int path_a,
                    int path_b) {
    pattern.require(plus_channel(path_a), counts[0])
        .require(minus_channel(path_a), counts[1])
        .require(plus_channel(path_b), counts[2])
        .require(minus_channel(path_b), counts[3]);
}

/// Accumulates `addition` into `acc` with an extra weight factor.
void accumulate(MixedState &acc, const MixedState &addition, double weight) {
    for (const auto &branch : addition.branches()) {
        acc.add_branch(weight * branch.weight, branch.state);
    }
}

OamBell flip_omega(OamBell b) {
    return b == OamBell::OmegaPlus ? OamBell::OmegaMinus : OamBell::OmegaPlus;
}

/// Hyper-Bell label a (qnd record class, final-analyzer record class) pair
/// identifies: the QND omega- outcome teleports Z|u>, so it toggles the
/// class seen by the final analyzer.
HyperBellLabel label_for_classes(OamBell qnd_class, OamBell stage3_class) {
    const OamBell actual =
        (qnd_class == OamBell::OmegaMinus) ? flip_omega(stage3_class) : stage3_class;
    if (actual == OamBell::OmegaPlus) {
        return {SamBell::PhiMinus, OamBell::OmegaPlus};
    }
    return {SamBell::PhiPlus, OamBell::OmegaMinus};
}

/// Channel-flip redistribution of one analyzer record under lossy readout:
/// each of the two detections independently reports the wrong channel of
/// its own readout with probability 1 - kReadoutAccuracy.  Returns
/// (reported record index -> weight); weight lost to invalid reports is
/// simply dropped.
std::map<int, double> record_crosstalk(int record_index) {
    const auto records = oam_analyzer_records();
    const auto &counts = records[static_cast<size_t>(record_index)].counts;
    // The two occupied channels (all valid records occupy two distinct
    // channels once each).
    std::array<int, 2> occupied{};
    int n = 0;
    for (int c = 0; c < 4; ++c) {
        for (int k = 0; k < counts[static_cast<size_t>(c)]; ++k) {
            occupied[static_cast<size_t>(n++)] = c;
        }
    }
    const auto sibling = [](int c) { return c ^ 1; };  // 0<->1, 2<->3
    std::map<int, double> out;
    for (int f1 = 0; f1 < 2; ++f1) {
        for (int f2 = 0; f2 < 2; ++f2) {
            std::array<int, 4> reported{};
            reported[static_cast<size_t>(f1 ? sibling(occupied[0]) : occupied[0])] += 1;
            reported[static_cast<size_t>(f2 ? sibling(occupied[1]) : occupied[1])] += 1;
            const double w = (f1 ? 1.0 - kReadoutAccuracy : kReadoutAccuracy) *
                             (f2 ? 1.0 - kReadoutAccuracy : kReadoutAccuracy);
            for (size_t r = 0; r < records.size(); ++r) {
                if (records[r].counts == reported) {
                    out[static_cast<int>(r)] += w;
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace

QndResult qnd_teleport(const PureState &in, int in_path, int ancilla_in, int out_path) {
    PureState state = in.product(oam_entangled_pair(ancilla_in, out_path));
    TransformSequence seq;
    seq.push(beam_splitter(in_path, ancilla_in, in_path, ancilla_in));
    seq.push(dual_channel_oam_readout(in_path, plus_channel(in_path), minus_channel(in_path)));
    seq.push(
        dual_channel_oam_readout(ancilla_in, plus_channel(ancilla_in), minus_channel(ancilla_in)));
    state = seq.apply(state);

    const ModeTransform z_fix = pauli_oam(out_path, PauliAxis::Z);
    QndResult result;
    for (const OamRecord &rec : oam_analyzer_records()) {
        DetectionPattern pattern;
        require_record(pattern, rec.counts, in_path, ancilla_in);
        const ProjectionResult pr = project(state, pattern);
        if (pr.probability <= kPruneEps) {
            continue;
        }
        QndBranch branch;
        branch.outcome = rec.bell_class;
        branch.counts = rec.counts;
        branch.probability = pr.probability;
        branch.conditional =
            (rec.bell_class == OamBell::OmegaMinus) ? z_fix.apply(pr.conditional) : pr.conditional;
        result.herald_probability += pr.probability;
        result.branches.push_back(std::move(branch));
    }
    return result;
}

OamBsmResult oam_bsm_stage(const PureState &in, int path_a, int path_b) {
    TransformSequence seq;
    seq.push(beam_splitter(path_a, path_b, path_a, path_b));
    seq.push(dual_channel_oam_readout(path_a, plus_channel(path_a), minus_channel(path_a)));
    seq.push(dual_channel_oam_readout(path_b, plus_channel(path_b), minus_channel(path_b)));
    const PureState state = seq.apply(in);

    OamBsmResult result;
    MixedState plus_acc;
    MixedState minus_acc;
    for (const OamRecord &rec : oam_analyzer_records()) {
        DetectionPattern pattern;
        require_record(pattern, rec.counts, path_a, path_b);
        const ProjectionResult pr = project(state, pattern);
        if (pr.probability <= kPruneEps) {
            continue;
        }
        if (rec.bell_class == OamBell::OmegaPlus) {
            result.probability_omega_plus += pr.probability;
            accumulate(plus_acc, pr.conditional, pr.probability);
        } else {
            result.probability_omega_minus += pr.probability;
            accumulate(minus_acc, pr.conditional, pr.probability);
        }
    }
    if (result.probability_omega_plus <= kPruneEps &&
        result.probability_omega_minus <= kPruneEps) {
        result.outcome = OamBsmOutcome::None;
        return result;
    }
    if (result.probability_omega_plus >= result.probability_omega_minus) {
        result.outcome = OamBsmOutcome::OmegaPlus;
        result.probability = result.probability_omega_plus;
        result.conditional = plus_acc.normalized();
    } else {
        result.outcome = OamBsmOutcome::OmegaMinus;
        result.probability = result.probability_omega_minus;
        result.conditional = minus_acc.normalized();
    }
    return result;
}

HbsmResult full_hbsm(const PureState &in, int path1, int path2, int ancilla_in, int ancilla_out,
                     const HbsmOptions &options) {
    PureState state = in;
    if (!options.ancilla_included) {
        state = state.product(oam_entangled_pair(ancilla_in, ancilla_out));
    }

    TransformSequence seq;
    // Polarization stage.
    if (options.overlap_pbs < 1.0) {
        seq.push(wavepacket_rotation(path1, options.overlap_pbs, 1));
    }
    seq.push(polarizing_beam_splitter(path1, path2, path1, path2));
    seq.push(polarizer(path1, kPi / 4));
    seq.push(polarizer(path2, kPi / 4));
    seq.push(wave_plate(path1, WavePlateKind::Half, kPi / 8));
    seq.push(wave_plate(path2, WavePlateKind::Half, kPi / 8));
    // QND stage: teleport photon 1's orbital qubit through the ancilla.
    if (options.overlap_bs1 < 1.0) {
        seq.push(wavepacket_rotation(ancilla_in, options.overlap_bs1, 2));
    }
    seq.push(beam_splitter(path1, ancilla_in, path1, ancilla_in));
    seq.push(dual_channel_oam_readout(path1, plus_channel(path1), minus_channel(path1)));
    seq.push(
        dual_channel_oam_readout(ancilla_in, plus_channel(ancilla_in), minus_channel(ancilla_in)));
    // Final orbital analyzer between photon 2 and the QND output.
    if (options.overlap_bs2 < 1.0) {
        seq.push(wavepacket_rotation(ancilla_out, options.overlap_bs2, 3));
    }
    seq.push(beam_splitter(path2, ancilla_out, path2, ancilla_out));
    seq.push(dual_channel_oam_readout(path2, plus_channel(path2), minus_channel(path2)));
    seq.push(dual_channel_oam_readout(ancilla_out, plus_channel(ancilla_out),
                                      minus_channel(ancilla_out)));
    state = seq.apply(state);

    const auto records = oam_analyzer_records();
    const int n_records = static_cast<int>(records.size());
    HbsmResult result;
    result.signatures.reserve(static_cast<size_t>(n_records * n_records));
    for (int qi = 0; qi < n_records; ++qi) {
        for (int si = 0; si < n_records; ++si) {
            const auto &q = records[static_cast<size_t>(qi)];
            const auto &s = records[static_cast<size_t>(si)];
            DetectionPattern pattern;
            require_record(pattern, q.counts, path1, ancilla_in);
            require_record(pattern, s.counts, path2, ancilla_out);
            const ProjectionResult pr = project(state, pattern);
            HbsmSignature sig;
            sig.label = label_for_classes(q.bell_class, s.bell_class);
            sig.qnd_class = q.bell_class;
            sig.stage3_class = s.bell_class;
            sig.qnd_counts = q.counts;
            sig.stage3_counts = s.counts;
            sig.probability = pr.probability;
            sig.conditional = pr.conditional;
            result.signatures.push_back(std::move(sig));
        }
    }

    if (options.lossy_readout) {
        // Redistribute each true signature over the reported ones: every
        // detection independently flips to its sibling channel with
        // probability 1 - kReadoutAccuracy; invalid reported records drop
        // the event.  Flips never change the record class, so crosstalk
        // only drains probability.
        std::vector<std::map<int, double>> crosstalk;
        crosstalk.reserve(static_cast<size_t>(n_records));
        for (int r = 0; r < n_records; ++r) {
            crosstalk.push_back(record_crosstalk(r));
        }
        std::vector<double> reported_prob(static_cast<size_t>(n_records * n_records), 0.0);
        std::vector<MixedState> reported_cond(static_cast<size_t>(n_records * n_records));
        for (int qi = 0; qi < n_records; ++qi) {
            for (int si = 0; si < n_records; ++si) {
                const auto &true_sig =
                    result.signatures[static_cast<size_t>(qi * n_records + si)];
                if (true_sig.probability <= kPruneEps) {
                    continue;
                }
                for (const auto &[q_rep, qw] : crosstalk[static_cast<size_t>(qi)]) {
                    for (const auto &[s_rep, sw] : crosstalk[static_cast<size_t>(si)]) {
                        const size_t idx = static_cast<size_t>(q_rep * n_records + s_rep);
                        const double w = qw * sw * true_sig.probability;
                        reported_prob[idx] += w;
                        accumulate(reported_cond[idx], true_sig.conditional, w);
                    }
                }
            }
        }
        for (int i = 0; i < n_records * n_records; ++i) {
            auto &sig = result.signatures[static_cast<size_t>(i)];
            sig.probability = reported_prob[static_cast<size_t>(i)];
            sig.conditional = sig.probability > kPruneEps
                                  ? reported_cond[static_cast<size_t>(i)].normalized()
                                  : MixedState();
        }
    }

    const HyperBellLabel label_a{SamBell::PhiMinus, OamBell::OmegaPlus};
    const HyperBellLabel label_b{SamBell::PhiPlus, OamBell::OmegaMinus};
    double agg_a = 0.0;
    double agg_b = 0.0;
    for (const auto &sig : result.signatures) {
        (sig.label == label_a ? agg_a : agg_b) += sig.probability;
    }
    if (agg_a <= kPruneEps && agg_b <= kPruneEps) {
        return result;  // identified stays empty
    }
    const HyperBellLabel identified = (agg_a >= agg_b) ? label_a : label_b;
    result.identified = identified;
    result.aggregate_probability = (agg_a >= agg_b) ? agg_a : agg_b;
    // Canonical fine signature: QND record omega+ (1,1,0,0); final-analyzer
    // record class implied by the label, with counts (1,1,0,0) for omega+
    // and (1,0,1,0) for omega-.
    const OamBell canonical_s3 =
        (identified == label_a) ? OamBell::OmegaPlus : OamBell::OmegaMinus;
    const std::array<int, 4> canonical_qnd_counts{1, 1, 0, 0};
    const std::array<int, 4> canonical_s3_counts =
        (canonical_s3 == OamBell::OmegaPlus) ? std::array<int, 4>{1, 1, 0, 0}
                                             : std::array<int, 4>{1, 0, 1, 0};
    for (const auto &sig : result.signatures) {
        if (sig.qnd_counts == canonical_qnd_counts && sig.stage3_counts == canonical_s3_counts &&
            sig.stage3_class == canonical_s3) {
            result.success_probability = sig.probability;
            result.conditional_state = sig.conditional;
            break;
        }
    }
    return result;
}

}  // namespace loqsim
