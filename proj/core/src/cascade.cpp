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

#include "loqsim/cascade.hpp"

#include <algorithm>

#include "loqsim/detection.hpp"
#include "loqsim/elements.hpp"
#include "loqsim/errors.hpp"

namespace loqsim {

std::string to_string(const BellLabelVector &v) {
    std::string out = "(";
    for (size_t i = 0; i < v.labels.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += to_string(v.labels[i]);
    }
    out += ")";
    return out;
}

std::vector<BellLabelVector> all_label_vectors(int n) {
    if (n < 1) {
        throw InvalidArgumentError("label vectors need at least one DoF");
    }
    const auto base = all_sam_bells();
    std::vector<BellLabelVector> out;
    out.reserve(static_cast<size_t>(1) << (2 * n));
    BellLabelVector v;
    v.labels.assign(static_cast<size_t>(n), BellLabel::PhiPlus);
    const size_t total = static_cast<size_t>(1) << (2 * n);
    for (size_t idx = 0; idx < total; ++idx) {
        size_t rem = idx;
        for (int d = n - 1; d >= 0; --d) {
            v.labels[static_cast<size_t>(d)] = base[rem % 4];
            rem /= 4;
        }
        out.push_back(v);
    }
    return out;
}

Parity exchange_parity(const BellLabelVector &v) {
    const auto anti = static_cast<size_t>(
        std::count(v.labels.begin(), v.labels.end(), BellLabel::PsiMinus));
    return (anti % 2 == 1) ? Parity::Antisymmetric : Parity::Symmetric;
}

std::vector<BellLabelVector> bs_filter(const std::vector<BellLabelVector> &survivors) {
    std::vector<BellLabelVector> out;
    out.reserve(survivors.size() / 2);
    for (const auto &v : survivors) {
        if (exchange_parity(v) == Parity::Antisymmetric) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<BellLabelVector> dof_filter_and_flip(const std::vector<BellLabelVector> &survivors,
                                                 int dof) {
    for (const auto &v : survivors) {
        if (dof < 0 || static_cast<size_t>(dof) >= v.labels.size()) {
            throw InvalidArgumentError("dof index " + std::to_string(dof) + " out of range");
        }
        break;
    }
    std::vector<BellLabelVector> out;
    out.reserve(survivors.size() / 2);
    for (const auto &v : survivors) {
        const BellLabel l = v.labels[static_cast<size_t>(dof)];
        if (l != BellLabel::PsiPlus && l != BellLabel::PsiMinus) {
            continue;
        }
        BellLabelVector flipped = v;
        flipped.labels[static_cast<size_t>(dof)] =
            (l == BellLabel::PsiPlus) ? BellLabel::PhiPlus : BellLabel::PhiMinus;
        out.push_back(std::move(flipped));
    }
    return out;
}

std::string to_string(CascadeStageKind kind) {
    switch (kind) {
        case CascadeStageKind::Initial:
            return "initial";
        case CascadeStageKind::BsFilter:
            return "bs-filter";
        case CascadeStageKind::DofFilter:
            return "dof-filter";
        case CascadeStageKind::QndMarker:
            return "qnd";
    }
    return "initial";
}

CascadeResult run_cascade(int n) {
    if (n < 1) {
        throw InvalidArgumentError("cascade needs at least one DoF");
    }
    if (n > 8) {
        throw InvalidArgumentError("cascade too large: N = " + std::to_string(n) +
                                   " exceeds the supported maximum of 8");
    }

    CascadeResult result;
    result.n = n;
    std::vector<BellLabelVector> survivors = all_label_vectors(n);

    const auto push_stage = [&](CascadeStageKind kind, int dof, std::vector<int> preserved,
                                std::vector<BellLabelVector> next, bool counted) {
        CascadeStage stage;
        stage.kind = kind;
        stage.dof = dof;
        stage.preserved_dofs = std::move(preserved);
        stage.survivors_in = static_cast<int>(survivors.size());
        stage.survivors_out = static_cast<int>(next.size());
        stage.counted = counted;
        stage.survivors = next;
        if (counted) {
            result.counts.push_back(stage.survivors_out);
        }
        result.stages.push_back(std::move(stage));
        survivors = std::move(next);
    };

    push_stage(CascadeStageKind::Initial, -1, {}, survivors, true);
    push_stage(CascadeStageKind::BsFilter, -1, {}, bs_filter(survivors), true);
    for (int dof = 0; dof + 1 < n; ++dof) {
        push_stage(CascadeStageKind::DofFilter, dof, {}, dof_filter_and_flip(survivors, dof),
                   true);
        std::vector<int> preserved;
        for (int d = dof + 1; d < n; ++d) {
            preserved.push_back(d);
        }
        push_stage(CascadeStageKind::QndMarker, -1, std::move(preserved), survivors, false);
        push_stage(CascadeStageKind::BsFilter, -1, {}, bs_filter(survivors), true);
    }

    if (survivors.size() != 1) {
        throw LoqsimError("cascade did not converge to a single state (got " +
                          std::to_string(survivors.size()) + ")");
    }
    // Undo the bit-flip relabeling to report the discriminated state in its
    // original labels: every filtered DoF held a psi state.
    result.final_labels = survivors.front();
    for (int dof = 0; dof + 1 < n; ++dof) {
        BellLabel &l = result.final_labels.labels[static_cast<size_t>(dof)];
        l = (l == BellLabel::PhiPlus) ? BellLabel::PsiPlus : BellLabel::PsiMinus;
    }
    return result;
}

namespace {

/// Physical image of an abstract DoF-1 Bell label on the orbital register.
/// The beam splitter inverts the orbital value on reflection, so the
/// abstract basis of photon 2 is the inverted one; the map sends the
/// abstract anti-buncher psi- onto the physical anti-buncher omega-.
OamBell physical_oam(BellLabel abstract) {
    switch (abstract) {
        case BellLabel::PhiPlus:
            return OamBell::ChiPlus;
        case BellLabel::PhiMinus:
            return OamBell::ChiMinus;
        case BellLabel::PsiPlus:
            return OamBell::OmegaPlus;
        case BellLabel::PsiMinus:
            return OamBell::OmegaMinus;
    }
    return OamBell::OmegaPlus;
}

bool contains(const std::vector<BellLabelVector> &set, const BellLabelVector &v) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

/// Amplitude-level survival of one label vector through the cascade's
/// counted stages; returns one flag per counted filtering stage.
std::vector<bool> amplitude_survival(int n, const BellLabelVector &v) {
    DetectionPattern coincidence;
    coincidence.require(1, 1).require(2, 1);

    std::vector<bool> flags;
    if (n == 1) {
        const PureState in = sam_bell_state(v.labels[0], 1, 2);
        const PureState out = beam_splitter(1, 2, 1, 2).apply(in);
        flags.push_back(probability_of(out, coincidence) > kTol);
        return flags;
    }

    // n == 2: DoF 0 on the polarization register, DoF 1 on the orbital one.
    const HyperBellLabel physical{v.labels[0], physical_oam(v.labels[1])};
    PureState state = hyper_bell_state(physical, 1, 2);

    state = beam_splitter(1, 2, 1, 2).apply(state);
    const double p_bs1 = probability_of(state, coincidence);
    flags.push_back(p_bs1 > kTol);
    if (!flags.back()) {
        return flags;
    }
    state = post_select(state, coincidence).normalized();

    // psi+- filter on the polarization DoF: project onto the H1 V2
    // anti-correlated component (phi+- have none), then bit-flip photon 1
    // so the polarization register is exchange-symmetric again.
    DetectionPattern polarization_filter;
    polarization_filter.require(1, 1, {{filter_pol(Pol::H), 1}})
        .require(2, 1, {{filter_pol(Pol::V), 1}});
    const PureState filtered = post_select(state, polarization_filter);
    flags.push_back(filtered.norm_sq() > kTol);
    if (!flags.back()) {
        return flags;
    }
    state = pauli_sam(1, PauliAxis::X).apply(filtered.normalized());

    state = beam_splitter(1, 2, 1, 2).apply(state);
    flags.push_back(probability_of(state, coincidence) > kTol);
    return flags;
}

}  // namespace

AmplitudeCheckReport amplitude_check(int n) {
    if (n < 1 || n > 2) {
        throw InvalidArgumentError("amplitude_check supports only N = 1 or 2, got " +
                                   std::to_string(n));
    }
    const CascadeResult symbolic = run_cascade(n);

    // Symbolic survivor sets after each counted filtering stage, keyed by
    // the ORIGINAL labels (undoing the erasure relabeling so they compare
    // directly with the amplitude inputs).
    std::vector<std::vector<BellLabelVector>> symbolic_sets;
    std::vector<int> erased;  // dofs relabeled so far
    for (const auto &stage : symbolic.stages) {
        if (stage.kind == CascadeStageKind::Initial || !stage.counted) {
            continue;
        }
        if (stage.kind == CascadeStageKind::DofFilter) {
            erased.push_back(stage.dof);
        }
        std::vector<BellLabelVector> original;
        original.reserve(stage.survivors.size());
        for (const auto &v : stage.survivors) {
            BellLabelVector o = v;
            for (int dof : erased) {
                BellLabel &l = o.labels[static_cast<size_t>(dof)];
                l = (l == BellLabel::PhiPlus) ? BellLabel::PsiPlus : BellLabel::PsiMinus;
            }
            original.push_back(std::move(o));
        }
        symbolic_sets.push_back(std::move(original));
    }

    AmplitudeCheckReport report;
    report.n = n;
    const auto vectors = all_label_vectors(n);
    report.symbolic_counts.push_back(static_cast<int>(vectors.size()));
    report.amplitude_counts.push_back(static_cast<int>(vectors.size()));
    std::vector<int> amplitude_alive(symbolic_sets.size(), 0);
    for (const auto &v : vectors) {
        const std::vector<bool> flags = amplitude_survival(n, v);
        for (size_t stage = 0; stage < symbolic_sets.size(); ++stage) {
            const bool amp = stage < flags.size() && flags[stage];
            const bool sym = contains(symbolic_sets[stage], v);
            if (amp != sym) {
                throw MismatchError("symbolic and amplitude cascades disagree for " +
                                    to_string(v) + " at filtering stage " +
                                    std::to_string(stage + 1));
            }
            if (amp) {
                ++amplitude_alive[stage];
            }
        }
    }
    for (size_t stage = 0; stage < symbolic_sets.size(); ++stage) {
        report.symbolic_counts.push_back(static_cast<int>(symbolic_sets[stage].size()));
        report.amplitude_counts.push_back(amplitude_alive[stage]);
    }
    report.match = true;
    return report;
}

}  // namespace loqsim
