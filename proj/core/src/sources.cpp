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

#include "loqsim/sources.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <tuple>
#include <vector>

#include "loqsim/elements.hpp"
#include "loqsim/errors.hpp"

namespace loqsim {

namespace {

constexpr cplx kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// (coefficient on |xy>) pairs of a Bell state over an abstract 0/1 pair.
struct BellCoeffs {
    // c00, c01, c10, c11
    std::array<cplx, 4> c;
};

BellCoeffs bell_coeffs(bool anti_correlated, double sign) {
    BellCoeffs b{};
    if (anti_correlated) {
        b.c = {cplx{0.0, 0.0}, kInvSqrt2, sign * kInvSqrt2, cplx{0.0, 0.0}};
    } else {
        b.c = {kInvSqrt2, cplx{0.0, 0.0}, cplx{0.0, 0.0}, sign * kInvSqrt2};
    }
    return b;
}

BellCoeffs coeffs_of(SamBell label) {
    switch (label) {
        case SamBell::PhiPlus:
            return bell_coeffs(false, +1.0);
        case SamBell::PhiMinus:
            return bell_coeffs(false, -1.0);
        case SamBell::PsiPlus:
            return bell_coeffs(true, +1.0);
        case SamBell::PsiMinus:
            return bell_coeffs(true, -1.0);
    }
    return bell_coeffs(false, +1.0);
}

BellCoeffs coeffs_of(OamBell label) {
    switch (label) {
        case OamBell::OmegaPlus:
            return bell_coeffs(false, +1.0);
        case OamBell::OmegaMinus:
            return bell_coeffs(false, -1.0);
        case OamBell::ChiPlus:
            return bell_coeffs(true, +1.0);
        case OamBell::ChiMinus:
            return bell_coeffs(true, -1.0);
    }
    return bell_coeffs(false, +1.0);
}

Pol pol_of_bit(int bit) { return bit == 0 ? Pol::H : Pol::V; }
int oam_of_bit(int bit) { return bit == 0 ? +1 : -1; }

}  // namespace

std::array<SamBell, 4> all_sam_bells() {
    return {SamBell::PhiPlus, SamBell::PhiMinus, SamBell::PsiPlus, SamBell::PsiMinus};
}

std::array<OamBell, 4> all_oam_bells() {
    return {OamBell::OmegaPlus, OamBell::OmegaMinus, OamBell::ChiPlus, OamBell::ChiMinus};
}

std::array<HyperBellLabel, 16> all_hyper_labels() {
    std::array<HyperBellLabel, 16> out{};
    std::size_t k = 0;
    for (SamBell s : all_sam_bells()) {
        for (OamBell o : all_oam_bells()) {
            out[k++] = HyperBellLabel{s, o};
        }
    }
    return out;
}

std::string to_string(SamBell label) {
    switch (label) {
        case SamBell::PhiPlus:
            return "phi+";
        case SamBell::PhiMinus:
            return "phi-";
        case SamBell::PsiPlus:
            return "psi+";
        case SamBell::PsiMinus:
            return "psi-";
    }
    return "?";
}

std::string to_string(OamBell label) {
    switch (label) {
        case OamBell::OmegaPlus:
            return "omega+";
        case OamBell::OmegaMinus:
            return "omega-";
        case OamBell::ChiPlus:
            return "chi+";
        case OamBell::ChiMinus:
            return "chi-";
    }
    return "?";
}

std::string to_string(const HyperBellLabel &l) {
    return to_string(l.sam) + ":" + to_string(l.oam);
}

PureState sam_bell_state(SamBell label, int path_a, int path_b, int oam_a, int oam_b) {
    const BellCoeffs b = coeffs_of(label);
    PureState out;
    const PureState vac = PureState::vacuum();
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            const cplx c = b.c[static_cast<std::size_t>(2 * s1 + s2)];
            if (std::abs(c) <= kPruneEps) {
                continue;
            }
            PureState term = vac.create_photons(
                {mode(path_a, pol_of_bit(s1), oam_a), mode(path_b, pol_of_bit(s2), oam_b)});
            out.add(term.terms().begin()->first, c * term.terms().begin()->second);
        }
    }
    return out;
}

PureState oam_bell_state(OamBell label, int path_a, int path_b, Pol pol) {
    const BellCoeffs b = coeffs_of(label);
    PureState out;
    const PureState vac = PureState::vacuum();
    for (int o1 = 0; o1 < 2; ++o1) {
        for (int o2 = 0; o2 < 2; ++o2) {
            const cplx c = b.c[static_cast<std::size_t>(2 * o1 + o2)];
            if (std::abs(c) <= kPruneEps) {
                continue;
            }
            PureState term = vac.create_photons(
                {mode(path_a, pol, oam_of_bit(o1)), mode(path_b, pol, oam_of_bit(o2))});
            out.add(term.terms().begin()->first, c * term.terms().begin()->second);
        }
    }
    return out;
}

PureState hyper_bell_state(const HyperBellLabel &label, int path_a, int path_b) {
    const BellCoeffs bs = coeffs_of(label.sam);
    const BellCoeffs bo = coeffs_of(label.oam);
    PureState out;
    const PureState vac = PureState::vacuum();
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            const cplx cs = bs.c[static_cast<std::size_t>(2 * s1 + s2)];
            if (std::abs(cs) <= kPruneEps) {
                continue;
            }
            for (int o1 = 0; o1 < 2; ++o1) {
                for (int o2 = 0; o2 < 2; ++o2) {
                    const cplx co = bo.c[static_cast<std::size_t>(2 * o1 + o2)];
                    if (std::abs(co) <= kPruneEps) {
                        continue;
                    }
                    PureState term =
                        vac.create_photons({mode(path_a, pol_of_bit(s1), oam_of_bit(o1)),
                                            mode(path_b, pol_of_bit(s2), oam_of_bit(o2))});
                    out.add(term.terms().begin()->first,
                            cs * co * term.terms().begin()->second);
                }
            }
        }
    }
    return out;
}

PureState hyper_entangled_pair(int path_a, int path_b) {
    return hyper_bell_state({SamBell::PhiMinus, OamBell::OmegaPlus}, path_a, path_b);
}

PureState oam_entangled_pair(int path_a, int path_b) {
    return oam_bell_state(OamBell::OmegaPlus, path_a, path_b, Pol::H);
}

std::array<InputStateId, 5> all_input_ids() {
    return {InputStateId::A, InputStateId::B, InputStateId::C, InputStateId::D, InputStateId::E};
}

std::string to_string(InputStateId id) {
    switch (id) {
        case InputStateId::A:
            return "A";
        case InputStateId::B:
            return "B";
        case InputStateId::C:
            return "C";
        case InputStateId::D:
            return "D";
        case InputStateId::E:
            return "E";
    }
    return "?";
}

InputStateId input_id_from_string(const std::string &s) {
    if (s.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(s[0]))) {
            case 'A':
                return InputStateId::A;
            case 'B':
                return InputStateId::B;
            case 'C':
                return InputStateId::C;
            case 'D':
                return InputStateId::D;
            case 'E':
                return InputStateId::E;
            default:
                break;
        }
    }
    throw InvalidArgumentError("unknown input state id: '" + s + "' (expected A..E)");
}

Eigen::Vector4cd input_state_vector(InputStateId id) {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    switch (id) {
        case InputStateId::A:
            v(0) = 1.0;
            break;
        case InputStateId::B:
            v(3) = 1.0;
            break;
        case InputStateId::C:
            v << 0.5, 0.5, 0.5, 0.5;
            break;
        case InputStateId::D:
            v << 0.5, cplx{0.0, 0.5}, cplx{0.0, 0.5}, -0.5;
            break;
        case InputStateId::E:
            v(0) = kInvSqrt2;
            v(3) = kInvSqrt2;
            break;
    }
    return v;
}

PureState qubit_pair_photon(const Eigen::Vector4cd &amps, int path, int wavepacket) {
    PureState out;
    for (int sam_bit = 0; sam_bit < 2; ++sam_bit) {
        for (int oam_bit = 0; oam_bit < 2; ++oam_bit) {
            const cplx c = amps(2 * sam_bit + oam_bit);
            if (std::abs(c) <= kPruneEps) {
                continue;
            }
            out.add(Configuration::from_modes(
                        {mode(path, pol_of_bit(sam_bit), oam_of_bit(oam_bit), wavepacket)}),
                    c);
        }
    }
    return out;
}

PureState input_state_direct(InputStateId id, int path, int wavepacket) {
    return qubit_pair_photon(input_state_vector(id), path, wavepacket);
}

PureState prepare_input_state(InputStateId id, int path) {
    if (id != InputStateId::E) {
        return input_state_direct(id, path);
    }
    // Polarizing Sagnac loop.  The auxiliary path is the counter-propagating
    // arm; it is chosen away from the caller's path and ends up empty.
    const int arm = path + 1000;
    // Diagonal-basis zero-order photon: (|0>s - |1>s)/sqrt(2) at l = 0.
    PureState st;
    st.add(Configuration::from_modes({mode(path, Pol::H, 0)}), kInvSqrt2);
    st.add(Configuration::from_modes({mode(path, Pol::V, 0)}), -kInvSqrt2);
    // Split: H keeps propagating on `path` (clockwise), V crosses into the
    // counter-propagating arm.
    st = polarizing_beam_splitter(path, arm, path, arm).apply(st);
    // Clockwise traversal: loop mirror first (no effect at l = 0), then a
    // forward pass through the charge-1 spiral phase plate.
    st = mirror(path).apply(st);
    st = spiral_phase_plate(path, 1, SppDirection::Forward).apply(st);
    // Counter-clockwise traversal meets the same elements in reverse order:
    // backward pass through the plate, then the loop mirror.
    st = spiral_phase_plate(arm, 1, SppDirection::Backward).apply(st);
    st = mirror(arm).apply(st);
    // Recombination on the same PBS; the V component reflects a second time.
    st = polarizing_beam_splitter(path, arm, path, arm).apply(st);
    return st.normalized();
}

namespace {

using PairTerm = std::tuple<ModeLabel, ModeLabel, cplx>;

std::vector<PairTerm> pair_creation_terms(SpdcKind kind, int a, int b) {
    switch (kind) {
        case SpdcKind::ZeroOrder:
            return {{mode(a, Pol::H, 0), mode(b, Pol::H, 0), cplx{1.0, 0.0}}};
        case SpdcKind::Hyper:
            return {{mode(a, Pol::H, +1), mode(b, Pol::H, +1), cplx{0.5, 0.0}},
                    {mode(a, Pol::H, -1), mode(b, Pol::H, -1), cplx{0.5, 0.0}},
                    {mode(a, Pol::V, +1), mode(b, Pol::V, +1), cplx{-0.5, 0.0}},
                    {mode(a, Pol::V, -1), mode(b, Pol::V, -1), cplx{-0.5, 0.0}}};
        case SpdcKind::OamEntangled:
            return {{mode(a, Pol::H, +1), mode(b, Pol::H, +1), kInvSqrt2},
                    {mode(a, Pol::H, -1), mode(b, Pol::H, -1), kInvSqrt2}};
    }
    return {};
}

PureState apply_pair_creation(const PureState &in, const std::vector<PairTerm> &terms) {
    PureState out;
    for (const auto &[ma, mb, c] : terms) {
        PureState part = in.create_photons({ma, mb});
        for (const auto &[cfg, amp] : part.terms()) {
            out.add(cfg, c * amp);
        }
    }
    out.prune();
    return out;
}

}  // namespace

SpdcResult spdc_source(SpdcKind kind, const SourceParams &params, int path_a, int path_b) {
    if (params.truncation_order < 1 || params.truncation_order > 2) {
        throw TruncationError("spdc_source: truncation_order must be 1 or 2");
    }
    if (params.mu < 0.0) {
        throw InvalidArgumentError("spdc_source: mu must be >= 0");
    }
    const auto terms = pair_creation_terms(kind, path_a, path_b);
    const PureState one = apply_pair_creation(PureState::vacuum(), terms);
    const PureState two = apply_pair_creation(one, terms);
    const PureState three = apply_pair_creation(two, terms);

    PureState out = PureState::vacuum();
    const double r = std::sqrt(params.mu);
    for (const auto &[cfg, amp] : one.terms()) {
        out.add(cfg, r * amp);
    }
    if (params.truncation_order >= 2) {
        for (const auto &[cfg, amp] : two.terms()) {
            out.add(cfg, 0.5 * params.mu * amp);
        }
    }
    // Weight of the first dropped series term, (mu^{3/2}/3!) (S+)^3 |vac>.
    const double tail =
        params.mu * params.mu * params.mu * three.norm_sq() / 36.0;
    return SpdcResult{out.normalized(), tail};
}

double white_noise_weight(double fidelity, int dim) {
    if (dim < 2) {
        throw InvalidArgumentError("white_noise_weight: dim must be >= 2");
    }
    const double floor = 1.0 / dim;
    if (!(fidelity > floor) || fidelity > 1.0 + 1e-12) {
        throw InvalidArgumentError("white_noise_weight: fidelity must lie in (1/d, 1]");
    }
    return (std::min(fidelity, 1.0) - floor) / (1.0 - floor);
}

namespace {

MixedState isotropic_mix(const PureState &target, const std::vector<PureState> &basis,
                         double fidelity) {
    const double p = white_noise_weight(fidelity, static_cast<int>(basis.size()));
    MixedState out;
    out.add_branch(p, target);
    const double w = (1.0 - p) / static_cast<double>(basis.size());
    for (const auto &b : basis) {
        out.add_branch(w, b);
    }
    return out;
}

}  // namespace

MixedState noisy_hyper_pair(int path_a, int path_b, double fidelity) {
    const PureState target = hyper_entangled_pair(path_a, path_b);
    if (fidelity >= 1.0) {
        return MixedState(target);
    }
    std::vector<PureState> basis;
    const PureState vac = PureState::vacuum();
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int o1 = 0; o1 < 2; ++o1) {
            for (int s2 = 0; s2 < 2; ++s2) {
                for (int o2 = 0; o2 < 2; ++o2) {
                    basis.push_back(vac.create_photons(
                        {mode(path_a, pol_of_bit(s1), oam_of_bit(o1)),
                         mode(path_b, pol_of_bit(s2), oam_of_bit(o2))}));
                }
            }
        }
    }
    return isotropic_mix(target, basis, fidelity);
}

MixedState noisy_oam_pair(int path_a, int path_b, double fidelity) {
    const PureState target = oam_entangled_pair(path_a, path_b);
    if (fidelity >= 1.0) {
        return MixedState(target);
    }
    std::vector<PureState> basis;
    const PureState vac = PureState::vacuum();
    for (int o1 = 0; o1 < 2; ++o1) {
        for (int o2 = 0; o2 < 2; ++o2) {
            basis.push_back(vac.create_photons({mode(path_a, Pol::H, oam_of_bit(o1)),
                                                mode(path_b, Pol::H, oam_of_bit(o2))}));
        }
    }
    return isotropic_mix(target, basis, fidelity);
}

MixedState noisy_input_state(InputStateId id, int path, double fidelity) {
    const PureState target = input_state_direct(id, path);
    if (fidelity >= 1.0) {
        return MixedState(target);
    }
    std::vector<PureState> basis;
    for (int s = 0; s < 2; ++s) {
        for (int o = 0; o < 2; ++o) {
            PureState b;
            b.add(Configuration::from_modes({mode(path, pol_of_bit(s), oam_of_bit(o))}),
                  cplx{1.0, 0.0});
            basis.push_back(b);
        }
    }
    return isotropic_mix(target, basis, fidelity);
}

}  // namespace loqsim
