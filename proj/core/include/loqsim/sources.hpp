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

#ifndef LOQSIM_SOURCES_HPP
#define LOQSIM_SOURCES_HPP

#include <array>
#include <string>

#include "loqsim/density.hpp"
#include "loqsim/state.hpp"

namespace loqsim {

/// Polarization Bell states: phi = correlated (|00> +- |11>),
/// psi = anti-correlated (|01> +- |10>), in the H/V qubit basis.
enum class SamBell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Orbital Bell states: omega = correlated (|00> +- |11>),
/// chi = anti-correlated (|01> +- |10>), in the l = +1 / l = -1 basis.
enum class OamBell { OmegaPlus, OmegaMinus, ChiPlus, ChiMinus };

/// One of the 16 two-photon hyper-Bell states (SAM Bell x OAM Bell).
struct HyperBellLabel {
    SamBell sam;
    OamBell oam;
    friend bool operator==(const HyperBellLabel &, const HyperBellLabel &) = default;
    friend auto operator<=>(const HyperBellLabel &, const HyperBellLabel &) = default;
};

std::array<SamBell, 4> all_sam_bells();
std::array<OamBell, 4> all_oam_bells();
/// All 16 labels, SAM-major order: (phi+, omega+), (phi+, omega-), ...
std::array<HyperBellLabel, 16> all_hyper_labels();

std::string to_string(SamBell label);            // "phi+", "phi-", "psi+", "psi-"
std::string to_string(OamBell label);            // "omega+", ..., "chi-"
std::string to_string(const HyperBellLabel &l);  // e.g. "phi-:omega+"

/// Polarization Bell state of two photons on the given paths, each photon at
/// the fixed orbital values (defaults: zero-order).
PureState sam_bell_state(SamBell label, int path_a, int path_b, int oam_a = 0, int oam_b = 0);

/// Orbital Bell state of two photons on the given paths at fixed
/// polarization (default H).
PureState oam_bell_state(OamBell label, int path_a, int path_b, Pol pol = Pol::H);

/// Hyper-Bell state: the two-photon wavefunction whose SAM part is the
/// given SAM Bell state and whose OAM part is the given OAM Bell state.
/// The 16 outputs form an orthonormal basis of the two-photon qubit space.
PureState hyper_bell_state(const HyperBellLabel &label, int path_a, int path_b);

/// The hyper-entangled resource pair
/// (1/2)(|00>s - |11>s)(|00>o + |11>o) = (phi-, omega+).
PureState hyper_entangled_pair(int path_a, int path_b);

/// The ancillary orbital-entangled pair (|00>o + |11>o)/sqrt(2) at SAM H.
PureState oam_entangled_pair(int path_a, int path_b);

/// The five canonical single-photon input states.
enum class InputStateId { A, B, C, D, E };

std::array<InputStateId, 5> all_input_ids();
std::string to_string(InputStateId id);
/// Parses "A".."E" (case-insensitive); throws InvalidArgumentError.
InputStateId input_id_from_string(const std::string &s);

/// The input state as a two-qubit vector in the
/// {|0s0o>, |0s1o>, |1s0o>, |1s1o>} basis:
///   A = |00>, B = |11>, C = (|0>+|1>)(|0>+|1>)/2,
///   D = (|0>+i|1>)(|0>+i|1>)/2, E = (|00>+|11>)/sqrt(2).
Eigen::Vector4cd input_state_vector(InputStateId id);

/// Single photon on `path` carrying the given two-qubit amplitudes
/// (|0o> = l=+1, |1o> = l=-1).
PureState qubit_pair_photon(const Eigen::Vector4cd &amps, int path, int wavepacket = 0);

/// Direct (analytic) construction of an input state.
PureState input_state_direct(InputStateId id, int path, int wavepacket = 0);

/// Input-state preparation as performed optically: A-D are set directly
/// (wave plates and a spiral phase plate suffice); E is produced by
/// simulating the polarizing Sagnac loop — a diagonal-basis photon at the
/// zero-order mode is split on a PBS, the two polarizations traverse the
/// loop's spiral phase plate in opposite directions (+1 forward / -1
/// backward) around a loop mirror, and recombine on the same PBS.  The
/// output must equal the analytic E up to global phase; this doubles as a
/// regression test of the PBS and SPP conventions.
PureState prepare_input_state(InputStateId id, int path);

/// Parametric pair-source kinds.
enum class SpdcKind {
    ZeroOrder,     ///< trigger/signal pair, both photons H at l = 0
    Hyper,         ///< hyper-entangled pair (phi-, omega+) structure
    OamEntangled,  ///< orbital-entangled pair omega+ at SAM H
};

struct SourceParams {
    double mu = 0.0;           ///< mean photon pairs per pulse
    int truncation_order = 2;  ///< max pair number kept (1 or 2)
};

struct SpdcResult {
    PureState state;        ///< normalized truncated squeezed state
    double truncation_tail; ///< weight of the first dropped order (3 pairs)
};

/// Truncated two-mode-squeezing expansion of one source:
/// |out> ~ |vac> + sqrt(mu) S+|vac> + (mu/2) (S+)^2 |vac>, normalized, where
/// S+ creates one pair of the given kind.  The double-pair term carries the
/// exact bosonic structure of the squared pair-creation operator.
/// Throws TruncationError when truncation_order > 2 or < 1.
SpdcResult spdc_source(SpdcKind kind, const SourceParams &params, int path_a, int path_b);

/// Weight p solving F = p + (1-p)/d for the isotropic mixture
/// rho = p |t><t| + (1-p) I/d.  Throws InvalidArgumentError unless
/// fidelity lies in (1/d, 1].
double white_noise_weight(double fidelity, int dim);

/// Hyper-entangled pair with isotropic white noise in the 16-dimensional
/// two-photon qubit space, mixed to the requested fidelity.
MixedState noisy_hyper_pair(int path_a, int path_b, double fidelity);

/// Orbital-entangled ancilla pair with white noise in its 4-dimensional
/// orbital subspace (SAM stays H).
MixedState noisy_oam_pair(int path_a, int path_b, double fidelity);

/// Input photon with white noise in the 4-dimensional single-photon qubit
/// space, mixed to the requested fidelity.
MixedState noisy_input_state(InputStateId id, int path, double fidelity);

}  // namespace loqsim

#endif  // LOQSIM_SOURCES_HPP
