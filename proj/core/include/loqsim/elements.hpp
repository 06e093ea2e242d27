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

#ifndef LOQSIM_ELEMENTS_HPP
#define LOQSIM_ELEMENTS_HPP

#include "loqsim/density.hpp"
#include "loqsim/transform.hpp"

namespace loqsim {

/// Default single-pass efficiency of a spiral phase plate in lossy mode.
inline constexpr double kSppEfficiency = 0.97;
/// Default conversion efficiency of a binary phase plate in lossy mode.
inline constexpr double kBppEfficiency = 0.80;

/// 50:50 beam splitter between two spatial paths.
///
/// Calibration (fixed by the published interference tables): transmission
/// preserves (pol, orbital value) with amplitude 1/sqrt(2); reflection picks
/// up amplitude i/sqrt(2) and flips the orbital sign l -> -l (the mirror
/// image inversion of the reflected beam).  Polarization is untouched.
ModeTransform beam_splitter(int in1, int in2, int out1, int out2);

/// Polarizing beam splitter: H transmits unchanged (in1 -> out1,
/// in2 -> out2); V reflects with amplitude i and orbital flip l -> -l
/// (in1 -> out2, in2 -> out1).  Same reflection calibration as the beam
/// splitter.
ModeTransform polarizing_beam_splitter(int in1, int in2, int out1, int out2);

/// Linear polarizer at `angle` radians from H: lossy projector onto
/// cos(angle) H + sin(angle) V.  Orbital value and wavepacket untouched.
ModeTransform polarizer(int path, double angle);

enum class WavePlateKind { Half, Quarter };

/// Wave plate with fast axis at `angle` radians.  Jones matrices:
/// half-wave  R(a) diag(1, -1) R(-a)  (HWP at 22.5 deg maps H -> D),
/// quarter-wave R(a) diag(1, -i) R(-a).
ModeTransform wave_plate(int path, WavePlateKind kind, double angle);

/// Plain mirror: image inversion l -> -l, nothing else.
ModeTransform mirror(int path);

/// Constant phase exp(i*phase) on every mode of the path.
ModeTransform phase_shift(int path, double phase);

enum class DoveMode { Phase, Invert };

/// Dove prism rotated by `angle`.
/// Phase mode: multiplies each orbital mode by exp(-i 2 l angle) (the
/// net effect of the prism inside a loop that undoes the image inversion).
/// Invert mode: same phase plus the image inversion l -> -l.
ModeTransform dove_prism(int path, double angle, DoveMode mode = DoveMode::Phase);

enum class SppDirection { Forward, Backward };

/// Spiral phase plate of topological charge `l` (>= 1).  Forward passes add
/// +l to the orbital value, backward passes subtract l.  In lossy mode the
/// amplitude is scaled by sqrt(kSppEfficiency).
ModeTransform spiral_phase_plate(int path, int l, SppDirection direction, bool lossy = false);

/// The four first-order orbital superpositions a binary phase plate can
/// convert to the zero-order mode: (|0>o + e^{i gamma} |1>o)/sqrt(2) with
/// gamma = 0, pi, +pi/2, -pi/2.
enum class OamSuperposition { Plus, Minus, PlusI, MinusI };

/// Binary phase plate matched to `target`: maps the target first-order
/// superposition to the zero-order mode l = 0 and the orthogonal
/// superposition to l = +2 (rejected by a downstream single-mode filter).
/// The inverse images keep the element an isometry.  In lossy mode every
/// amplitude is scaled by sqrt(kBppEfficiency).
ModeTransform binary_phase_plate(int path, OamSuperposition target, bool lossy = false);

/// Polarization Sagnac loop enclosing a Dove prism rotated by `theta`:
/// the H component traverses the loop in the direction that acquires
/// exp(+i 2 l theta); the V component travels the other way and acquires
/// -exp(-i 2 l theta) (the minus sign is the double PBS reflection).
/// No orbital flip survives the round trip.
ModeTransform oam_phase_sagnac(int path, double theta);

/// Controlled orbital flip: H passes unchanged; V has its orbital value
/// inverted with amplitude -exp(-i 2 l theta) (a polarizing loop whose V arm
/// makes two PBS reflections and one pass through an inverting Dove prism
/// rotated by `theta`).  At theta = pi/2 the V amplitude is +1 on l = +-1,
/// i.e. a clean SAM-controlled NOT on the orbital qubit.
ModeTransform sam_controlled_oam_flip(int path, double theta);

/// Sagnac-based orbital sorter: HWP at 22.5 deg, phase Sagnac at pi/8,
/// QWP at 0 and HWP at 22.5 deg, composed into one transform, then the
/// photon is moved from `in_path` to `out_path` (the two path labels are
/// exchanged, so the transform stays unitary).  On the qubit subspace:
///   |0s 0o> -> e^{+i pi/4} |0s 0o>,   |0s 1o> -> e^{-i pi/4} |1s 1o>,
///   |1s 0o> -> e^{+i pi/4} |1s 0o>,   |1s 1o> -> e^{-i pi/4} |0s 1o>,
/// i.e. a CNOT copying the orbital qubit onto the polarization, with
/// orbital-dependent phases e^{+-i pi/4}.
ModeTransform oam_sagnac_sorter(int in_path, int out_path);

/// SWAP between the polarization qubit and the orbital qubit of the photon
/// on `path`: a parity compensator (HWP at 0 plus phase Sagnac at -pi/8)
/// followed by the three-CNOT chain (controlled orbital flip, Sagnac
/// sorter, controlled orbital flip).  Exactly
///   a|0s 0o> + b|1s 0o> + c|0s 1o> + d|1s 1o>
///     -> a|0s 0o> + c|1s 0o> + b|0s 1o> + d|1s 1o>
/// with global phase +1.  Valid on the first-order qubit subspace.
ModeTransform swap_gate(int path);

/// Pauli operator on the polarization qubit (H = |0>, V = |1>).
ModeTransform pauli_sam(int path, PauliAxis axis);

/// Pauli operator on the orbital qubit (l = +1 is |0>, l = -1 is |1>);
/// orbital values outside {+1, -1} are left unchanged.
ModeTransform pauli_oam(int path, PauliAxis axis);

/// Distinguishability beam splitter in the wavepacket degree of freedom:
/// rotates the reference wavepacket (tag 0) into
/// sqrt(overlap) (tag 0) + sqrt(1-overlap) (tag fresh_tag), and the fresh
/// tag into the orthogonal combination.  Models a photon whose temporal
/// amplitude overlaps the reference by sqrt(overlap) in amplitude
/// (`overlap` is the probability weight).
ModeTransform wavepacket_rotation(int path, double overlap, int fresh_tag);

/// Sequential composition of single-photon-linear elements into one
/// transform (the rule of the composite is the chained substitution).
/// `lossy` must be set when any stage is lossy.
ModeTransform compose_elements(std::string name, const std::vector<ModeTransform> &stages,
                               bool lossy = false, std::vector<ModeLabel> probe_hints = {});

}  // namespace loqsim

#endif  // LOQSIM_ELEMENTS_HPP
