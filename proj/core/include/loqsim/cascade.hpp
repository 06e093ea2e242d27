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

#ifndef LOQSIM_CASCADE_HPP
#define LOQSIM_CASCADE_HPP

#include <string>
#include <vector>

#include "loqsim/sources.hpp"

namespace loqsim {

/// Per-degree-of-freedom Bell label of the abstract cascade: the four Bell
/// states of one two-level DoF.
using BellLabel = SamBell;

/// Hyper-Bell label vector over N abstract degrees of freedom.
struct BellLabelVector {
    std::vector<BellLabel> labels;

    friend bool operator==(const BellLabelVector &, const BellLabelVector &) = default;
    friend auto operator<=>(const BellLabelVector &, const BellLabelVector &) = default;
};

std::string to_string(const BellLabelVector &v);  // e.g. "(psi+, psi+, psi-)"

/// All 4^N label vectors, DoF 0 most significant, labels in the order
/// phi+, phi-, psi+, psi-.
std::vector<BellLabelVector> all_label_vectors(int n);

enum class Parity { Symmetric, Antisymmetric };

/// Exchange symmetry of the joint two-photon state: psi- is the sole
/// antisymmetric Bell state, and parities multiply across DoFs, so the
/// vector is antisymmetric iff it holds an odd number of psi- labels.
Parity exchange_parity(const BellLabelVector &v);

/// Beam-splitter coincidence filter: retains exactly the antisymmetric
/// vectors (only those make one photon exit each output port).
std::vector<BellLabelVector> bs_filter(const std::vector<BellLabelVector> &survivors);

/// Projects DoF `dof` onto {psi+, psi-}, then applies the bit-flip erasure
/// on that DoF: psi+ -> phi+, psi- -> phi-.  After the relabeling the DoF
/// is exchange-symmetric, so subsequent exchange_parity ignores it.
std::vector<BellLabelVector> dof_filter_and_flip(const std::vector<BellLabelVector> &survivors,
                                                 int dof);

enum class CascadeStageKind {
    Initial,    ///< the unfiltered 4^N ensemble
    BsFilter,   ///< beam-splitter antisymmetry post-selection
    DofFilter,  ///< per-DoF psi+- filter plus bit-flip erasure
    QndMarker,  ///< where a teleportation-based QND module is required
};

std::string to_string(CascadeStageKind kind);

struct CascadeStage {
    CascadeStageKind kind = CascadeStageKind::Initial;
    int dof = -1;                     ///< DofFilter target (otherwise -1)
    std::vector<int> preserved_dofs;  ///< QndMarker: DoFs the QND must preserve
    int survivors_in = 0;
    int survivors_out = 0;
    /// Survivor set after this stage (erased DoFs already relabeled).
    std::vector<BellLabelVector> survivors;
    /// True when the stage contributes to the headline count sequence
    /// (QND markers filter nothing and are excluded).
    bool counted = false;
};

struct CascadeResult {
    int n = 0;
    std::vector<CascadeStage> stages;
    /// Headline survivor counts: initial plus each filtering stage
    /// (N=3: 64, 28, 16, 6, 4, 1).
    std::vector<int> counts;
    /// The uniquely discriminated state in its original labels
    /// (N=3: (psi+, psi+, psi-)).
    BellLabelVector final_labels;
};

/// The universal N-DoF discrimination cascade: a first beam-splitter
/// filter, then per-DoF filter/flip rounds each followed by a QND marker
/// and another beam-splitter filter, until one vector remains.
/// Throws InvalidArgumentError outside 1 <= n <= 8.
CascadeResult run_cascade(int n);

struct AmplitudeCheckReport {
    int n = 0;
    /// Counted-stage survivor totals from the symbolic cascade and from the
    /// amplitude-level optical simulation (equal when the check passes).
    std::vector<int> symbolic_counts;
    std::vector<int> amplitude_counts;
    bool match = false;
};

/// Re-runs the cascade at the amplitude level with real optical elements
/// (abstract DoFs mapped onto the polarization and orbital registers) and
/// verifies per-label stage survival agrees with the symbolic engine.
/// Throws MismatchError naming the offending label vector; only n in
/// {1, 2} is supported (throws InvalidArgumentError otherwise).
AmplitudeCheckReport amplitude_check(int n);

}  // namespace loqsim

#endif  // LOQSIM_CASCADE_HPP
