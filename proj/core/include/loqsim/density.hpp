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

#ifndef LOQSIM_DENSITY_HPP
#define LOQSIM_DENSITY_HPP

#include <Eigen/Dense>

#include "loqsim/state.hpp"

namespace loqsim {

enum class PauliAxis { I, X, Y, Z };

Eigen::Matrix2cd pauli_matrix(PauliAxis a);

/// Kronecker product of two single-qubit operators, first factor acting on
/// the spin qubit, second on the orbital qubit.
Eigen::Matrix4cd kron(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b);

/// Index of |pol, oam> in the two-qubit basis
/// {|0s 0o>, |0s 1o>, |1s 0o>, |1s 1o>} with |0s> = H, |1s> = V,
/// |0o> = orbital value +1, |1o> = orbital value -1.
/// Returns -1 when the orbital value lies outside the encoding.
int qubit_pair_index(Pol pol, int oam);

/// |sam> (x) |oam> as a 4-vector in the basis above.
Eigen::Vector4cd product_ket(const Eigen::Vector2cd &sam, const Eigen::Vector2cd &oam);

/// The spin-orbit two-qubit density matrix carried by the single photon on
/// one path, with everything else traced out.
struct QubitPairDensity {
    /// Trace-1 density matrix within the qubit encoding.
    Eigen::Matrix4cd rho;
    /// Fraction of the state's weight outside the encoding (no photon or
    /// several photons on the path, or an orbital value not in {+1, -1}).
    double leakage_weight = 0.0;
};

/// Extracts the reduced spin-orbit density matrix of the photon on `path`.
/// Coherence is kept between terms that differ only in the photon's labels;
/// everything else (other paths, wavepacket tags) is traced out.  Throws
/// LeakageError when weight leaks outside the encoding and `allow_leakage`
/// is false; otherwise the returned matrix is renormalized within the
/// encoding and the leaked fraction is reported.
QubitPairDensity extract_qubit_pair_density(const MixedState &state, int path,
                                            bool allow_leakage = false);

/// <target| rho |target>, assuming a normalized target ket.
double fidelity(const QubitPairDensity &density, const Eigen::Vector4cd &target);

/// tr(rho (sigma_sam (x) sigma_oam)).
double pauli_expectation(const Eigen::Matrix4cd &rho, PauliAxis sam, PauliAxis oam);

}  // namespace loqsim

#endif  // LOQSIM_DENSITY_HPP
