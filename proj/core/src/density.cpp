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

#include "loqsim/density.hpp"

#include <map>
#include <string>
#include <utility>

#include "loqsim/errors.hpp"

namespace loqsim {

Eigen::Matrix2cd pauli_matrix(PauliAxis a) {
    Eigen::Matrix2cd m;
    const cplx i(0.0, 1.0);
    switch (a) {
        case PauliAxis::I:
            m << 1, 0, 0, 1;
            break;
        case PauliAxis::X:
            m << 0, 1, 1, 0;
            break;
        case PauliAxis::Y:
            m << 0, -i, i, 0;
            break;
        case PauliAxis::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    Eigen::Matrix4cd out;
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
        }
    }
    return out;
}

int qubit_pair_index(Pol pol, int oam) {
    if (oam != 1 && oam != -1) {
        return -1;
    }
    return 2 * (pol == Pol::V ? 1 : 0) + (oam == -1 ? 1 : 0);
}

Eigen::Vector4cd product_ket(const Eigen::Vector2cd &sam, const Eigen::Vector2cd &oam) {
    Eigen::Vector4cd v;
    for (int s = 0; s < 2; s++) {
        for (int o = 0; o < 2; o++) {
            v(2 * s + o) = sam(s) * oam(o);
        }
    }
    return v;
}

QubitPairDensity extract_qubit_pair_density(const MixedState &state, int path,
                                            bool allow_leakage) {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    double leak = 0.0;
    double total = 0.0;
    const std::vector<int> path_list = {path};
    for (const auto &branch : state.branches()) {
        total += branch.weight;
        // Coherent 4-vectors keyed by the traced-out environment: the
        // configuration away from `path` plus the photon's wavepacket tag.
        std::map<std::pair<Configuration, int32_t>, Eigen::Vector4cd> groups;
        for (const auto &[cfg, amp] : branch.state.terms()) {
            if (cfg.count_on_path(path) != 1) {
                leak += branch.weight * std::norm(amp);
                continue;
            }
            auto [meas, rest] = cfg.split_paths(path_list);
            const ModeLabel &m = meas.entries().front().first;
            int idx = qubit_pair_index(m.pol, m.oam);
            if (idx < 0) {
                leak += branch.weight * std::norm(amp);
                continue;
            }
            auto key = std::make_pair(rest, m.wavepacket);
            auto it = groups.find(key);
            if (it == groups.end()) {
                it = groups.emplace(key, Eigen::Vector4cd::Zero()).first;
            }
            it->second(idx) += amp;
        }
        for (const auto &[key, vec] : groups) {
            rho += branch.weight * (vec * vec.adjoint());
        }
    }
    double kept = rho.trace().real();
    if (total <= kPruneEps || kept <= kPruneEps) {
        throw ZeroStateError("no weight within the spin-orbit qubit encoding on path " +
                             std::to_string(path));
    }
    QubitPairDensity out;
    out.leakage_weight = leak / total;
    if (!allow_leakage && out.leakage_weight > kTol) {
        throw LeakageError("weight " + std::to_string(out.leakage_weight) +
                           " outside the spin-orbit encoding on path " + std::to_string(path));
    }
    out.rho = rho / kept;
    return out;
}

double fidelity(const QubitPairDensity &density, const Eigen::Vector4cd &target) {
    return (target.adjoint() * density.rho * target)(0).real();
}

double pauli_expectation(const Eigen::Matrix4cd &rho, PauliAxis sam, PauliAxis oam) {
    return (rho * kron(pauli_matrix(sam), pauli_matrix(oam))).trace().real();
}

}  // namespace loqsim
