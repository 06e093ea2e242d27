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

#include "loqsim/elements.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "loqsim/errors.hpp"

namespace loqsim {

namespace {

constexpr cplx kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<int> unique_paths(std::initializer_list<int> paths) {
    std::set<int> s(paths);
    return {s.begin(), s.end()};
}

void require_distinct(int a, int b, const char *what) {
    if (a == b) {
        throw InvalidArgumentError(std::string(what) + ": input paths must be distinct");
    }
}

/// Shared two-port splitter builder.  `route` decides, per input mode, the
/// transmitted and reflected contributions.  When the output paths differ
/// from the input paths, modes already sitting on an output path are routed
/// back to the matching input path so the substitution stays unitary.
ModeTransform two_port(std::string name, int in1, int in2, int out1, int out2,
                       ModeTransform::RuleFn on_inputs) {
    require_distinct(in1, in2, name.c_str());
    require_distinct(out1, out2, name.c_str());
    const bool in_place = (std::min(in1, in2) == std::min(out1, out2)) &&
                          (std::max(in1, in2) == std::max(out1, out2));
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
        if (m.path == in1 || m.path == in2) {
            return on_inputs(m);
        }
        // Fresh output port: relabel back onto the matching input port.
        ModeLabel back = m;
        back.path = (m.path == out1) ? in1 : in2;
        return {{back, cplx{1.0, 0.0}}};
    };
    std::vector<int> paths =
        in_place ? unique_paths({in1, in2}) : unique_paths({in1, in2, out1, out2});
    return ModeTransform(std::move(name), std::move(paths), std::move(fn));
}

}  // namespace

ModeTransform beam_splitter(int in1, int in2, int out1, int out2) {
    auto on_inputs = [=](const ModeLabel &m) -> ModeTransform::Rule {
        const int straight = (m.path == in1) ? out1 : out2;
        const int across = (m.path == in1) ? out2 : out1;
        ModeLabel t = m, r = m;
        t.path = straight;
        r.path = across;
        r.oam = -m.oam;
        return {{t, kInvSqrt2}, {r, kI * kInvSqrt2}};
    };
    return two_port("beam_splitter", in1, in2, out1, out2, on_inputs);
}

ModeTransform polarizing_beam_splitter(int in1, int in2, int out1, int out2) {
    auto on_inputs = [=](const ModeLabel &m) -> ModeTransform::Rule {
        const int straight = (m.path == in1) ? out1 : out2;
        const int across = (m.path == in1) ? out2 : out1;
        if (m.pol == Pol::H) {
            ModeLabel t = m;
            t.path = straight;
            return {{t, cplx{1.0, 0.0}}};
        }
        ModeLabel r = m;
        r.path = across;
        r.oam = -m.oam;
        return {{r, kI}};
    };
    return two_port("polarizing_beam_splitter", in1, in2, out1, out2, on_inputs);
}

ModeTransform polarizer(int path, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
        const double along = (m.pol == Pol::H) ? c : s;
        ModeTransform::Rule rule;
        ModeLabel h = m, v = m;
        h.pol = Pol::H;
        v.pol = Pol::V;
        if (std::abs(along * c) > 0.0) {
            rule.emplace_back(h, cplx{along * c, 0.0});
        }
        if (std::abs(along * s) > 0.0) {
            rule.emplace_back(v, cplx{along * s, 0.0});
        }
        return rule;
    };
    return ModeTransform("polarizer", {path}, std::move(fn), /*lossy=*/true);
}

ModeTransform wave_plate(int path, WavePlateKind kind, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    // Jones matrix columns (action on H and on V).
    cplx hh, hv, vh, vv;
    if (kind == WavePlateKind::Half) {
        hh = std::cos(2.0 * angle);
        vh = std::sin(2.0 * angle);
        hv = std::sin(2.0 * angle);
        vv = -std::cos(2.0 * angle);
    } else {
        hh = cplx{c * c, -s * s};
        vh = cplx{c * s, c * s};
        hv = cplx{c * s, c * s};
        vv = cplx{s * s, -c * c};
    }
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
        ModeLabel h = m, v = m;
        h.pol = Pol::H;
        v.pol = Pol::V;
        const cplx to_h = (m.pol == Pol::H) ? hh : hv;
        const cplx to_v = (m.pol == Pol::H) ? vh : vv;
        return {{h, to_h}, {v, to_v}};
    };
    const char *name = (kind == WavePlateKind::Half) ? "half_wave_plate" : "quarter_wave_plate";
    return ModeTransform(name, {path}, std::move(fn));
}

ModeTransform mirror(int path) {
    auto fn = [](const ModeLabel &m) -> ModeTransform::Rule {
        ModeLabel out = m;
        out.oam = -m.oam;
        return {{out, cplx{1.0, 0.0}}};
    };
    return ModeTransform("mirror", {path}, std::move(fn));
}

ModeTransform phase_shift(int path, double phase) {
    const cplx factor = std::exp(kI * phase);
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule { return {{m, factor}}; };
    return ModeTransform("phase_shift", {path}, std::move(fn));
}

ModeTransform dove_prism(int path, double angle, DoveMode mode) {
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
        const cplx factor = std::exp(-kI * (2.0 * m.oam * angle));
        ModeLabel out = m;
        if (mode == DoveMode::Invert) {
            out.oam = -m.oam;
        }
        return {{out, factor}};
    };
    return ModeTransform("dove_prism", {path}, std::move(fn));
}

ModeTransform spiral_phase_plate(int path, int l, SppDirection direction, bool lossy) {
    if (l < 1) {
        throw InvalidArgumentError("spiral_phase_plate: topological charge must be >= 1");
    }
    const int delta = (direction == SppDirection::Forward) ? l : -l;
    const double amp = lossy ? std::sqrt(kSppEfficiency) : 1.0;
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
        ModeLabel out = m;
        out.oam = m.oam + delta;
        return {{out, cplx{amp, 0.0}}};
    };
    return ModeTransform("spiral_phase_plate", {path}, std::move(fn), lossy);
}

ModeTransform binary_phase_plate(int path, OamSuperposition target, bool lossy) {
    cplx gamma_phase;  // e^{i gamma} of the matched superposition
    switch (target) {
        case OamSuperposition::Plus:
            gamma_phase = cplx{1.0, 0.0};
            break;
        case OamSuperposition::Minus:
            gamma_phase = cplx{-1.0, 0.0};
            break;
        case OamSuperposition::PlusI:
            gamma_phase = cplx{0.0, 1.0};
            break;
        case OamSuperposition::MinusI:
            gamma_phase = cplx{0.0, -1.0};
            break;
    }
    const double eta = lossy ? std::sqrt(kBppEfficiency) : 1.0;
    // Block unitary on orbital values {0, +1, -1, +2}: the matched
    // superposition of {+1, -1} converts to 0, the orthogonal one to +2;
    // inverse images of 0 and +2 complete the unitary.
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
        ModeLabel o0 = m, oP = m, oM = m, o2 = m;
        o0.oam = 0;
        oP.oam = 1;
        oM.oam = -1;
        o2.oam = 2;
        switch (m.oam) {
            case 1:
                return {{o0, eta * kInvSqrt2}, {o2, eta * kInvSqrt2}};
            case -1:
                return {{o0, eta * std::conj(gamma_phase) * kInvSqrt2},
                        {o2, -eta * std::conj(gamma_phase) * kInvSqrt2}};
            case 0:
                return {{oP, eta * kInvSqrt2}, {oM, eta * gamma_phase * kInvSqrt2}};
            case 2:
                return {{oP, eta * kInvSqrt2}, {oM, -eta * gamma_phase * kInvSqrt2}};
            default:
                return {{m, cplx{eta, 0.0}}};
        }
    };
    return ModeTransform("binary_phase_plate", {path}, std::move(fn), lossy);
}

ModeTransform oam_phase_sagnac(int path, double theta) {
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
        const cplx factor = (m.pol == Pol::H)
                                ? std::exp(kI * (2.0 * m.oam * theta))
                                : -std::exp(-kI * (2.0 * m.oam * theta));
        return {{m, factor}};
    };
    return ModeTransform("oam_phase_sagnac", {path}, std::move(fn));
}

ModeTransform sam_controlled_oam_flip(int path, double theta) {
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
        if (m.pol == Pol::H) {
            return {{m, cplx{1.0, 0.0}}};
        }
        ModeLabel out = m;
        out.oam = -m.oam;
        return {{out, -std::exp(-kI * (2.0 * m.oam * theta))}};
    };
    return ModeTransform("sam_controlled_oam_flip", {path}, std::move(fn));
}

ModeTransform oam_sagnac_sorter(int in_path, int out_path) {
    std::vector<ModeTransform> stages;
    stages.push_back(wave_plate(in_path, WavePlateKind::Half, M_PI / 8.0));
    stages.push_back(oam_phase_sagnac(in_path, M_PI / 8.0));
    stages.push_back(wave_plate(in_path, WavePlateKind::Quarter, 0.0));
    stages.push_back(wave_plate(in_path, WavePlateKind::Half, M_PI / 8.0));
    if (in_path != out_path) {
        auto move_fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
            ModeLabel out = m;
            out.path = (m.path == in_path) ? out_path : in_path;
            return {{out, cplx{1.0, 0.0}}};
        };
        stages.emplace_back("path_exchange", unique_paths({in_path, out_path}),
                            std::move(move_fn));
    }
    return compose_elements("oam_sagnac_sorter", stages);
}

ModeTransform swap_gate(int path) {
    std::vector<ModeTransform> stages;
    // Parity compensator: HWP at 0 plus a phase Sagnac at -pi/8 cancels the
    // residual orbital-polarization-correlated phase of the CNOT chain.
    stages.push_back(wave_plate(path, WavePlateKind::Half, 0.0));
    stages.push_back(oam_phase_sagnac(path, -M_PI / 8.0));
    stages.push_back(sam_controlled_oam_flip(path, M_PI / 2.0));
    stages.push_back(oam_sagnac_sorter(path, path));
    stages.push_back(sam_controlled_oam_flip(path, M_PI / 2.0));
    return compose_elements("swap_gate", stages);
}

ModeTransform pauli_sam(int path, PauliAxis axis) {
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
        ModeLabel flip = m;
        flip.pol = (m.pol == Pol::H) ? Pol::V : Pol::H;
        switch (axis) {
            case PauliAxis::I:
                return {{m, cplx{1.0, 0.0}}};
            case PauliAxis::X:
                return {{flip, cplx{1.0, 0.0}}};
            case PauliAxis::Y:
                return {{flip, (m.pol == Pol::H) ? kI : -kI}};
            case PauliAxis::Z:
                return {{m, (m.pol == Pol::H) ? cplx{1.0, 0.0} : cplx{-1.0, 0.0}}};
        }
        return {{m, cplx{1.0, 0.0}}};
    };
    return ModeTransform("pauli_sam", {path}, std::move(fn));
}

ModeTransform pauli_oam(int path, PauliAxis axis) {
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
        if (m.oam != 1 && m.oam != -1) {
            return {{m, cplx{1.0, 0.0}}};
        }
        const bool is_zero = (m.oam == 1);  // l=+1 encodes |0>o
        ModeLabel flip = m;
        flip.oam = -m.oam;
        switch (axis) {
            case PauliAxis::I:
                return {{m, cplx{1.0, 0.0}}};
            case PauliAxis::X:
                return {{flip, cplx{1.0, 0.0}}};
            case PauliAxis::Y:
                return {{flip, is_zero ? kI : -kI}};
            case PauliAxis::Z:
                return {{m, is_zero ? cplx{1.0, 0.0} : cplx{-1.0, 0.0}}};
        }
        return {{m, cplx{1.0, 0.0}}};
    };
    return ModeTransform("pauli_oam", {path}, std::move(fn));
}

ModeTransform wavepacket_rotation(int path, double overlap, int fresh_tag) {
    if (overlap < 0.0 || overlap > 1.0) {
        throw InvalidArgumentError("wavepacket_rotation: overlap must lie in [0, 1]");
    }
    if (fresh_tag == 0) {
        throw InvalidArgumentError("wavepacket_rotation: fresh tag must differ from reference");
    }
    const double c = std::sqrt(overlap);
    const double s = std::sqrt(1.0 - overlap);
    auto fn = [=](const ModeLabel &m) -> ModeTransform::Rule {
        if (m.wavepacket != 0 && m.wavepacket != fresh_tag) {
            return {{m, cplx{1.0, 0.0}}};
        }
        ModeLabel ref = m, fresh = m;
        ref.wavepacket = 0;
        fresh.wavepacket = fresh_tag;
        if (m.wavepacket == 0) {
            return {{ref, cplx{c, 0.0}}, {fresh, cplx{s, 0.0}}};
        }
        return {{ref, cplx{-s, 0.0}}, {fresh, cplx{c, 0.0}}};
    };
    std::vector<ModeLabel> hints;
    for (Pol pol : {Pol::H, Pol::V}) {
        for (int l = -1; l <= 1; ++l) {
            hints.push_back(mode(path, pol, l, fresh_tag));
        }
    }
    return ModeTransform("wavepacket_rotation", {path}, std::move(fn), /*lossy=*/false,
                         std::move(hints));
}

ModeTransform compose_elements(std::string name, const std::vector<ModeTransform> &stages,
                               bool lossy, std::vector<ModeLabel> probe_hints) {
    std::set<int> path_set;
    bool any_lossy = lossy;
    for (const auto &stage : stages) {
        path_set.insert(stage.paths().begin(), stage.paths().end());
        any_lossy = any_lossy || stage.lossy();
    }
    auto chained = [stages](const ModeLabel &m) -> ModeTransform::Rule {
        std::map<ModeLabel, cplx> current{{m, cplx{1.0, 0.0}}};
        for (const auto &stage : stages) {
            std::map<ModeLabel, cplx> next;
            for (const auto &[label, amp] : current) {
                for (const auto &[out, coeff] : stage.rule_for(label)) {
                    next[out] += amp * coeff;
                }
            }
            current = std::move(next);
        }
        ModeTransform::Rule rule;
        rule.reserve(current.size());
        for (const auto &[label, amp] : current) {
            if (std::abs(amp) > kPruneEps) {
                rule.emplace_back(label, amp);
            }
        }
        return rule;
    };
    return ModeTransform(std::move(name), {path_set.begin(), path_set.end()}, std::move(chained),
                         any_lossy, std::move(probe_hints));
}

}  // namespace loqsim
