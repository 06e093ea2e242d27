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

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "loqsim/conformance.hpp"
#include "loqsim/elements.hpp"
#include "loqsim/errors.hpp"
#include "loqsim/state.hpp"

using namespace loqsim;

namespace {

const cplx kI(0.0, 1.0);

PureState one(int path, Pol pol, int oam, int tag = 0) {
    return PureState::vacuum().create_photons({mode(path, pol, oam, tag)});
}

cplx amp_of(const PureState &s, int path, Pol pol, int oam, int tag = 0) {
    const auto cfg = Configuration::from_modes({mode(path, pol, oam, tag)});
    const auto it = s.terms().find(cfg);
    return it == s.terms().end() ? cplx(0.0) : it->second;
}

}  // namespace

TEST_CASE("every optical element is an isometry on its probe basis") {
    CHECK_NOTHROW(beam_splitter(1, 2, 1, 2).validate());
    CHECK_NOTHROW(polarizing_beam_splitter(1, 2, 1, 2).validate());
    CHECK_NOTHROW(polarizer(1, M_PI / 4).validate());
    CHECK_NOTHROW(wave_plate(1, WavePlateKind::Half, M_PI / 8).validate());
    CHECK_NOTHROW(wave_plate(1, WavePlateKind::Quarter, 0.3).validate());
    CHECK_NOTHROW(mirror(1).validate());
    CHECK_NOTHROW(phase_shift(1, 0.7).validate());
    CHECK_NOTHROW(dove_prism(1, 0.4).validate());
    CHECK_NOTHROW(dove_prism(1, 0.4, DoveMode::Invert).validate());
    CHECK_NOTHROW(spiral_phase_plate(1, 1, SppDirection::Forward).validate());
    CHECK_NOTHROW(spiral_phase_plate(1, 2, SppDirection::Backward, true).validate());
    CHECK_NOTHROW(binary_phase_plate(1, OamSuperposition::Plus).validate());
    CHECK_NOTHROW(binary_phase_plate(1, OamSuperposition::MinusI, true).validate());
    CHECK_NOTHROW(oam_phase_sagnac(1, M_PI / 8).validate());
    CHECK_NOTHROW(sam_controlled_oam_flip(1, M_PI / 2).validate());
    CHECK_NOTHROW(oam_sagnac_sorter(1, 1).validate());
    CHECK_NOTHROW(oam_sagnac_sorter(1, 2).validate());
    CHECK_NOTHROW(swap_gate(1).validate());
    CHECK_NOTHROW(pauli_sam(1, PauliAxis::Y).validate());
    CHECK_NOTHROW(pauli_oam(1, PauliAxis::X).validate());
    CHECK_NOTHROW(wavepacket_rotation(1, 0.9, 5).validate());
}

TEST_CASE("polarizing beam splitter transmits H and reflects V with i and flip") {
    const auto pbs = polarizing_beam_splitter(1, 2, 1, 2);
    const auto h_out = pbs.apply(one(1, Pol::H, 1));
    CHECK(std::abs(amp_of(h_out, 1, Pol::H, 1) - cplx(1.0)) < kTol);
    const auto v_out = pbs.apply(one(1, Pol::V, 1));
    CHECK(std::abs(amp_of(v_out, 2, Pol::V, -1) - kI) < kTol);
    const auto v2_out = pbs.apply(one(2, Pol::V, -1));
    CHECK(std::abs(amp_of(v2_out, 1, Pol::V, 1) - kI) < kTol);
}

TEST_CASE("beam splitter convention: cross term carries i and an orbital flip") {
    const auto bs = beam_splitter(1, 2, 1, 2);
    const auto out = bs.apply(one(1, Pol::H, 1));
    CHECK(std::abs(amp_of(out, 1, Pol::H, 1) - 1.0 / std::sqrt(2.0)) < kTol);
    CHECK(std::abs(amp_of(out, 2, Pol::H, -1) - kI / std::sqrt(2.0)) < kTol);
}

TEST_CASE("wave plate Jones algebra") {
    // HWP at 22.5 deg: H -> (H + V)/sqrt(2).
    const auto hwp = wave_plate(1, WavePlateKind::Half, M_PI / 8);
    const auto d = hwp.apply(one(1, Pol::H, 0));
    CHECK(std::abs(amp_of(d, 1, Pol::H, 0) - 1.0 / std::sqrt(2.0)) < kTol);
    CHECK(std::abs(amp_of(d, 1, Pol::V, 0) - 1.0 / std::sqrt(2.0)) < kTol);
    // HWP at 0: V -> -V.
    const auto hwp0 = wave_plate(1, WavePlateKind::Half, 0.0);
    CHECK(std::abs(amp_of(hwp0.apply(one(1, Pol::V, 0)), 1, Pol::V, 0) + 1.0) < kTol);
    // QWP at 0: H -> H, V -> -i V.
    const auto qwp0 = wave_plate(1, WavePlateKind::Quarter, 0.0);
    CHECK(std::abs(amp_of(qwp0.apply(one(1, Pol::H, 0)), 1, Pol::H, 0) - 1.0) < kTol);
    CHECK(std::abs(amp_of(qwp0.apply(one(1, Pol::V, 0)), 1, Pol::V, 0) + kI) < kTol);
    // Two half-wave plates at the same angle compose to the identity.
    const auto twice = hwp.apply(hwp.apply(one(1, Pol::V, 0)));
    CHECK(std::abs(amp_of(twice, 1, Pol::V, 0) - 1.0) < kTol);
}

TEST_CASE("polarizer projects with amplitude loss") {
    const auto pol = polarizer(1, M_PI / 4);
    CHECK(pol.lossy());
    const auto out = pol.apply(one(1, Pol::H, 0));
    CHECK(out.norm_sq() == doctest::Approx(0.5));
    // Output is the diagonal state scaled by the projection amplitude.
    CHECK(std::abs(amp_of(out, 1, Pol::H, 0) - 0.5) < kTol);
    CHECK(std::abs(amp_of(out, 1, Pol::V, 0) - 0.5) < kTol);
    // Orthogonal input is annihilated.
    const auto anti = polarizer(1, -M_PI / 4).apply(
        wave_plate(1, WavePlateKind::Half, M_PI / 8).apply(one(1, Pol::H, 0)));
    CHECK(anti.norm_sq() == doctest::Approx(0.0));
}

TEST_CASE("mirror and dove prism act on the orbital value") {
    CHECK(std::abs(amp_of(mirror(1).apply(one(1, Pol::H, 2)), 1, Pol::H, -2) - 1.0) < kTol);
    const double theta = 0.3;
    const auto dove = dove_prism(1, theta);
    const auto out = dove.apply(one(1, Pol::H, 2));
    CHECK(std::abs(amp_of(out, 1, Pol::H, 2) - std::exp(-kI * (2.0 * 2.0 * theta))) < kTol);
    const auto inv = dove_prism(1, theta, DoveMode::Invert).apply(one(1, Pol::H, 2));
    CHECK(std::abs(amp_of(inv, 1, Pol::H, -2) - std::exp(-kI * (2.0 * 2.0 * theta))) < kTol);
}

TEST_CASE("spiral phase plate shifts the orbital value") {
    const auto fwd = spiral_phase_plate(1, 2, SppDirection::Forward);
    CHECK(std::abs(amp_of(fwd.apply(one(1, Pol::H, -1)), 1, Pol::H, 1) - 1.0) < kTol);
    const auto bwd = spiral_phase_plate(1, 1, SppDirection::Backward);
    CHECK(std::abs(amp_of(bwd.apply(one(1, Pol::H, 0)), 1, Pol::H, -1) - 1.0) < kTol);
    const auto lossy = spiral_phase_plate(1, 1, SppDirection::Forward, true);
    CHECK(lossy.lossy());
    CHECK(lossy.apply(one(1, Pol::H, 0)).norm_sq() < 1.0);
}

TEST_CASE("binary phase plate maps its target superposition to the zero order") {
    const auto bpp = binary_phase_plate(1, OamSuperposition::Plus);
    const auto plus = PureState::superposition(
        {{Configuration::from_modes({mode(1, Pol::H, 1)}), 1.0 / std::sqrt(2.0)},
         {Configuration::from_modes({mode(1, Pol::H, -1)}), 1.0 / std::sqrt(2.0)}});
    const auto mapped = bpp.apply(plus);
    CHECK(std::norm(amp_of(mapped, 1, Pol::H, 0)) == doctest::Approx(1.0));
    const auto minus = PureState::superposition(
        {{Configuration::from_modes({mode(1, Pol::H, 1)}), 1.0 / std::sqrt(2.0)},
         {Configuration::from_modes({mode(1, Pol::H, -1)}), -1.0 / std::sqrt(2.0)}});
    const auto rejected = bpp.apply(minus);
    CHECK(std::norm(amp_of(rejected, 1, Pol::H, 0)) == doctest::Approx(0.0));
    CHECK(std::norm(amp_of(rejected, 1, Pol::H, 2)) == doctest::Approx(1.0));
}

TEST_CASE("polarization Sagnac loop phases H and V oppositely") {
    const double theta = M_PI / 8;
    const auto sag = oam_phase_sagnac(1, theta);
    const auto h = sag.apply(one(1, Pol::H, 1));
    CHECK(std::abs(amp_of(h, 1, Pol::H, 1) - std::exp(kI * (2.0 * theta))) < kTol);
    const auto v = sag.apply(one(1, Pol::V, 1));
    CHECK(std::abs(amp_of(v, 1, Pol::V, 1) + std::exp(-kI * (2.0 * theta))) < kTol);
}

TEST_CASE("controlled orbital flip is a clean CNOT at theta = pi/2") {
    const auto cnot = sam_controlled_oam_flip(1, M_PI / 2);
    CHECK(std::abs(amp_of(cnot.apply(one(1, Pol::H, 1)), 1, Pol::H, 1) - 1.0) < kTol);
    CHECK(std::abs(amp_of(cnot.apply(one(1, Pol::V, 1)), 1, Pol::V, -1) - 1.0) < kTol);
    CHECK(std::abs(amp_of(cnot.apply(one(1, Pol::V, -1)), 1, Pol::V, 1) - 1.0) < kTol);
}

TEST_CASE("Sagnac sorter truth table with the documented phases") {
    const auto sorter = oam_sagnac_sorter(1, 1);
    const cplx plus_phase = std::exp(kI * (M_PI / 4.0));
    const cplx minus_phase = std::exp(-kI * (M_PI / 4.0));
    // |0s 0o> = H, l=+1.
    CHECK(std::abs(amp_of(sorter.apply(one(1, Pol::H, 1)), 1, Pol::H, 1) - plus_phase) < kTol);
    // |0s 1o> = H, l=-1 -> V, l=-1 with e^{-i pi/4}.
    CHECK(std::abs(amp_of(sorter.apply(one(1, Pol::H, -1)), 1, Pol::V, -1) - minus_phase) < kTol);
    // |1s 0o> = V, l=+1 -> V with e^{+i pi/4}.
    CHECK(std::abs(amp_of(sorter.apply(one(1, Pol::V, 1)), 1, Pol::V, 1) - plus_phase) < kTol);
    // |1s 1o> = V, l=-1 -> H with e^{-i pi/4}.
    CHECK(std::abs(amp_of(sorter.apply(one(1, Pol::V, -1)), 1, Pol::H, -1) - minus_phase) < kTol);

    // Moving variant relocates the photon.
    const auto moving = oam_sagnac_sorter(1, 3);
    CHECK(std::abs(amp_of(moving.apply(one(1, Pol::H, 1)), 3, Pol::H, 1) - plus_phase) < kTol);
}

TEST_CASE("swap gate exchanges the two qubits with unit global phase") {
    const auto sw = swap_gate(1);
    // Basis: |0s 1o> -> |1s 0o> with amplitude exactly +1.
    CHECK(std::abs(amp_of(sw.apply(one(1, Pol::H, -1)), 1, Pol::V, 1) - 1.0) < kTol);
    CHECK(std::abs(amp_of(sw.apply(one(1, Pol::V, 1)), 1, Pol::H, -1) - 1.0) < kTol);
    CHECK(std::abs(amp_of(sw.apply(one(1, Pol::H, 1)), 1, Pol::H, 1) - 1.0) < kTol);
    CHECK(std::abs(amp_of(sw.apply(one(1, Pol::V, -1)), 1, Pol::V, -1) - 1.0) < kTol);
}

TEST_CASE("Pauli elements act on their own qubit only") {
    const auto x = pauli_sam(1, PauliAxis::X);
    CHECK(std::abs(amp_of(x.apply(one(1, Pol::H, 1)), 1, Pol::V, 1) - 1.0) < kTol);
    const auto z = pauli_sam(1, PauliAxis::Z);
    CHECK(std::abs(amp_of(z.apply(one(1, Pol::V, 1)), 1, Pol::V, 1) + 1.0) < kTol);
    const auto y = pauli_oam(1, PauliAxis::Y);
    CHECK(std::abs(amp_of(y.apply(one(1, Pol::H, 1)), 1, Pol::H, -1) - kI) < kTol);
    CHECK(std::abs(amp_of(y.apply(one(1, Pol::H, -1)), 1, Pol::H, 1) + kI) < kTol);
    // Orbital Pauli leaves higher orders alone.
    const auto xo = pauli_oam(1, PauliAxis::X);
    CHECK(std::abs(amp_of(xo.apply(one(1, Pol::H, 2)), 1, Pol::H, 2) - 1.0) < kTol);
}

TEST_CASE("wavepacket rotation splits the reference tag by the overlap") {
    const double x = 0.8;
    const auto rot = wavepacket_rotation(1, x, 7);
    const auto out = rot.apply(one(1, Pol::H, 0, 0));
    CHECK(std::norm(amp_of(out, 1, Pol::H, 0, 0)) == doctest::Approx(x));
    CHECK(std::norm(amp_of(out, 1, Pol::H, 0, 7)) == doctest::Approx(1.0 - x));
    CHECK(out.norm_sq() == doctest::Approx(1.0));
}

TEST_CASE("compose_elements equals sequential application") {
    const auto composed = compose_elements(
        "probe", {wave_plate(1, WavePlateKind::Half, M_PI / 8), mirror(1),
                  phase_shift(1, 0.3)});
    const auto in = one(1, Pol::H, 1);
    const auto direct = phase_shift(1, 0.3).apply(
        mirror(1).apply(wave_plate(1, WavePlateKind::Half, M_PI / 8).apply(in)));
    CHECK(composed.apply(in).equals_up_to_phase(direct));
    CHECK_NOTHROW(composed.validate());
}

TEST_CASE("hyper-Bell conformance tables all match") {
    const auto pbs = pbs_conformance_table();
    REQUIRE(pbs.size() == 16);
    int coincident = 0;
    for (const auto &row : pbs) {
        CAPTURE(row.id);
        CHECK(row.match);
        CHECK(row.overlap >= 1.0 - 1e-9);
        if (row.coincidence_actual) {
            ++coincident;
        }
        CHECK(row.coincidence_actual == row.coincidence_expected);
    }
    // Exactly the four 'phi'-family survivors produce a coincidence.
    CHECK(coincident == 8);
    CHECK(pbs.front().id == "PBS-01");
    CHECK(pbs.back().id == "PBS-16");

    const auto bs = bs_conformance_table();
    REQUIRE(bs.size() == 4);
    int bs_coincident = 0;
    for (const auto &row : bs) {
        CAPTURE(row.id);
        CHECK(row.match);
        CHECK(row.overlap >= 1.0 - 1e-9);
        if (row.coincidence_actual) {
            ++bs_coincident;
            CHECK(row.input_label == "omega-");
        }
    }
    CHECK(bs_coincident == 1);
    CHECK(all_rows_match());
}
