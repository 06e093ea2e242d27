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

#include "doctest.h"
#include "loqsim/errors.hpp"
#include "loqsim/sources.hpp"
#include "loqsim/state.hpp"

using namespace loqsim;

namespace {

const cplx kI(0.0, 1.0);

cplx amp_of(const PureState &s, const std::vector<ModeLabel> &modes) {
    const auto cfg = Configuration::from_modes(modes);
    const auto it = s.terms().find(cfg);
    return it == s.terms().end() ? cplx(0.0) : it->second;
}

/// Mixture fidelity sum_i w_i |<target|psi_i>|^2 for a pure target.
double mixture_fidelity(const MixedState &mix, const PureState &target) {
    double f = 0.0;
    for (const auto &b : mix.branches()) {
        f += b.weight * std::norm(target.inner(b.state));
    }
    return f;
}

}  // namespace

TEST_CASE("polarization Bell states have the textbook amplitudes") {
    const double r = 1.0 / std::sqrt(2.0);
    const auto phi_plus = sam_bell_state(SamBell::PhiPlus, 1, 2);
    CHECK(std::abs(amp_of(phi_plus, {mode(1, Pol::H, 0), mode(2, Pol::H, 0)}) - r) < kTol);
    CHECK(std::abs(amp_of(phi_plus, {mode(1, Pol::V, 0), mode(2, Pol::V, 0)}) - r) < kTol);
    const auto psi_minus = sam_bell_state(SamBell::PsiMinus, 1, 2);
    CHECK(std::abs(amp_of(psi_minus, {mode(1, Pol::H, 0), mode(2, Pol::V, 0)}) - r) < kTol);
    CHECK(std::abs(amp_of(psi_minus, {mode(1, Pol::V, 0), mode(2, Pol::H, 0)}) + r) < kTol);
}

TEST_CASE("orbital Bell states: omega correlated, chi anti-correlated") {
    const double r = 1.0 / std::sqrt(2.0);
    const auto omega_plus = oam_bell_state(OamBell::OmegaPlus, 1, 2);
    CHECK(std::abs(amp_of(omega_plus, {mode(1, Pol::H, 1), mode(2, Pol::H, 1)}) - r) < kTol);
    CHECK(std::abs(amp_of(omega_plus, {mode(1, Pol::H, -1), mode(2, Pol::H, -1)}) - r) < kTol);
    const auto chi_minus = oam_bell_state(OamBell::ChiMinus, 1, 2);
    CHECK(std::abs(amp_of(chi_minus, {mode(1, Pol::H, 1), mode(2, Pol::H, -1)}) - r) < kTol);
    CHECK(std::abs(amp_of(chi_minus, {mode(1, Pol::H, -1), mode(2, Pol::H, 1)}) + r) < kTol);
}

TEST_CASE("the sixteen hyper-Bell states are orthonormal") {
    const auto labels = all_hyper_labels();
    for (size_t i = 0; i < labels.size(); ++i) {
        const auto a = hyper_bell_state(labels[i], 1, 2);
        for (size_t j = 0; j < labels.size(); ++j) {
            const auto b = hyper_bell_state(labels[j], 1, 2);
            const double expect = i == j ? 1.0 : 0.0;
            CHECK(std::abs(a.inner(b) - expect) < kTol);
        }
    }
}

TEST_CASE("the resource pair is the (phi-, omega+) hyper-Bell state") {
    const auto pair = hyper_entangled_pair(2, 3);
    const auto target = hyper_bell_state({SamBell::PhiMinus, OamBell::OmegaPlus}, 2, 3);
    CHECK(std::abs(pair.inner(target) - 1.0) < kTol);
    const auto oam_pair = oam_entangled_pair(4, 5);
    CHECK(std::abs(oam_pair.inner(oam_bell_state(OamBell::OmegaPlus, 4, 5)) - 1.0) < kTol);
}

TEST_CASE("canned input amplitudes") {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Vector4cd a = input_state_vector(InputStateId::A);
    CHECK((a - Eigen::Vector4cd(1, 0, 0, 0)).norm() < kTol);
    Eigen::Vector4cd b = input_state_vector(InputStateId::B);
    CHECK((b - Eigen::Vector4cd(0, 0, 0, 1)).norm() < kTol);
    Eigen::Vector4cd c = input_state_vector(InputStateId::C);
    CHECK((c - Eigen::Vector4cd(0.5, 0.5, 0.5, 0.5)).norm() < kTol);
    Eigen::Vector4cd d = input_state_vector(InputStateId::D);
    CHECK((d - Eigen::Vector4cd(0.5, 0.5 * kI, 0.5 * kI, -0.5)).norm() < kTol);
    Eigen::Vector4cd e = input_state_vector(InputStateId::E);
    CHECK((e - Eigen::Vector4cd(r, 0, 0, r)).norm() < kTol);
    for (InputStateId id : all_input_ids()) {
        CHECK(input_state_vector(id).norm() == doctest::Approx(1.0));
    }
}

TEST_CASE("input id round-trips through strings") {
    for (InputStateId id : all_input_ids()) {
        CHECK(input_id_from_string(to_string(id)) == id);
    }
    CHECK(input_id_from_string("e") == InputStateId::E);
    CHECK_THROWS_AS(input_id_from_string("F"), InvalidArgumentError);
}

TEST_CASE("qubit-pair photon encodes SAM major, orbital minor") {
    const auto photon = qubit_pair_photon(Eigen::Vector4cd(0, 1, 0, 0), 3);
    // Index 1 = (|0>s, |1>o) = H with l = -1.
    CHECK(std::abs(amp_of(photon, {mode(3, Pol::H, -1)}) - 1.0) < kTol);
}

TEST_CASE("optical preparation matches the direct encoding for every input") {
    for (InputStateId id : all_input_ids()) {
        CAPTURE(to_string(id));
        const auto direct = input_state_direct(id, 1);
        const auto prepared = prepare_input_state(id, 1);
        CHECK(prepared.norm_sq() == doctest::Approx(1.0));
        CHECK(prepared.overlap_modulus(direct) == doctest::Approx(1.0));
    }
    // The Sagnac preparation of E lands on the exact amplitudes, phase included.
    const auto e = prepare_input_state(InputStateId::E, 1);
    CHECK(std::abs(e.inner(input_state_direct(InputStateId::E, 1)) - 1.0) < kTol);
}

TEST_CASE("parametric source: pair ratios follow the squeezing expansion") {
    SourceParams params;
    params.mu = 0.05;
    const auto res = spdc_source(SpdcKind::ZeroOrder, params, 1, 2);
    // Unnormalized weights: 1 (vacuum), mu (one pair), mu^2/2... with the
    // bosonic factor: ||(S+)^2|0>||^2/4 * mu^2.  For the zero-order source
    // S+ = a1+ a2+, and (a1+ a2+)^2 |0> has squared norm 4, so the two-pair
    // weight is mu^2.
    const auto &s = res.state;
    const double w0 = std::norm(amp_of(s, {}));
    const double w1 =
        std::norm(amp_of(s, {mode(1, Pol::H, 0), mode(2, Pol::H, 0)}));
    const double w2 = std::norm(amp_of(s, {mode(1, Pol::H, 0), mode(1, Pol::H, 0),
                                           mode(2, Pol::H, 0), mode(2, Pol::H, 0)}));
    CHECK(w1 / w0 == doctest::Approx(params.mu));
    CHECK(w2 / w0 == doctest::Approx(params.mu * params.mu));
    CHECK(s.norm_sq() == doctest::Approx(1.0));
    CHECK(res.truncation_tail > 0.0);
    CHECK(res.truncation_tail < 5.0 * std::pow(params.mu, 3));
}

TEST_CASE("hyper-entangled source truncates to the resource pair at first order") {
    SourceParams params;
    params.mu = 0.1;
    params.truncation_order = 1;
    const auto res = spdc_source(SpdcKind::Hyper, params, 2, 3);
    // Post-selecting one photon per path leaves exactly the resource pair.
    const auto pair = hyper_entangled_pair(2, 3);
    double cross = std::abs(res.state.inner(pair));
    CHECK(cross > 0.0);
    // The one-pair amplitude is sqrt(mu / (1 + mu)) of the normalized state.
    CHECK(cross * cross == doctest::Approx(params.mu / (1.0 + params.mu)));
}

TEST_CASE("invalid truncation orders are rejected") {
    SourceParams params;
    params.mu = 0.1;
    params.truncation_order = 3;
    CHECK_THROWS_AS(spdc_source(SpdcKind::ZeroOrder, params, 1, 2), TruncationError);
    params.truncation_order = 0;
    CHECK_THROWS_AS(spdc_source(SpdcKind::ZeroOrder, params, 1, 2), TruncationError);
}

TEST_CASE("white-noise weight solves the isotropic fidelity relation") {
    CHECK(white_noise_weight(1.0, 16) == doctest::Approx(1.0));
    const double p = white_noise_weight(0.95, 16);
    CHECK(p + (1.0 - p) / 16.0 == doctest::Approx(0.95));
    CHECK_THROWS_AS(white_noise_weight(1.0 / 16.0, 16), InvalidArgumentError);
    CHECK_THROWS_AS(white_noise_weight(1.1, 16), InvalidArgumentError);
    CHECK_THROWS_AS(white_noise_weight(-0.1, 4), InvalidArgumentError);
}

TEST_CASE("noisy sources hit their target fidelity exactly") {
    const double f = 0.91;
    const auto pair = noisy_hyper_pair(2, 3, f);
    CHECK(pair.total_weight() == doctest::Approx(1.0));
    CHECK(mixture_fidelity(pair, hyper_entangled_pair(2, 3)) == doctest::Approx(f));

    const auto oam_pair = noisy_oam_pair(4, 5, 0.87);
    CHECK(mixture_fidelity(oam_pair, oam_entangled_pair(4, 5)) == doctest::Approx(0.87));

    const auto input = noisy_input_state(InputStateId::E, 1, 0.92);
    CHECK(mixture_fidelity(input, input_state_direct(InputStateId::E, 1)) ==
          doctest::Approx(0.92));

    // Perfect fidelity collapses to the pure state.
    const auto pure = noisy_hyper_pair(2, 3, 1.0);
    CHECK(mixture_fidelity(pure, hyper_entangled_pair(2, 3)) == doctest::Approx(1.0));
}
