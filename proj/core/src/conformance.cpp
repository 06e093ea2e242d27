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

#include "loqsim/conformance.hpp"

#include <cmath>
#include <cstdio>

#include "loqsim/elements.hpp"

namespace loqsim {

namespace {

constexpr cplx kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
constexpr int R = +1;  // |0>o
constexpr int L = -1;  // |1>o

/// A single-photon creation operator written as a superposition of modes.
using ModeSum = std::vector<std::pair<ModeLabel, cplx>>;

ModeSum diag(int port, int oam) {  // D = (H + V)/sqrt(2)
    return {{mode(port, Pol::H, oam), kInvSqrt2}, {mode(port, Pol::V, oam), kInvSqrt2}};
}

ModeSum anti(int port, int oam) {  // A = (H - V)/sqrt(2)
    return {{mode(port, Pol::H, oam), kInvSqrt2}, {mode(port, Pol::V, oam), -kInvSqrt2}};
}

ModeSum horiz(int port, int oam) { return {{mode(port, Pol::H, oam), cplx{1.0, 0.0}}}; }

/// (sum_i c_i a_i^dag)(sum_j d_j a_j^dag)|0> in Fock normalization.
PureState create_two(const ModeSum &first, const ModeSum &second) {
    PureState out;
    const PureState vac = PureState::vacuum();
    for (const auto &[m1, c1] : first) {
        for (const auto &[m2, c2] : second) {
            const PureState term = vac.create_photons({m1, m2});
            for (const auto &[cfg, amp] : term.terms()) {
                out.add(cfg, c1 * c2 * amp);
            }
        }
    }
    return out;
}

void add_scaled(PureState &acc, const PureState &part, cplx scale) {
    for (const auto &[cfg, amp] : part.terms()) {
        acc.add(cfg, scale * amp);
    }
}

/// D-or-A polarization label for the product builders below.
enum class SamAxis { D, A };

ModeSum sam_photon(SamAxis axis, int port, int oam) {
    return axis == SamAxis::D ? diag(port, oam) : anti(port, oam);
}

struct SamPair {
    SamAxis first, second;
    double coeff;
};
struct OamPair {
    int first, second;
    double coeff;
};

/// sum over SAM pairs x OAM pairs of
///   coeff_s * coeff_o * (first SAM photon on port_a with first OAM)
///                       (second SAM photon on port_b with second OAM).
PureState sam_oam_product(int port_a, int port_b, const std::vector<SamPair> &sam_terms,
                          const std::vector<OamPair> &oam_terms) {
    PureState out;
    for (const auto &sp : sam_terms) {
        for (const auto &op : oam_terms) {
            add_scaled(out,
                       create_two(sam_photon(sp.first, port_a, op.first),
                                  sam_photon(sp.second, port_b, op.second)),
                       cplx{sp.coeff * op.coeff, 0.0});
        }
    }
    return out;
}

std::vector<OamPair> oam_bell_pairs(OamBell label) {
    switch (label) {
        case OamBell::OmegaPlus:
            return {{R, R, kInvSqrt2}, {L, L, kInvSqrt2}};
        case OamBell::OmegaMinus:
            return {{R, R, kInvSqrt2}, {L, L, -kInvSqrt2}};
        case OamBell::ChiPlus:
            return {{R, L, kInvSqrt2}, {L, R, kInvSqrt2}};
        case OamBell::ChiMinus:
            return {{R, L, kInvSqrt2}, {L, R, -kInvSqrt2}};
    }
    return {};
}

const std::vector<SamPair> kDDplusAA{{SamAxis::D, SamAxis::D, 1.0}, {SamAxis::A, SamAxis::A, 1.0}};
const std::vector<SamPair> kDAplusAD{{SamAxis::D, SamAxis::A, 1.0}, {SamAxis::A, SamAxis::D, 1.0}};
const std::vector<SamPair> kDDminusAA{{SamAxis::D, SamAxis::D, 1.0},
                                      {SamAxis::A, SamAxis::A, -1.0}};
const std::vector<SamPair> kDAminusAD{{SamAxis::D, SamAxis::A, 1.0},
                                      {SamAxis::A, SamAxis::D, -1.0}};

/// Coincident rows: (1/sqrt(2)) (sam product across ports 1,2) x OAM Bell.
PureState coincident_expected(const std::vector<SamPair> &sam_terms, OamBell oam) {
    PureState out = sam_oam_product(1, 2, sam_terms, oam_bell_pairs(oam));
    PureState scaled;
    add_scaled(scaled, out, kInvSqrt2);
    return scaled;
}

/// Bunched rows: scale * [(port-1 polynomial) + port2_sign * (port-2 polynomial)].
PureState bunched_expected(const std::vector<SamPair> &sam_terms,
                           const std::vector<OamPair> &oam_terms, cplx scale,
                           double port2_sign) {
    PureState out;
    add_scaled(out, sam_oam_product(1, 1, sam_terms, oam_terms), scale);
    add_scaled(out, sam_oam_product(2, 2, sam_terms, oam_terms), scale * port2_sign);
    return out;
}

PureState pbs_expected(const HyperBellLabel &label) {
    const cplx half_i = kI * 0.5;
    const cplx quarter_i = kI * 0.25;
    const std::vector<OamPair> rl{{R, L, 1.0}};
    const std::vector<OamPair> rr_plus_ll{{R, R, 1.0}, {L, L, 1.0}};
    const std::vector<OamPair> rr_minus_ll{{R, R, 1.0}, {L, L, -1.0}};
    switch (label.sam) {
        case SamBell::PhiMinus:
            switch (label.oam) {
                case OamBell::OmegaPlus:
                    return coincident_expected(kDDplusAA, OamBell::OmegaPlus);
                case OamBell::OmegaMinus:
                    return coincident_expected(kDAplusAD, OamBell::OmegaMinus);
                case OamBell::ChiPlus:
                    return coincident_expected(kDDplusAA, OamBell::ChiPlus);
                case OamBell::ChiMinus:
                    return coincident_expected(kDDplusAA, OamBell::ChiMinus);
            }
            break;
        case SamBell::PhiPlus:
            switch (label.oam) {
                case OamBell::OmegaPlus:
                    return coincident_expected(kDAplusAD, OamBell::OmegaPlus);
                case OamBell::OmegaMinus:
                    return coincident_expected(kDDplusAA, OamBell::OmegaMinus);
                case OamBell::ChiPlus:
                    return coincident_expected(kDAplusAD, OamBell::ChiPlus);
                case OamBell::ChiMinus:
                    return coincident_expected(kDAplusAD, OamBell::ChiMinus);
            }
            break;
        case SamBell::PsiPlus:
            switch (label.oam) {
                case OamBell::OmegaPlus:
                    return bunched_expected(kDDminusAA, rl, half_i, +1.0);
                case OamBell::OmegaMinus:
                    return bunched_expected(kDAminusAD, rl, half_i, +1.0);
                case OamBell::ChiPlus:
                    return bunched_expected(kDDminusAA, rr_plus_ll, quarter_i, +1.0);
                case OamBell::ChiMinus:
                    return bunched_expected(kDDminusAA, rr_minus_ll, quarter_i, -1.0);
            }
            break;
        case SamBell::PsiMinus:
            switch (label.oam) {
                case OamBell::OmegaPlus:
                    return bunched_expected(kDDminusAA, rl, half_i, -1.0);
                case OamBell::OmegaMinus:
                    return bunched_expected(kDAminusAD, rl, half_i, -1.0);
                case OamBell::ChiPlus:
                    return bunched_expected(kDDminusAA, rr_plus_ll, quarter_i, -1.0);
                case OamBell::ChiMinus:
                    return bunched_expected(kDDminusAA, rr_minus_ll, quarter_i, +1.0);
            }
            break;
    }
    return PureState{};
}

bool pbs_coincidence_expected(const HyperBellLabel &label) {
    return label.sam == SamBell::PhiPlus || label.sam == SamBell::PhiMinus;
}

PureState bs_expected(OamBell label) {
    const cplx i_over_sqrt2 = kI * kInvSqrt2;
    const cplx i_over_2sqrt2 = kI * (0.5 * kInvSqrt2);
    PureState out;
    switch (label) {
        case OamBell::OmegaPlus:
            add_scaled(out, create_two(horiz(1, R), horiz(1, L)), i_over_sqrt2);
            add_scaled(out, create_two(horiz(2, R), horiz(2, L)), i_over_sqrt2);
            break;
        case OamBell::OmegaMinus:
            add_scaled(out, create_two(horiz(1, R), horiz(2, R)), kInvSqrt2);
            add_scaled(out, create_two(horiz(1, L), horiz(2, L)), -kInvSqrt2);
            break;
        case OamBell::ChiPlus:
            add_scaled(out, create_two(horiz(1, R), horiz(1, R)), i_over_2sqrt2);
            add_scaled(out, create_two(horiz(1, L), horiz(1, L)), i_over_2sqrt2);
            add_scaled(out, create_two(horiz(2, R), horiz(2, R)), i_over_2sqrt2);
            add_scaled(out, create_two(horiz(2, L), horiz(2, L)), i_over_2sqrt2);
            break;
        case OamBell::ChiMinus:
            add_scaled(out, create_two(horiz(1, R), horiz(1, R)), i_over_2sqrt2);
            add_scaled(out, create_two(horiz(1, L), horiz(1, L)), -i_over_2sqrt2);
            add_scaled(out, create_two(horiz(2, R), horiz(2, R)), -i_over_2sqrt2);
            add_scaled(out, create_two(horiz(2, L), horiz(2, L)), i_over_2sqrt2);
            break;
    }
    return out;
}

bool is_coincident(const Configuration &cfg) {
    return cfg.count_on_path(1) == 1 && cfg.count_on_path(2) == 1;
}

ConformanceRow make_row(std::string id, std::string input_label, const PureState &expected,
                        const PureState &actual, bool coincidence_expected) {
    ConformanceRow row;
    row.id = std::move(id);
    row.input_label = std::move(input_label);
    const PureState e = expected.normalized();
    const PureState a = actual.normalized();
    const cplx ip = e.inner(a);
    row.overlap = std::abs(ip);
    row.residual_phase = (row.overlap > kPruneEps) ? ip / row.overlap : cplx{0.0, 0.0};
    row.coincidence_expected = coincidence_expected;
    row.coincidence_actual =
        a.weight_where([](const Configuration &cfg) { return is_coincident(cfg); }) > 1e-12;
    row.match = (row.overlap >= 1.0 - 1e-9) &&
                (row.coincidence_expected == row.coincidence_actual);
    return row;
}

}  // namespace

std::vector<ConformanceRow> pbs_conformance_table() {
    // Published row order.
    const std::vector<HyperBellLabel> order{
        {SamBell::PhiMinus, OamBell::OmegaPlus}, {SamBell::PhiPlus, OamBell::OmegaMinus},
        {SamBell::PhiMinus, OamBell::ChiPlus},   {SamBell::PhiMinus, OamBell::ChiMinus},
        {SamBell::PhiPlus, OamBell::OmegaPlus},  {SamBell::PhiMinus, OamBell::OmegaMinus},
        {SamBell::PhiPlus, OamBell::ChiPlus},    {SamBell::PhiPlus, OamBell::ChiMinus},
        {SamBell::PsiPlus, OamBell::OmegaPlus},  {SamBell::PsiMinus, OamBell::OmegaPlus},
        {SamBell::PsiPlus, OamBell::OmegaMinus}, {SamBell::PsiMinus, OamBell::OmegaMinus},
        {SamBell::PsiPlus, OamBell::ChiPlus},    {SamBell::PsiMinus, OamBell::ChiPlus},
        {SamBell::PsiPlus, OamBell::ChiMinus},   {SamBell::PsiMinus, OamBell::ChiMinus}};
    const ModeTransform pbs = polarizing_beam_splitter(1, 2, 1, 2);
    std::vector<ConformanceRow> rows;
    rows.reserve(order.size());
    int k = 0;
    for (const auto &label : order) {
        char id[16];
        std::snprintf(id, sizeof(id), "PBS-%02d", ++k);
        const PureState actual = pbs.apply(hyper_bell_state(label, 1, 2));
        rows.push_back(make_row(id, to_string(label), pbs_expected(label), actual,
                                pbs_coincidence_expected(label)));
    }
    return rows;
}

std::vector<ConformanceRow> bs_conformance_table() {
    const ModeTransform bs = beam_splitter(1, 2, 1, 2);
    std::vector<ConformanceRow> rows;
    int k = 0;
    for (OamBell label : all_oam_bells()) {
        char id[16];
        std::snprintf(id, sizeof(id), "BS-%d", ++k);
        const PureState actual = bs.apply(oam_bell_state(label, 1, 2, Pol::H));
        rows.push_back(make_row(id, to_string(label), bs_expected(label), actual,
                                label == OamBell::OmegaMinus));
    }
    return rows;
}

bool all_rows_match() {
    for (const auto &row : pbs_conformance_table()) {
        if (!row.match) {
            return false;
        }
    }
    for (const auto &row : bs_conformance_table()) {
        if (!row.match) {
            return false;
        }
    }
    return true;
}

}  // namespace loqsim
