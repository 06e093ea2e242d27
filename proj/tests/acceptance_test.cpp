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

/// Release gate: eleven structural claims about the simulator, each checked
/// with pinned tolerances and printed as a single PASS/FAIL line.  The
/// binary exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "loqsim/loqsim.hpp"

using namespace loqsim;

namespace {

constexpr double kEps = 1e-9;        // headline numeric tolerance
constexpr double kZeroEps = 1e-12;   // "probability zero" threshold
constexpr double kExactEps = 1e-12;  // algebraically exact identities
constexpr double kHomEps = 1e-6;     // visibility inversion tolerance

struct Gate {
    int failures = 0;

    void run(int id, const std::string &name, double time_limit_s,
             const std::function<bool(std::string &)> &body) {
        const auto t0 = std::chrono::steady_clock::now();
        bool pass = false;
        std::string detail;
        try {
            pass = body(detail);
        } catch (const std::exception &e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (time_limit_s > 0 && secs >= time_limit_s) {
            pass = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += "over time limit";
        }
        std::printf("criterion %2d: %s  %s (%.2f s%s)%s%s\n", id, pass ? "PASS" : "FAIL",
                    name.c_str(), secs,
                    time_limit_s > 0 ? (" / limit " + format_double(time_limit_s) + " s").c_str()
                                     : "",
                    detail.empty() ? "" : " — ", detail.c_str());
        if (!pass) {
            ++failures;
        }
    }
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

Eigen::Vector4cd random_qubit_pair(std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::Vector4cd v;
    do {
        for (int i = 0; i < 4; ++i) {
            v[i] = cplx(g(rng), g(rng));
        }
    } while (v.norm() < 1e-6);
    return v / v.norm();
}

}  // namespace

int main() {
    Gate gate;

    gate.run(1, "polarizing-splitter conformance (16 rows)", 1.0, [](std::string &detail) {
        const auto rows = pbs_conformance_table();
        if (rows.size() != 16) {
            detail = "expected 16 rows";
            return false;
        }
        for (const auto &row : rows) {
            if (!row.match || row.overlap < 1.0 - kEps) {
                detail = "row " + row.id + " (" + row.input_label + ") does not match";
                return false;
            }
        }
        return true;
    });

    gate.run(2, "splitter conformance (4 rows, omega- coincidence only)", 1.0,
             [](std::string &detail) {
                 const auto rows = bs_conformance_table();
                 if (rows.size() != 4) {
                     detail = "expected 4 rows";
                     return false;
                 }
                 for (const auto &row : rows) {
                     if (!row.match) {
                         detail = "row " + row.id + " does not match";
                         return false;
                     }
                     const bool want = row.input_label == "omega-";
                     if (row.coincidence_actual != want) {
                         detail = "row " + row.id + " coincidence wrong";
                         return false;
                     }
                 }
                 return true;
             });

    gate.run(3, "decomposition flatness (100 random inputs)", 10.0, [](std::string &detail) {
        std::mt19937_64 rng(20260815);
        for (int trial = 0; trial < 100; ++trial) {
            const auto rows = hyper_bell_decompose(random_qubit_pair(rng));
            if (rows.size() != 16) {
                detail = "expected 16 outcomes";
                return false;
            }
            for (const auto &row : rows) {
                if (!near(row.probability, 1.0 / 16.0, kEps)) {
                    detail = "probability of " + to_string(row.outcome) + " not 1/16";
                    return false;
                }
                if (!near(row.corrected_fidelity, 1.0, kEps)) {
                    detail = "corrected fidelity of " + to_string(row.outcome) + " not 1";
                    return false;
                }
            }
        }
        return true;
    });

    gate.run(4, "measurement chain efficiency (1/32 on 2 of 16 labels)", 30.0,
             [](std::string &detail) {
                 const HyperBellLabel label_a{SamBell::PhiMinus, OamBell::OmegaPlus};
                 const HyperBellLabel label_b{SamBell::PhiPlus, OamBell::OmegaMinus};
                 for (const auto &label : all_hyper_labels()) {
                     const auto res = full_hbsm(hyper_bell_state(label, 1, 2), 1, 2, 4, 5);
                     if (label == label_a || label == label_b) {
                         if (!res.identified || !(*res.identified == label)) {
                             detail = to_string(label) + " not identified";
                             return false;
                         }
                         if (!near(res.success_probability, 1.0 / 32.0, kEps)) {
                             detail = to_string(label) + " signature probability not 1/32";
                             return false;
                         }
                     } else {
                         double total = 0.0;
                         for (const auto &sig : res.signatures) {
                             total += sig.probability;
                         }
                         if (total >= kZeroEps) {
                             detail = to_string(label) + " fires with probability " +
                                      format_double(total);
                             return false;
                         }
                     }
                 }
                 return true;
             });

    gate.run(5, "ideal end-to-end fidelity (A-E, witness triple for E)", 60.0,
             [](std::string &detail) {
                 for (InputStateId id : all_input_ids()) {
                     const auto report = run_teleportation(id, NoiseParams::ideal());
                     if (!near(report.fidelity, 1.0, kEps)) {
                         detail = std::string("input ") + to_string(id) + " fidelity " +
                                  format_double(report.fidelity);
                         return false;
                     }
                 }
                 const auto e = run_teleportation(InputStateId::E, NoiseParams::ideal());
                 if (!e.pauli_expectations) {
                     detail = "missing witness triple";
                     return false;
                 }
                 const auto &p = *e.pauli_expectations;
                 if (!near(p.xx, 1.0, kEps) || !near(p.yy, -1.0, kEps) ||
                     !near(p.zz, 1.0, kEps)) {
                     detail = "witness triple not (1, -1, 1)";
                     return false;
                 }
                 const double f_witness = 0.25 * (1.0 + p.xx - p.yy + p.zz);
                 if (!near(f_witness, e.fidelity, kEps)) {
                     detail = "witness formula disagrees with the direct overlap";
                     return false;
                 }
                 return true;
             });

    gate.run(6, "nondestructive herald (1/2 with photon, 0 with vacuum)", 60.0,
             [](std::string &detail) {
                 const cplx im(0.0, 1.0);
                 const auto in = PureState::superposition(
                     {{Configuration::from_modes({mode(1, Pol::H, 1)}), 0.6},
                      {Configuration::from_modes({mode(1, Pol::H, -1)}), 0.8 * im}});
                 const auto res = qnd_teleport(in, 1, 4, 5);
                 if (!near(res.herald_probability, 0.5, kEps)) {
                     detail = "herald probability " + format_double(res.herald_probability);
                     return false;
                 }
                 const auto expected = PureState::superposition(
                     {{Configuration::from_modes({mode(5, Pol::H, 1)}), 0.6},
                      {Configuration::from_modes({mode(5, Pol::H, -1)}), 0.8 * im}});
                 for (const auto &branch : res.branches) {
                     const MixedState cond = branch.conditional.normalized();
                     double f = 0.0;
                     for (const auto &b : cond.branches()) {
                         f += b.weight * std::norm(expected.inner(b.state));
                     }
                     if (!near(f, 1.0, kEps)) {
                         detail = "heralded qubit fidelity " + format_double(f);
                         return false;
                     }
                 }
                 const auto vac = qnd_teleport(PureState::vacuum(), 1, 4, 5);
                 if (vac.herald_probability != 0.0) {
                     detail = "vacuum herald not exactly zero";
                     return false;
                 }
                 return true;
             });

    gate.run(7, "noise brackets (mixing law, splitter immunity, calibration)", 120.0,
             [](std::string &detail) {
                 for (InputStateId id : all_input_ids()) {
                     const double f0 =
                         run_teleportation(id, NoiseParams::ideal()).fidelity;
                     NoiseParams noise;
                     noise.background_weight = 0.15;
                     const double f = run_teleportation(id, noise).fidelity;
                     if (!near(f, 0.85 * f0 + 0.0375, kExactEps)) {
                         detail = std::string("mixing law broken for ") + to_string(id);
                         return false;
                     }
                 }
                 NoiseParams pbs_noise;
                 pbs_noise.overlap_pbs = 0.9;
                 const double fa = run_teleportation(InputStateId::A, pbs_noise).fidelity;
                 const double fb = run_teleportation(InputStateId::B, pbs_noise).fidelity;
                 if (!near(fa, 1.0, kEps) || !near(fb, 1.0, kEps)) {
                     detail = "basis inputs not immune to splitter distinguishability";
                     return false;
                 }
                 for (InputStateId id : {InputStateId::C, InputStateId::D, InputStateId::E}) {
                     if (run_teleportation(id, pbs_noise).fidelity >= 1.0 - 1e-6) {
                         detail = std::string("input ") + to_string(id) +
                                  " did not degrade under splitter distinguishability";
                         return false;
                     }
                 }
                 const auto rows = error_budget_eval(NoiseParams::calibration());
                 for (const auto &row : rows) {
                     if (row.fidelity < 0.5 || row.fidelity > 0.8) {
                         detail = std::string("calibration fidelity for ") +
                                  to_string(row.input_id) + " = " +
                                  format_double(row.fidelity) + " outside [0.5, 0.8]";
                         return false;
                     }
                     if (row.fidelity <= 0.40) {
                         detail = "calibration fidelity below the classical bound";
                         return false;
                     }
                 }
                 return true;
             });

    gate.run(8, "interference scans (perfect visibility, monotone, inversion)", 60.0,
             [](std::string &detail) {
                 for (Interferometer which :
                      {Interferometer::Pbs, Interferometer::Bs1, Interferometer::Bs2}) {
                     if (!near(visibility_at_overlap(which, 1.0), 1.0, kEps)) {
                         detail = "visibility at perfect overlap not 1 (" + to_string(which) +
                                  ")";
                         return false;
                     }
                     double prev = -1.0;
                     for (int i = 0; i <= 20; ++i) {
                         const double v = visibility_at_overlap(which, i / 20.0);
                         if (v <= prev - 1e-12) {
                             detail = "visibility not monotone (" + to_string(which) + ")";
                             return false;
                         }
                         prev = v;
                     }
                 }
                 const std::pair<Interferometer, double> targets[] = {
                     {Interferometer::Pbs, 0.75},
                     {Interferometer::Bs1, 0.73},
                     {Interferometer::Bs2, 0.69},
                 };
                 for (const auto &[which, v] : targets) {
                     const double x = overlap_for_visibility(which, v);
                     if (!near(visibility_at_overlap(which, x), v, kHomEps)) {
                         detail = "inversion misses target " + format_double(v);
                         return false;
                     }
                 }
                 return true;
             });

    gate.run(9, "cascade counts and amplitude agreement", 5.0, [](std::string &detail) {
        const auto three = run_cascade(3);
        if (three.counts != std::vector<int>{64, 28, 16, 6, 4, 1} ||
            !(three.final_labels ==
              BellLabelVector{{SamBell::PsiPlus, SamBell::PsiPlus, SamBell::PsiMinus}})) {
            detail = "three-fold cascade wrong";
            return false;
        }
        const auto two = run_cascade(2);
        if (two.counts != std::vector<int>{16, 6, 4, 1} ||
            !(two.final_labels == BellLabelVector{{SamBell::PsiPlus, SamBell::PsiMinus}})) {
            detail = "two-fold cascade wrong";
            return false;
        }
        const auto one = run_cascade(1);
        if (one.counts != std::vector<int>{4, 1}) {
            detail = "single cascade wrong";
            return false;
        }
        for (int n : {1, 2}) {
            const auto report = amplitude_check(n);
            if (!report.match || report.symbolic_counts != report.amplitude_counts) {
                detail = "amplitude cascade disagrees at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    gate.run(10, "feed-forward (swap truth table, involution, 16 corrections)", 60.0,
             [](std::string &detail) {
                 const auto sw = swap_gate(2);
                 const Eigen::Vector4cd basis[4] = {
                     Eigen::Vector4cd(1, 0, 0, 0), Eigen::Vector4cd(0, 1, 0, 0),
                     Eigen::Vector4cd(0, 0, 1, 0), Eigen::Vector4cd(0, 0, 0, 1)};
                 const int swapped[4] = {0, 2, 1, 3};
                 for (int i = 0; i < 4; ++i) {
                     const auto out = sw.apply(qubit_pair_photon(basis[i], 2));
                     const auto want = qubit_pair_photon(basis[swapped[i]], 2);
                     if (out.overlap_modulus(want) < 1.0 - kEps) {
                         detail = "swap truth table row " + std::to_string(i);
                         return false;
                     }
                 }
                 std::mt19937_64 rng(0x90210);
                 for (int trial = 0; trial < 100; ++trial) {
                     const auto photon = qubit_pair_photon(random_qubit_pair(rng), 2);
                     if (sw.apply(sw.apply(photon)).overlap_modulus(photon) < 1.0 - kEps) {
                         detail = "swap twice is not the identity";
                         return false;
                     }
                 }
                 for (const auto &outcome : all_hyper_labels()) {
                     const CorrectionEntry entry = correction_for_outcome(outcome);
                     const Eigen::Vector4cd in = random_qubit_pair(rng);
                     const Eigen::Vector4cd distorted =
                         entry.phase * (correction_matrix(entry) * in);
                     const auto fixed = apply_feed_forward(
                         qubit_pair_photon(distorted, 3), 3, feed_forward_plan(outcome));
                     const double f =
                         std::norm(fixed.inner(qubit_pair_photon(in, 3)));
                     if (!near(f, 1.0, kEps)) {
                         detail = "feed-forward for " + to_string(outcome) + " gives F = " +
                                  format_double(f);
                         return false;
                     }
                 }
                 return true;
             });

    gate.run(11, "deterministic command-line reports", 120.0, [](std::string &detail) {
#ifndef LOQSIM_CLI_PATH
        detail = "binary path not configured";
        return false;
#else
        const auto capture = [](const std::string &args, const std::string &tag) {
            const std::string path = "/tmp/loqsim_acceptance_" + tag + ".out";
            const std::string cmd =
                std::string("\"") + LOQSIM_CLI_PATH + "\" " + args + " > " + path + " 2>&1";
            if (std::system(cmd.c_str()) != 0) {
                return std::string();
            }
            std::ifstream in(path, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            std::remove(path.c_str());
            return ss.str();
        };
        const std::string args[] = {
            "teleport --all --ideal --format json --seed 7 --shots 2000",
            "cascade --n 3 --format json",
            "hom --interferometer bs2 --tau 448 --format csv",
        };
        for (const auto &a : args) {
            const std::string first = capture(a, "a");
            const std::string second = capture(a, "b");
            if (first.empty() || first != second) {
                detail = "output differs for: " + a;
                return false;
            }
        }
        return true;
#endif
    });

    if (gate.failures == 0) {
        std::printf("all 11 acceptance criteria passed\n");
        return EXIT_SUCCESS;
    }
    std::printf("%d acceptance criterion(s) failed\n", gate.failures);
    return EXIT_FAILURE;
}
