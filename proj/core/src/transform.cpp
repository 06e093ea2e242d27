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

#include "loqsim/transform.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace loqsim {

ModeTransform::ModeTransform(std::string name, std::vector<int> paths, RuleFn rule, bool lossy,
                             std::vector<ModeLabel> probe_hints)
    : name_(std::move(name)),
      paths_(std::move(paths)),
      rule_(std::move(rule)),
      lossy_(lossy),
      probe_hints_(std::move(probe_hints)) {
    std::sort(paths_.begin(), paths_.end());
    paths_.erase(std::unique(paths_.begin(), paths_.end()), paths_.end());
}

bool ModeTransform::acts_on(int path) const {
    return std::binary_search(paths_.begin(), paths_.end(), path);
}

ModeTransform::Rule ModeTransform::rule_for(const ModeLabel &m) const {
    if (!acts_on(m.path)) {
        return {{m, 1.0}};
    }
    return rule_(m);
}

PureState ModeTransform::apply(const PureState &in) const {
    PureState out;
    // Monomial accumulator: configurations count creation-operator powers of
    // the output modes; coefficients carry the expanded polynomial without
    // the Fock sqrt factors.  std::map keeps the accumulation order (and so
    // the floating point result) independent of everything but the input.
    using Poly = std::map<Configuration, cplx>;
    for (const auto &[cfg, amp] : in.terms()) {
        Poly poly;
        poly.emplace(Configuration::vacuum(), amp / std::sqrt(cfg.factorial_product()));
        for (const auto &[m, count] : cfg.entries()) {
            Rule rule = rule_for(m);
            for (int k = 0; k < count; k++) {
                Poly next;
                for (const auto &[mono, coeff] : poly) {
                    for (const auto &[m_out, c] : rule) {
                        cplx add = coeff * c;
                        auto [it, inserted] = next.try_emplace(mono.with_added(m_out), add);
                        if (!inserted) {
                            it->second += add;
                        }
                    }
                }
                poly = std::move(next);
            }
        }
        for (const auto &[cfg_out, coeff] : poly) {
            out.add(cfg_out, coeff * std::sqrt(cfg_out.factorial_product()));
        }
    }
    out.prune();
    return out;
}

MixedState ModeTransform::apply(const MixedState &in) const {
    return in.map_states([this](const PureState &s) { return apply(s); });
}

void ModeTransform::validate() const {
    // Assemble the probe basis.
    std::vector<ModeLabel> probes;
    for (int path : paths_) {
        for (Pol pol : {Pol::H, Pol::V}) {
            for (int oam = -2; oam <= 2; oam++) {
                for (int wp = 0; wp <= 1; wp++) {
                    probes.push_back(mode(path, pol, oam, wp));
                }
            }
        }
    }
    for (const auto &hint : probe_hints_) {
        if (std::find(probes.begin(), probes.end(), hint) == probes.end()) {
            probes.push_back(hint);
        }
    }
    const auto n = static_cast<Eigen::Index>(probes.size());
    if (n == 0) {
        return;
    }

    // Sparse columns of the single-photon matrix.
    std::vector<std::map<ModeLabel, cplx>> cols(probes.size());
    for (size_t i = 0; i < probes.size(); i++) {
        for (const auto &[m_out, c] : rule_for(probes[i])) {
            cols[i][m_out] += c;
        }
    }

    Eigen::MatrixXcd gram(n, n);
    for (Eigen::Index a = 0; a < n; a++) {
        for (Eigen::Index b = 0; b < n; b++) {
            cplx acc = 0.0;
            const auto &ca = cols[static_cast<size_t>(a)];
            const auto &cb = cols[static_cast<size_t>(b)];
            for (const auto &[m, va] : ca) {
                auto it = cb.find(m);
                if (it != cb.end()) {
                    acc += std::conj(va) * it->second;
                }
            }
            gram(a, b) = acc;
        }
    }

    double max_dev = 0.0;
    for (Eigen::Index a = 0; a < n; a++) {
        for (Eigen::Index b = 0; b < n; b++) {
            cplx want = (a == b) ? 1.0 : 0.0;
            max_dev = std::max(max_dev, std::abs(gram(a, b) - want));
        }
    }
    if (max_dev <= kTol) {
        return;
    }
    if (!lossy_) {
        throw NonUnitaryTransformError("element '" + name_ +
                                       "' is not unitary on the probe basis (max Gram deviation " +
                                       std::to_string(max_dev) + ")");
    }
    // Lossy elements must still be contractions: 0 <= Gram <= I.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    const auto &evals = solver.eigenvalues();
    for (Eigen::Index i = 0; i < evals.size(); i++) {
        if (evals(i) < -kTol || evals(i) > 1.0 + kTol) {
            throw NonUnitaryTransformError("lossy element '" + name_ +
                                           "' is not a contraction (Gram eigenvalue " +
                                           std::to_string(evals(i)) + ")");
        }
    }
}

TransformSequence::TransformSequence(std::vector<ModeTransform> steps) : steps_(std::move(steps)) {}

void TransformSequence::push(ModeTransform step) {
    steps_.push_back(std::move(step));
}

PureState TransformSequence::apply(const PureState &in) const {
    PureState s = in;
    for (const auto &step : steps_) {
        s = step.apply(s);
    }
    return s;
}

MixedState TransformSequence::apply(const MixedState &in) const {
    MixedState s = in;
    for (const auto &step : steps_) {
        s = step.apply(s);
    }
    return s;
}

void TransformSequence::validate() const {
    for (const auto &step : steps_) {
        step.validate();
    }
}

PureState apply_transform(const ModeTransform &t, const PureState &in) {
    return t.apply(in);
}

MixedState apply_transform(const ModeTransform &t, const MixedState &in) {
    return t.apply(in);
}

}  // namespace loqsim
