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

#include "loqsim/state.hpp"

#include <cmath>
#include <cstdio>

namespace loqsim {

PureState PureState::vacuum() {
    return ket(Configuration::vacuum());
}

PureState PureState::ket(const Configuration &cfg, cplx amp) {
    PureState s;
    s.add(cfg, amp);
    return s;
}

PureState PureState::superposition(const std::vector<std::pair<Configuration, cplx>> &terms) {
    PureState s;
    for (const auto &[cfg, amp] : terms) {
        s.add(cfg, amp);
    }
    return s;
}

void PureState::add(const Configuration &cfg, cplx amp) {
    auto [it, inserted] = terms_.try_emplace(cfg, amp);
    if (!inserted) {
        it->second += amp;
    }
}

double PureState::norm_sq() const {
    double n = 0.0;
    for (const auto &[cfg, amp] : terms_) {
        n += std::norm(amp);
    }
    return n;
}

double PureState::norm() const {
    return std::sqrt(norm_sq());
}

PureState PureState::normalized() const {
    double n = norm();
    if (n < kPruneEps) {
        throw ZeroStateError("cannot normalize a state with vanishing norm");
    }
    return scaled(1.0 / n);
}

PureState PureState::scaled(cplx factor) const {
    PureState out;
    for (const auto &[cfg, amp] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), cfg, amp * factor);
    }
    return out;
}

void PureState::prune(double eps) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= eps) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

cplx PureState::inner(const PureState &other) const {
    // Walk the smaller map, probe the larger one.
    const PureState *small = this, *large = &other;
    bool conj_small = true;  // <this| contributes the conjugate
    if (other.terms_.size() < terms_.size()) {
        small = &other;
        large = this;
        conj_small = false;
    }
    cplx acc = 0.0;
    for (const auto &[cfg, amp] : small->terms_) {
        auto it = large->terms_.find(cfg);
        if (it != large->terms_.end()) {
            acc += conj_small ? std::conj(amp) * it->second : std::conj(it->second) * amp;
        }
    }
    return acc;
}

double PureState::overlap_modulus(const PureState &other) const {
    return std::abs(inner(other));
}

PureState PureState::product(const PureState &other) const {
    PureState out;
    for (const auto &[ca, aa] : terms_) {
        for (const auto &[cb, ab] : other.terms_) {
            out.add(Configuration::merged(ca, cb), aa * ab);
        }
    }
    return out;
}

PureState PureState::create_photons(const std::vector<ModeLabel> &modes) const {
    PureState out = *this;
    for (const auto &m : modes) {
        PureState next;
        for (const auto &[cfg, amp] : out.terms_) {
            int n = 0;
            for (const auto &e : cfg.entries()) {
                if (e.first == m) {
                    n = e.second;
                    break;
                }
            }
            next.add(cfg.with_added(m), amp * std::sqrt(static_cast<double>(n + 1)));
        }
        out = std::move(next);
    }
    return out;
}

bool PureState::equals_up_to_phase(const PureState &other, double tol) const {
    double na = norm(), nb = other.norm();
    if (na < kPruneEps || nb < kPruneEps) {
        return na < kPruneEps && nb < kPruneEps;
    }
    return overlap_modulus(other) >= (1.0 - tol) * na * nb;
}

std::string PureState::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[cfg, amp] : terms_) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "(%+.6g%+.6gi) ", amp.real(), amp.imag());
        if (!s.empty()) {
            s += " + ";
        }
        s += buf;
        s += cfg.str();
    }
    return s;
}

MixedState::MixedState(PureState pure) {
    add_branch(1.0, std::move(pure));
}

MixedState MixedState::from_branches(std::vector<Branch> branches) {
    MixedState m;
    for (auto &b : branches) {
        m.add_branch(b.weight, std::move(b.state));
    }
    return m;
}

void MixedState::add_branch(double weight, PureState state) {
    if (weight <= kPruneEps || state.empty()) {
        return;
    }
    branches_.push_back({weight, std::move(state)});
}

double MixedState::total_weight() const {
    double w = 0.0;
    for (const auto &b : branches_) {
        w += b.weight;
    }
    return w;
}

MixedState MixedState::normalized() const {
    double w = total_weight();
    if (w < kPruneEps) {
        throw ZeroStateError("cannot normalize a mixture with vanishing weight");
    }
    MixedState out;
    for (const auto &b : branches_) {
        out.add_branch(b.weight / w, b.state);
    }
    return out;
}

void MixedState::merge_equivalent(double tol) {
    std::vector<Branch> merged;
    for (auto &b : branches_) {
        bool absorbed = false;
        for (auto &m : merged) {
            if (m.state.equals_up_to_phase(b.state, tol)) {
                m.weight += b.weight;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) {
            merged.push_back(std::move(b));
        }
    }
    branches_ = std::move(merged);
}

MixedState MixedState::blend(const MixedState &a, const MixedState &b, double p_b) {
    MixedState out;
    for (const auto &br : a.branches_) {
        out.add_branch((1.0 - p_b) * br.weight, br.state);
    }
    for (const auto &br : b.branches_) {
        out.add_branch(p_b * br.weight, br.state);
    }
    return out;
}

}  // namespace loqsim
