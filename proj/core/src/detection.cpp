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

#include "loqsim/detection.hpp"

#include <algorithm>
#include <cmath>

namespace loqsim {

DetectionPattern &DetectionPattern::require(int path, int total,
                                            std::vector<ModeCountConstraint> modes) {
    constraints_.push_back({path, total, std::move(modes)});
    return *this;
}

std::vector<int> DetectionPattern::measured_paths() const {
    std::vector<int> paths;
    paths.reserve(constraints_.size());
    for (const auto &pc : constraints_) {
        paths.push_back(pc.path);
    }
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
    return paths;
}

bool DetectionPattern::matches(const Configuration &cfg) const {
    for (const auto &pc : constraints_) {
        if (cfg.count_on_path(pc.path) != pc.total) {
            return false;
        }
        for (const auto &mc : pc.modes) {
            int n = 0;
            for (const auto &[m, count] : cfg.entries()) {
                if (m.path == pc.path && mc.filter.matches(m)) {
                    n += count;
                }
            }
            if (n != mc.count) {
                return false;
            }
        }
    }
    return true;
}

ProjectionResult project(const MixedState &state, const DetectionPattern &pattern) {
    const std::vector<int> measured = pattern.measured_paths();
    ProjectionResult result;
    MixedState collected;
    for (const auto &branch : state.branches()) {
        // Group the surviving terms by detector record, i.e. by the full
        // mode content seen on the measured paths.  Distinct records leave
        // the remainder in incoherent branches.
        std::map<Configuration, PureState> groups;
        for (const auto &[cfg, amp] : branch.state.terms()) {
            if (!pattern.matches(cfg)) {
                continue;
            }
            auto [meas, rest] = cfg.split_paths(measured);
            groups[meas].add(rest, amp);
        }
        for (const auto &[record, remainder] : groups) {
            double w = remainder.norm_sq();
            if (w <= kPruneEps) {
                continue;
            }
            result.probability += branch.weight * w;
            collected.add_branch(branch.weight * w, remainder.scaled(1.0 / std::sqrt(w)));
        }
    }
    if (result.probability > kPruneEps) {
        collected.merge_equivalent();
        result.conditional = collected.normalized();
    }
    return result;
}

ProjectionResult project(const PureState &state, const DetectionPattern &pattern) {
    return project(MixedState(state), pattern);
}

double probability_of(const MixedState &state, const DetectionPattern &pattern) {
    double p = 0.0;
    for (const auto &branch : state.branches()) {
        p += branch.weight * probability_of(branch.state, pattern);
    }
    return p;
}

double probability_of(const PureState &state, const DetectionPattern &pattern) {
    return state.weight_where([&pattern](const Configuration &cfg) { return pattern.matches(cfg); });
}

PureState project_pure(const PureState &state, const DetectionPattern &pattern) {
    ProjectionResult r = project(state, pattern);
    if (r.probability <= kPruneEps) {
        throw ZeroStateError("detection pattern has zero probability");
    }
    if (r.conditional.branch_count() != 1) {
        throw LoqsimError("project_pure: conditional state is mixed (" +
                          std::to_string(r.conditional.branch_count()) + " branches)");
    }
    return r.conditional.branches().front().state;
}

PureState post_select(const PureState &state, const DetectionPattern &pattern) {
    PureState out;
    for (const auto &[cfg, amp] : state.terms()) {
        if (pattern.matches(cfg)) {
            out.add(cfg, amp);
        }
    }
    return out;
}

}  // namespace loqsim
