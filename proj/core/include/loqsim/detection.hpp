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

#ifndef LOQSIM_DETECTION_HPP
#define LOQSIM_DETECTION_HPP

#include <optional>
#include <vector>

#include "loqsim/state.hpp"

namespace loqsim {

/// Predicate over the internal labels of a photon.  Unset fields match
/// anything; wavepacket tags are never filtered (detectors do not resolve
/// them, which is what makes partially distinguishable photons decohere).
struct ModeFilter {
    std::optional<Pol> pol;
    std::optional<int> oam;

    bool matches(const ModeLabel &m) const {
        return (!pol || m.pol == *pol) && (!oam || m.oam == *oam);
    }
};

inline ModeFilter filter_pol(Pol p) {
    return {p, std::nullopt};
}
inline ModeFilter filter_oam(int l) {
    return {std::nullopt, l};
}
inline ModeFilter filter_pol_oam(Pol p, int l) {
    return {p, l};
}

/// Requires exactly `count` photons matching `filter` (within one path).
struct ModeCountConstraint {
    ModeFilter filter;
    int count;
};

/// Requires exactly `total` photons on `path`, optionally with exact counts
/// in filtered sub-classes.
struct PathConstraint {
    int path;
    int total;
    std::vector<ModeCountConstraint> modes;
};

/// A photon-number-resolving detection event: exact counts on an explicit
/// set of paths (zero counts must be listed to be enforced).  Paths not
/// listed are left untouched.
class DetectionPattern {
   public:
    DetectionPattern() = default;

    /// Adds a constraint: exactly `total` photons on `path`.
    DetectionPattern &require(int path, int total, std::vector<ModeCountConstraint> modes = {});

    const std::vector<PathConstraint> &constraints() const { return constraints_; }

    /// Sorted list of constrained paths.
    std::vector<int> measured_paths() const;

    /// True when the configuration satisfies every path constraint.
    bool matches(const Configuration &cfg) const;

   private:
    std::vector<PathConstraint> constraints_;
};

/// Outcome of projecting a state onto a detection pattern.
struct ProjectionResult {
    /// Probability of the pattern firing.
    double probability = 0.0;
    /// Normalized post-measurement state of the unmeasured paths.  The
    /// measured photons are removed (absorbed by the detectors); remainders
    /// belonging to distinct detector records form separate mixture
    /// branches, since the record decoheres them.  Empty when probability
    /// is (numerically) zero.
    MixedState conditional;
};

/// Projects onto the detection pattern, tracing out the measured paths.
ProjectionResult project(const MixedState &state, const DetectionPattern &pattern);
ProjectionResult project(const PureState &state, const DetectionPattern &pattern);

/// Probability of the pattern without constructing the conditional state.
double probability_of(const MixedState &state, const DetectionPattern &pattern);
double probability_of(const PureState &state, const DetectionPattern &pattern);

/// Like project() but requires the conditional state to be pure (a single
/// effective branch up to global phase); throws LoqsimError otherwise.
PureState project_pure(const PureState &state, const DetectionPattern &pattern);

/// Coherent filter: keeps exactly the superposition terms matching the
/// pattern, leaving all photons in place and amplitudes untouched (the
/// squared norm of the result is the selection probability).
PureState post_select(const PureState &state, const DetectionPattern &pattern);

}  // namespace loqsim

#endif  // LOQSIM_DETECTION_HPP
