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

#ifndef LOQSIM_TRANSFORM_HPP
#define LOQSIM_TRANSFORM_HPP

#include <functional>
#include <string>
#include <vector>

#include "loqsim/state.hpp"

namespace loqsim {

/// A linear-optical element, expressed as a substitution rule on creation
/// operators: a_in^dag -> sum_j c_j a_out_j^dag.
///
/// The rule function is consulted for every mode whose path appears in
/// `paths`; modes on other paths pass through unchanged.  An empty rule
/// output annihilates the mode (post-selected absorption), which is how
/// lossy projective elements such as polarizers are modeled; such elements
/// must be constructed with `lossy = true` or validation rejects them.
class ModeTransform {
   public:
    /// One substitution target: (output mode, amplitude).
    using Rule = std::vector<std::pair<ModeLabel, cplx>>;
    using RuleFn = std::function<Rule(const ModeLabel &)>;

    ModeTransform(std::string name, std::vector<int> paths, RuleFn rule, bool lossy = false,
                  std::vector<ModeLabel> probe_hints = {});

    const std::string &name() const { return name_; }
    bool lossy() const { return lossy_; }
    const std::vector<int> &paths() const { return paths_; }
    bool acts_on(int path) const;

    /// The substitution for one input mode (identity when the element does
    /// not act on the mode's path).
    Rule rule_for(const ModeLabel &m) const;

    /// Applies the substitution to every term of the state.  Amplitudes
    /// carry the bosonic sqrt(n!) factors of the Fock normalization, so a
    /// unitary rule maps normalized states to normalized states.
    PureState apply(const PureState &in) const;
    MixedState apply(const MixedState &in) const;

    /// Checks (an)isometry on a probe basis spanning both polarizations,
    /// orbital values -2..2 and wavepacket tags 0..1 on every acted path,
    /// plus any probe hints supplied at construction.  Unitary elements must
    /// reproduce the identity Gram matrix to 1e-9; elements declared lossy
    /// must have Gram eigenvalues within [0, 1].  Violations throw
    /// NonUnitaryTransformError.
    void validate() const;

   private:
    std::string name_;
    std::vector<int> paths_;  // sorted
    RuleFn rule_;
    bool lossy_;
    std::vector<ModeLabel> probe_hints_;
};

/// An ordered pipeline of elements applied left to right.
class TransformSequence {
   public:
    TransformSequence() = default;
    explicit TransformSequence(std::vector<ModeTransform> steps);

    void push(ModeTransform step);
    const std::vector<ModeTransform> &steps() const { return steps_; }

    PureState apply(const PureState &in) const;
    MixedState apply(const MixedState &in) const;

    /// Validates every step.
    void validate() const;

   private:
    std::vector<ModeTransform> steps_;
};

/// Free-function form of ModeTransform::apply.
PureState apply_transform(const ModeTransform &t, const PureState &in);
MixedState apply_transform(const ModeTransform &t, const MixedState &in);

}  // namespace loqsim

#endif  // LOQSIM_TRANSFORM_HPP
