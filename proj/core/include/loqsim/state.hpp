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

#ifndef LOQSIM_STATE_HPP
#define LOQSIM_STATE_HPP

#include <map>
#include <string>
#include <vector>

#include "loqsim/errors.hpp"
#include "loqsim/mode.hpp"

namespace loqsim {

/// A pure multi-photon state in the sparse Fock representation.
///
/// The state is a finite superposition of occupation-number configurations,
/// stored as an ordered map from canonical `Configuration` to complex
/// amplitude.  The map ordering fixes the iteration order, which in turn
/// fixes every floating point accumulation order in the simulator, so
/// results are bit-for-bit deterministic across runs.
///
/// Amplitudes follow the standard Fock normalization: the basis ket for a
/// configuration with occupation numbers {n_k} is
/// prod_k (a_k^dag)^{n_k} / sqrt(n_k!) applied to the vacuum, so a state
/// with sum |amp|^2 == 1 is normalized.
class PureState {
   public:
    using Map = std::map<Configuration, cplx>;

    PureState() = default;

    /// The vacuum state |vac> with unit amplitude.
    static PureState vacuum();

    /// A single basis ket |cfg> with the given amplitude.
    static PureState ket(const Configuration &cfg, cplx amp = 1.0);

    /// Builds sum_i amps[i] |cfgs[i]>.  Repeated configurations accumulate.
    static PureState superposition(const std::vector<std::pair<Configuration, cplx>> &terms);

    const Map &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Adds amp * |cfg> to this state.
    void add(const Configuration &cfg, cplx amp);

    /// sum |amp|^2.
    double norm_sq() const;
    double norm() const;

    /// Returns this state scaled to unit norm.  Throws ZeroStateError if the
    /// norm is below kPruneEps.
    PureState normalized() const;

    /// Returns this state with every amplitude multiplied by `factor`.
    PureState scaled(cplx factor) const;

    /// Removes terms with |amp| <= eps.
    void prune(double eps = kPruneEps);

    /// <this|other>.
    cplx inner(const PureState &other) const;

    /// |<this|other>| assuming both states are normalized.
    double overlap_modulus(const PureState &other) const;

    /// Returns this (+) other: the photon contents of every pair of
    /// configurations are combined and amplitudes multiplied, i.e. the tensor
    /// product of two states occupying (typically) disjoint paths.
    PureState product(const PureState &other) const;

    /// Applies the creation operators for `modes` to every term.  Amplitudes
    /// pick up the bosonic sqrt factors so that creating n photons in a
    /// fresh mode maps a normalized state to a normalized state times
    /// sqrt(n!)/sqrt(n!) = 1 (the caller is responsible for overall
    /// normalization when stacking photons in occupied modes).
    PureState create_photons(const std::vector<ModeLabel> &modes) const;

    /// Sum of |amp|^2 over configurations for which `pred` returns true.
    template <typename Pred>
    double weight_where(Pred pred) const {
        double w = 0.0;
        for (const auto &[cfg, amp] : terms_) {
            if (pred(cfg)) {
                w += std::norm(amp);
            }
        }
        return w;
    }

    /// True when the two states are equal up to a global phase:
    /// |<a|b>| >= (1 - tol) * |a| * |b|.
    bool equals_up_to_phase(const PureState &other, double tol = kTol) const;

    std::string str() const;

   private:
    Map terms_;
};

/// A statistical mixture of pure states.
///
/// Branches carry probability weights; the weights of a normalized mixed
/// state sum to one.  Branch pure states are individually normalized except
/// transiently during construction.
class MixedState {
   public:
    struct Branch {
        double weight;
        PureState state;
    };

    MixedState() = default;

    /// A mixture with a single branch of weight 1.
    explicit MixedState(PureState pure);

    static MixedState from_branches(std::vector<Branch> branches);

    const std::vector<Branch> &branches() const { return branches_; }
    bool is_zero() const { return branches_.empty(); }
    size_t branch_count() const { return branches_.size(); }

    /// Adds a branch (skipped when weight <= kPruneEps or the state is empty).
    void add_branch(double weight, PureState state);

    double total_weight() const;

    /// Returns the mixture rescaled to total weight 1.  Throws
    /// ZeroStateError when the total weight is below kPruneEps.
    MixedState normalized() const;

    /// Merges branches whose pure states coincide up to a global phase,
    /// summing their weights.  Keeps the first representative of each class.
    void merge_equivalent(double tol = kTol);

    /// Applies `fn` to every branch state (weights unchanged).
    template <typename Fn>
    MixedState map_states(Fn fn) const {
        MixedState out;
        for (const auto &b : branches_) {
            out.add_branch(b.weight, fn(b.state));
        }
        return out;
    }

    /// Convex combination: (1 - p) * this + p * other.
    static MixedState blend(const MixedState &a, const MixedState &b, double p_b);

   private:
    std::vector<Branch> branches_;
};

}  // namespace loqsim

#endif  // LOQSIM_STATE_HPP
