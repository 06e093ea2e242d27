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

#ifndef LOQSIM_MODE_HPP
#define LOQSIM_MODE_HPP

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace loqsim {

using cplx = std::complex<double>;

/// Amplitudes below this weight are dropped when states are pruned.
inline constexpr double kPruneEps = 1e-12;
/// Default tolerance for exact-value comparisons (norms, overlaps, checks).
inline constexpr double kTol = 1e-9;

/// Polarization basis. H encodes the spin-angular-momentum qubit value |0>,
/// V encodes |1>.
enum class Pol : int8_t { H = 0, V = 1 };

inline char pol_char(Pol p) {
    return p == Pol::H ? 'H' : 'V';
}

/// A single bosonic mode: spatial path, polarization, orbital angular
/// momentum quantum number l (in units of hbar; l = +1 encodes the OAM qubit
/// value |0>, l = -1 encodes |1>, l = 0 is the zero-order mode), and a
/// wavepacket tag used to model temporal distinguishability. Tag 0 is the
/// common reference wavepacket; distinct tags are perfectly distinguishable.
struct ModeLabel {
    int32_t path = 0;
    Pol pol = Pol::H;
    int32_t oam = 0;
    int32_t wavepacket = 0;

    auto operator<=>(const ModeLabel &) const = default;

    std::string str() const;
};

inline ModeLabel mode(int path, Pol pol, int oam, int wavepacket = 0) {
    return ModeLabel{path, pol, oam, wavepacket};
}

/// A Fock configuration: a multiset of occupied modes, stored canonically as
/// a sorted run-length-encoded list. Two configurations constructed from the
/// same photons in any insertion order compare (and hash) identically.
class Configuration {
   public:
    using Entry = std::pair<ModeLabel, int32_t>;

    Configuration() = default;
    static Configuration vacuum() {
        return Configuration();
    }
    static Configuration from_modes(const std::vector<ModeLabel> &modes);

    /// Returns a copy with one extra photon in mode `m`.
    Configuration with_added(const ModeLabel &m) const;

    const std::vector<Entry> &entries() const {
        return entries_;
    }
    int photon_count() const;
    int count_on_path(int path) const;
    bool empty() const {
        return entries_.empty();
    }

    /// prod_m n_m!  (the symmetrization weight of this configuration).
    double factorial_product() const;

    /// Splits into (photons on any of `paths`, photons elsewhere).
    /// `paths` must be sorted.
    std::pair<Configuration, Configuration> split_paths(const std::vector<int> &paths) const;

    /// Union of two configurations with disjoint or overlapping modes.
    static Configuration merged(const Configuration &a, const Configuration &b);

    auto operator<=>(const Configuration &) const = default;

    uint64_t hash() const;
    std::string str() const;

   private:
    std::vector<Entry> entries_;
};

struct ConfigurationHash {
    size_t operator()(const Configuration &c) const {
        return static_cast<size_t>(c.hash());
    }
};

double factorial(int n);

}  // namespace loqsim

#endif
