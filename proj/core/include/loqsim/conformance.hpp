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

#ifndef LOQSIM_CONFORMANCE_HPP
#define LOQSIM_CONFORMANCE_HPP

#include <string>
#include <vector>

#include "loqsim/sources.hpp"
#include "loqsim/state.hpp"

namespace loqsim {

/// One row of an interference conformance table: a two-photon input sent
/// through the splitter under test, compared against the published
/// closed-form output.
struct ConformanceRow {
    std::string id;           ///< row identifier, e.g. "PBS-01"
    std::string input_label;  ///< e.g. "phi-:omega+" or "omega+"
    double overlap;           ///< |<expected|actual>| (both normalized)
    cplx residual_phase;      ///< <expected|actual> (the matched global phase)
    bool coincidence_expected;
    bool coincidence_actual;
    bool match;  ///< overlap >= 1 - 1e-9 and coincidence flags agree
};

/// Sixteen-row table: every hyper-Bell input through the polarizing beam
/// splitter, checked against the known output expressions (diagonal/
/// antidiagonal products for the coincident rows, two-photon one-port terms
/// for the bunched rows).
std::vector<ConformanceRow> pbs_conformance_table();

/// Four-row table: every orbital Bell state through the beam splitter.
/// Exactly one input (omega-) produces coincidences.
std::vector<ConformanceRow> bs_conformance_table();

/// True when every row of both tables matches.
bool all_rows_match();

}  // namespace loqsim

#endif  // LOQSIM_CONFORMANCE_HPP
