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

/// \file loqsim.hpp
/// Umbrella header pulling in the whole loqsim core library.

#pragma once

#include "loqsim/cascade.hpp"      // IWYU pragma: export
#include "loqsim/conformance.hpp"  // IWYU pragma: export
#include "loqsim/density.hpp"      // IWYU pragma: export
#include "loqsim/detection.hpp"    // IWYU pragma: export
#include "loqsim/elements.hpp"     // IWYU pragma: export
#include "loqsim/errors.hpp"       // IWYU pragma: export
#include "loqsim/measurement.hpp"  // IWYU pragma: export
#include "loqsim/mode.hpp"         // IWYU pragma: export
#include "loqsim/protocol.hpp"     // IWYU pragma: export
#include "loqsim/report.hpp"       // IWYU pragma: export
#include "loqsim/sources.hpp"      // IWYU pragma: export
#include "loqsim/state.hpp"        // IWYU pragma: export
#include "loqsim/transform.hpp"    // IWYU pragma: export
