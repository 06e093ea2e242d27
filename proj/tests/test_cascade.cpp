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

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "loqsim/cascade.hpp"
#include "loqsim/errors.hpp"

using namespace loqsim;

TEST_CASE("label enumeration and exchange parity") {
    CHECK(all_label_vectors(1).size() == 4);
    CHECK(all_label_vectors(3).size() == 64);
    // Antisymmetric iff the number of psi- entries is odd.
    CHECK(exchange_parity({{SamBell::PsiMinus}}) == Parity::Antisymmetric);
    CHECK(exchange_parity({{SamBell::PhiPlus}}) == Parity::Symmetric);
    CHECK(exchange_parity({{SamBell::PsiMinus, SamBell::PsiMinus}}) == Parity::Symmetric);
    CHECK(exchange_parity({{SamBell::PsiPlus, SamBell::PsiMinus, SamBell::PhiMinus}}) ==
          Parity::Antisymmetric);
    CHECK(to_string(BellLabelVector{{SamBell::PsiPlus, SamBell::PsiPlus, SamBell::PsiMinus}}) ==
          "(psi+, psi+, psi-)");
}

TEST_CASE("the first coincidence filter keeps the antisymmetric half") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        const auto kept = bs_filter(all_label_vectors(n));
        const long long expected = ((1LL << (2 * n)) - (1LL << n)) / 2;  // (4^n - 2^n)/2
        CHECK(static_cast<long long>(kept.size()) == expected);
        for (const auto &v : kept) {
            CHECK(exchange_parity(v) == Parity::Antisymmetric);
        }
    }
}

TEST_CASE("three-fold cascade reproduces the canonical counts") {
    const auto result = run_cascade(3);
    CHECK(result.n == 3);
    CHECK(result.counts == std::vector<int>{64, 28, 16, 6, 4, 1});
    CHECK(result.final_labels ==
          BellLabelVector{{SamBell::PsiPlus, SamBell::PsiPlus, SamBell::PsiMinus}});
    // Counted stages alternate as documented.
    std::vector<CascadeStageKind> counted;
    for (const auto &stage : result.stages) {
        if (stage.counted) {
            counted.push_back(stage.kind);
        }
        CHECK(stage.survivors_out <= stage.survivors_in);
    }
    CHECK(counted == std::vector<CascadeStageKind>{
                         CascadeStageKind::Initial, CascadeStageKind::BsFilter,
                         CascadeStageKind::DofFilter, CascadeStageKind::BsFilter,
                         CascadeStageKind::DofFilter, CascadeStageKind::BsFilter});
}

TEST_CASE("smaller cascades") {
    const auto two = run_cascade(2);
    CHECK(two.counts == std::vector<int>{16, 6, 4, 1});
    CHECK(two.final_labels == BellLabelVector{{SamBell::PsiPlus, SamBell::PsiMinus}});
    const auto one = run_cascade(1);
    CHECK(one.counts == std::vector<int>{4, 1});
    CHECK(one.final_labels == BellLabelVector{{SamBell::PsiMinus}});
}

TEST_CASE("non-degenerate stages keep survivor subsets") {
    const auto result = run_cascade(4);
    for (const auto &stage : result.stages) {
        const std::set<BellLabelVector> out(stage.survivors.begin(), stage.survivors.end());
        CHECK(out.size() == stage.survivors.size());
        CHECK(static_cast<int>(out.size()) == stage.survivors_out);
    }
    // Counts match the counted-stage survivor totals.
    std::vector<int> counted;
    for (const auto &stage : result.stages) {
        if (stage.counted) {
            counted.push_back(stage.survivors_out);
        }
    }
    CHECK(counted == result.counts);
}

TEST_CASE("quantum-marker stages never reduce the survivor set") {
    const auto result = run_cascade(3);
    for (const auto &stage : result.stages) {
        if (stage.kind == CascadeStageKind::QndMarker) {
            CHECK(stage.survivors_in == stage.survivors_out);
            CHECK_FALSE(stage.counted);
            CHECK_FALSE(stage.preserved_dofs.empty());
        }
    }
}

TEST_CASE("symbolic and amplitude cascades agree for the buildable sizes") {
    for (int n : {1, 2}) {
        CAPTURE(n);
        const auto report = amplitude_check(n);
        CHECK(report.match);
        CHECK(report.symbolic_counts == report.amplitude_counts);
        CHECK(report.n == n);
    }
    CHECK(amplitude_check(1).symbolic_counts == std::vector<int>{4, 1});
    CHECK(amplitude_check(2).symbolic_counts == std::vector<int>{16, 6, 4, 1});
}

TEST_CASE("cascade size limits") {
    CHECK_THROWS_WITH_AS(run_cascade(9), doctest::Contains("cascade too large"),
                         InvalidArgumentError);
    CHECK_THROWS_AS(run_cascade(0), InvalidArgumentError);
    CHECK_THROWS_AS(run_cascade(-2), InvalidArgumentError);
    CHECK_NOTHROW(run_cascade(8));
}

TEST_CASE("filter-and-relabel validates its target") {
    const auto survivors = bs_filter(all_label_vectors(2));
    CHECK_THROWS_AS(dof_filter_and_flip(survivors, -1), InvalidArgumentError);
    CHECK_THROWS_AS(dof_filter_and_flip(survivors, 2), InvalidArgumentError);
    const auto kept = dof_filter_and_flip(survivors, 0);
    for (const auto &v : kept) {
        // The filtered slot is relabeled to a phi-family placeholder.
        CHECK((v.labels[0] == SamBell::PhiPlus || v.labels[0] == SamBell::PhiMinus));
    }
}
