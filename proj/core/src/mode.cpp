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

#include "loqsim/mode.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace loqsim {

double factorial(int n) {
    static const std::array<double, 21> table = [] {
        std::array<double, 21> t{};
        t[0] = 1.0;
        for (int i = 1; i <= 20; i++) {
            t[i] = t[i - 1] * i;
        }
        return t;
    }();
    return table.at(static_cast<size_t>(n));
}

std::string ModeLabel::str() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%d:%c:%+d:w%d", path, pol_char(pol), oam, wavepacket);
    return buf;
}

Configuration Configuration::from_modes(const std::vector<ModeLabel> &modes) {
    std::vector<ModeLabel> sorted = modes;
    std::sort(sorted.begin(), sorted.end());
    Configuration c;
    for (const auto &m : sorted) {
        if (!c.entries_.empty() && c.entries_.back().first == m) {
            c.entries_.back().second++;
        } else {
            c.entries_.push_back({m, 1});
        }
    }
    return c;
}

Configuration Configuration::with_added(const ModeLabel &m) const {
    Configuration c = *this;
    auto it = std::lower_bound(
        c.entries_.begin(), c.entries_.end(), m, [](const Entry &e, const ModeLabel &v) {
            return e.first < v;
        });
    if (it != c.entries_.end() && it->first == m) {
        it->second++;
    } else {
        c.entries_.insert(it, {m, 1});
    }
    return c;
}

int Configuration::photon_count() const {
    int n = 0;
    for (const auto &e : entries_) {
        n += e.second;
    }
    return n;
}

int Configuration::count_on_path(int path) const {
    int n = 0;
    for (const auto &e : entries_) {
        if (e.first.path == path) {
            n += e.second;
        }
    }
    return n;
}

double Configuration::factorial_product() const {
    double p = 1.0;
    for (const auto &e : entries_) {
        p *= factorial(e.second);
    }
    return p;
}

std::pair<Configuration, Configuration> Configuration::split_paths(
    const std::vector<int> &paths) const {
    Configuration on, off;
    for (const auto &e : entries_) {
        if (std::binary_search(paths.begin(), paths.end(), e.first.path)) {
            on.entries_.push_back(e);
        } else {
            off.entries_.push_back(e);
        }
    }
    return {on, off};
}

Configuration Configuration::merged(const Configuration &a, const Configuration &b) {
    Configuration c;
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
            c.entries_.push_back(*ia++);
        } else if (ia == a.entries_.end() || ib->first < ia->first) {
            c.entries_.push_back(*ib++);
        } else {
            c.entries_.push_back({ia->first, ia->second + ib->second});
            ++ia;
            ++ib;
        }
    }
    return c;
}

uint64_t Configuration::hash() const {
    // FNV-1a over the packed entries; deterministic across runs.
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; i++) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const auto &e : entries_) {
        mix(static_cast<uint64_t>(static_cast<uint32_t>(e.first.path)));
        mix(static_cast<uint64_t>(e.first.pol == Pol::V ? 1 : 0));
        mix(static_cast<uint64_t>(static_cast<uint32_t>(e.first.oam)));
        mix(static_cast<uint64_t>(static_cast<uint32_t>(e.first.wavepacket)));
        mix(static_cast<uint64_t>(static_cast<uint32_t>(e.second)));
    }
    return h;
}

std::string Configuration::str() const {
    if (entries_.empty()) {
        return "|vac>";
    }
    std::string s = "|";
    bool first = true;
    for (const auto &e : entries_) {
        if (!first) {
            s += ", ";
        }
        first = false;
        s += e.first.str();
        if (e.second > 1) {
            s += "x" + std::to_string(e.second);
        }
    }
    s += ">";
    return s;
}

}  // namespace loqsim
