// Copyright 2026 The revft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include "revft/builders.hpp"

namespace revft {

/// MAJ rows in input order 000..111, bit string order (a,b,c).
inline constexpr std::array<const char *, 8> kMajTable = {"000", "001", "010", "111", "011", "110", "101", "100"};

struct VerifyOutcome {
    bool passed = false;
    nlohmann::json report;
};

/// Recovery circuit for a non-mixed layout.
Circuit recovery_for(const LayoutStrategy &layout);
Topology recovery_topology(const LayoutStrategy &layout);

/// Truth table, reversibility, locality, correction, single-fault and census
/// suites for the layout's recovery circuit, plus its interleave schedules and
/// a level-1 transversality check.
VerifyOutcome verify_layout(const LayoutStrategy &layout);

}  // namespace revft
