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

#include <string>

#include <json.hpp>

#include "revft/builders.hpp"
#include "revft/circuit.hpp"
#include "revft/noise.hpp"

namespace revft {

nlohmann::json circuit_to_json(const Circuit &circuit);

/// Rejects unknown gate kinds, arity mismatches and broken index invariants
/// with Error::Code::Parse (or the validation error of the circuit).
Circuit circuit_from_json(const nlohmann::json &doc);
Circuit circuit_from_json_text(const std::string &text);

nlohmann::json census_to_json(const GateCensus &census);

/// Circuit document plus a "metadata" object {level, layout, census, ...}.
nlohmann::json compiled_cycle_to_json(const CompiledCycle &cycle);

nlohmann::json sim_report_to_json(const SimReport &report);

/// Rounds to 9 significant digits, the precision used in every report.
double round9(double v);

/// Dispatches {"calc": name, ...params} to the analysis calculators. Names:
/// threshold, bound, level, blowup, mixed, table2, entropy, landauer.
nlohmann::json analyze_json(const nlohmann::json &request);

}  // namespace revft
