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

#include "revft/verify.hpp"

#include <algorithm>

#include "revft/json_io.hpp"
#include "revft/noise.hpp"

namespace revft {

using nlohmann::json;

Circuit recovery_for(const LayoutStrategy &layout) {
    switch (layout.kind) {
        case LayoutStrategy::Kind::NonLocal:
            return build_recovery_nonlocal();
        case LayoutStrategy::Kind::OneD:
            return build_recovery_1d();
        case LayoutStrategy::Kind::TwoD:
            return build_recovery_2d();
        default:
            throw Error(Error::Code::InvalidArgument, "verify takes nonlocal, 1d or 2d");
    }
}

Topology recovery_topology(const LayoutStrategy &layout) {
    switch (layout.kind) {
        case LayoutStrategy::Kind::OneD:
            return Line1DTopology{};
        case LayoutStrategy::Kind::TwoD:
            return Lattice2DTopology::row_major(3, 3);
        default:
            return NonLocalTopology{};
    }
}

namespace {

json check(const char *name, bool ok, json detail = json::object()) {
    detail["name"] = name;
    detail["passed"] = ok;
    return detail;
}

json maj_suite() {
    int bad = 0;
    int not_majority = 0;
    int not_inverse = 0;
    for (unsigned x = 0; x < 8; x++) {
        std::string in = {static_cast<char>('0' + ((x >> 2) & 1)), static_cast<char>('0' + ((x >> 1) & 1)),
                          static_cast<char>('0' + (x & 1))};
        BitState s = BitState::from_string(in);
        BitState out = apply_gate(Gate::make(GateKind::MAJ, {0, 1, 2}), s);
        bad += out.str() != kMajTable[x];
        int ones = s[0] + s[1] + s[2];
        not_majority += out[0] != (ones >= 2);
        not_inverse += apply_gate(Gate::make(GateKind::MAJINV, {0, 1, 2}), out) != s;
    }
    return check("maj_truth_table", bad == 0 && not_majority == 0 && not_inverse == 0,
                 {{"mismatched_rows", bad}, {"majority_errors", not_majority}, {"inverse_errors", not_inverse}});
}

std::vector<Gate> without_init(const Circuit &c) {
    std::vector<Gate> out;
    std::copy_if(c.gates().begin(), c.gates().end(), std::back_inserter(out),
                 [](const Gate &g) { return g.kind != GateKind::INIT3; });
    return out;
}

json correction_suite(const Circuit &rec) {
    int cases = 0;
    int bad = 0;
    for (int cw = 0; cw < 2; cw++) {
        for (int flip = -1; flip < 3; flip++) {
            BitState s(rec.width());
            for (std::size_t k = 0; k < rec.inputs().size(); k++) {
                s.set(rec.inputs()[k], (cw == 1) != (static_cast<int>(k) == flip));
            }
            BitState out = evaluate(rec, s);
            cases++;
            bad += std::any_of(rec.outputs().begin(), rec.outputs().end(),
                               [&](BitIndex q) { return out[q] != (cw == 1); });
        }
    }
    return check("correction", bad == 0, {{"cases", cases}, {"failures", bad}});
}

json interleave_suite(const LayoutStrategy &layout) {
    json out = json::array();
    if (layout.kind == LayoutStrategy::Kind::OneD) {
        Circuit il = build_interleave_1d();
        auto load = codeword_load(il, {{0, 4, 8}, {9, 13, 17}, {18, 22, 26}});
        std::size_t max_elem = 0;
        std::size_t max_s3 = 0;
        for (const auto &l : load) {
            max_elem = std::max(max_elem, l.elementary_swaps);
            max_s3 = std::max(max_s3, l.swap3_moving);
        }
        auto census = gate_census(il);
        bool ok = census.elementary_swaps() == 45 && max_elem <= 24 && max_s3 <= 12 &&
                  check_locality(il, Line1DTopology{}).empty();
        out.push_back(check("interleave_1d", ok,
                            {{"elementary_swaps", census.elementary_swaps()},
                             {"max_elementary_per_codeword", max_elem},
                             {"max_swap3_per_codeword", max_s3}}));
    } else if (layout.kind == LayoutStrategy::Kind::TwoD) {
        for (auto dir : {InterleaveDirection::Parallel, InterleaveDirection::Perpendicular}) {
            Circuit il = build_interleave_2d(dir);
            std::vector<std::vector<BitIndex>> words;
            for (std::size_t w = 0; w < 3; w++) {
                words.push_back({il.inputs().begin() + 3 * w, il.inputs().begin() + 3 * w + 3});
            }
            auto load = codeword_load(il, words);
            std::size_t max_elem = 0;
            std::size_t max_s3 = 0;
            for (const auto &l : load) {
                max_elem = std::max(max_elem, l.elementary_swaps);
                max_s3 = std::max(max_s3, l.swap3_moving);
            }
            std::size_t want = dir == InterleaveDirection::Parallel ? 9 : 12;
            auto census = gate_census(il);
            bool ok = census.elementary_swaps() == want && max_elem <= 6 && max_s3 <= 3 &&
                      check_locality(il, interleave_2d_lattice()).empty();
            out.push_back(check(dir == InterleaveDirection::Parallel ? "interleave_2d_parallel"
                                                                      : "interleave_2d_perpendicular",
                                ok,
                                {{"elementary_swaps", census.elementary_swaps()},
                                 {"max_elementary_per_codeword", max_elem},
                                 {"max_swap3_per_codeword", max_s3}}));
        }
    }
    return out;
}

json transversal_suite(const LayoutStrategy &layout) {
    auto cycle = compile_cycle(GateKind::MAJ, 1, layout);
    int bad = 0;
    for (unsigned x = 0; x < 8; x++) {
        BitState s(cycle.circuit.width());
        std::array<std::uint8_t, 3> logical{};
        for (std::size_t k = 0; k < 3; k++) {
            logical[k] = (x >> k) & 1;
            for (auto q : cycle.logical_inputs[k]) {
                s.set(q, logical[k]);
            }
        }
        BitState out = evaluate(cycle.circuit, s);
        apply_gate_inplace(Gate::make(GateKind::MAJ, {0, 1, 2}), logical);
        for (std::size_t k = 0; k < 3; k++) {
            bad += ideal_decode(out, cycle.logical_outputs[k]) != (logical[k] != 0);
        }
    }
    bool local = check_locality(cycle.circuit, cycle.topology).empty();
    return check("transversal_level1", bad == 0 && local,
                 {{"decode_errors", bad}, {"local", local}, {"census", census_to_json(cycle.census)}});
}

}  // namespace

VerifyOutcome verify_layout(const LayoutStrategy &layout) {
    const Circuit rec = recovery_for(layout);
    json checks = json::array();
    checks.push_back(maj_suite());

    Circuit bare(rec.width(), rec.inputs(), rec.outputs(), rec.ancillas(), without_init(rec));
    checks.push_back(check("reversible_without_init", is_permutation(bare)));

    auto violations = check_locality(rec, recovery_topology(layout));
    json vlist = json::array();
    for (const auto &v : violations) {
        vlist.push_back({{"gate_index", v.gate_index}, {"reason", v.reason}});
    }
    checks.push_back(check("locality", violations.empty(), {{"violations", vlist}}));
    checks.push_back(correction_suite(rec));

    std::size_t runs = 0;
    std::size_t max_distance = 0;
    json faults = json::array();
    for (bool cw : {false, true}) {
        auto rep = enumerate_single_faults(rec, cw);
        runs += rep.runs;
        max_distance = std::max(max_distance, rep.max_distance);
        for (const auto &v : rep.violations) {
            faults.push_back({{"codeword", cw ? 1 : 0}, {"gate_index", v.fault.gate_index}, {"distance", v.distance}});
        }
    }
    checks.push_back(check("single_fault", faults.empty(),
                           {{"runs", runs}, {"max_distance", max_distance}, {"violations", faults}}));

    auto census = gate_census(rec);
    std::size_t want = layout.kind == LayoutStrategy::Kind::OneD ? 13 : 8;
    checks.push_back(check("census", census.total == want && census.total_excluding_init() == want - 2,
                           {{"census", census_to_json(census)}, {"expected_total", want}}));
    for (auto &c : interleave_suite(layout)) {
        checks.push_back(std::move(c));
    }
    checks.push_back(transversal_suite(layout));

    VerifyOutcome out;
    out.passed = std::all_of(checks.begin(), checks.end(), [](const json &c) { return c["passed"].get<bool>(); });
    out.report = {{"layout", layout.str()}, {"passed", out.passed}, {"census", census_to_json(census)},
                  {"checks", checks}};
    return out;
}

}  // namespace revft
