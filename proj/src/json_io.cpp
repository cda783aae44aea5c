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

#include "revft/json_io.hpp"

#include <cstdio>
#include <cstdlib>

#include "revft/analysis.hpp"

namespace revft {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string &msg) {
    throw Error(Error::Code::Parse, msg);
}

std::vector<BitIndex> index_list(const json &doc, const char *key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        parse_error(std::string("missing array field '") + key + "'");
    }
    std::vector<BitIndex> out;
    for (const auto &v : doc[key]) {
        if (!v.is_number_unsigned()) {
            parse_error(std::string("'") + key + "' must hold non-negative integers");
        }
        out.push_back(v.get<BitIndex>());
    }
    return out;
}

}  // namespace

json circuit_to_json(const Circuit &circuit) {
    json gates = json::array();
    for (const auto &g : circuit.gates()) {
        json ops = json::array();
        for (auto q : g.targets()) {
            ops.push_back(q);
        }
        gates.push_back({{"kind", std::string(gate_name(g.kind))}, {"operands", ops}});
    }
    return {
        {"width", circuit.width()},       {"inputs", circuit.inputs()}, {"outputs", circuit.outputs()},
        {"ancillas", circuit.ancillas()}, {"gates", gates},
    };
}

Circuit circuit_from_json(const json &doc) {
    if (!doc.is_object()) {
        parse_error("circuit document must be a JSON object");
    }
    if (!doc.contains("width") || !doc["width"].is_number_unsigned()) {
        parse_error("missing non-negative integer field 'width'");
    }
    const auto width = doc["width"].get<std::size_t>();
    if (!doc.contains("gates") || !doc["gates"].is_array()) {
        parse_error("missing array field 'gates'");
    }
    std::vector<Gate> gates;
    for (const auto &g : doc["gates"]) {
        if (!g.is_object() || !g.contains("kind") || !g["kind"].is_string()) {
            parse_error("every gate needs a string 'kind'");
        }
        auto name = g["kind"].get<std::string>();
        auto kind = parse_gate_kind(name);
        if (!kind) {
            parse_error("unknown gate kind '" + name + "'");
        }
        auto ops = index_list(g, "operands");
        if (ops.size() != arity(*kind)) {
            parse_error(name + " takes " + std::to_string(arity(*kind)) + " operands, got " +
                        std::to_string(ops.size()));
        }
        try {
            gates.push_back(Gate::make(*kind, ops));
        } catch (const Error &e) {
            parse_error(e.what());
        }
    }
    Circuit c(width, index_list(doc, "inputs"), index_list(doc, "outputs"), index_list(doc, "ancillas"),
              std::move(gates));
    c.validate();
    return c;
}

Circuit circuit_from_json_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
    return circuit_from_json(doc);
}

json census_to_json(const GateCensus &census) {
    json out = json::object();
    for (auto k : kAllGateKinds) {
        if (census.count(k) > 0) {
            out[std::string(gate_name(k))] = census.count(k);
        }
    }
    out["total"] = census.total;
    out["total_excluding_init"] = census.total_excluding_init();
    return out;
}

json compiled_cycle_to_json(const CompiledCycle &cycle) {
    json doc = circuit_to_json(cycle.circuit);
    doc["metadata"] = {
        {"level", cycle.level},
        {"layout", cycle.layout.str()},
        {"init_lowering", cycle.init_lowering == InitLowering::Encoded ? "encoded" : "physical"},
        {"census", census_to_json(cycle.census)},
        {"logical_inputs", cycle.logical_inputs},
        {"logical_outputs", cycle.logical_outputs},
    };
    return doc;
}

double round9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return std::strtod(buf, nullptr);
}

json sim_report_to_json(const SimReport &r) {
    return {
        {"trials", r.trials},
        {"failures", r.failures},
        {"p_hat", round9(r.p_hat)},
        {"ci95_halfwidth", round9(r.ci95_halfwidth)},
        {"ci_low", round9(r.ci_low)},
        {"ci_high", round9(r.ci_high)},
        {"seed", r.seed},
    };
}

namespace {

double num(const json &req, const char *key) {
    if (!req.contains(key) || !req[key].is_number()) {
        throw Error(Error::Code::InvalidArgument, std::string("missing numeric parameter '") + key + "'");
    }
    return req[key].get<double>();
}

int integer(const json &req, const char *key) {
    double v = num(req, key);
    if (!(v > -1e9 && v < 1e9) || v != static_cast<double>(static_cast<int>(v))) {
        throw Error(Error::Code::InvalidArgument, std::string("parameter '") + key + "' must be an integer");
    }
    return static_cast<int>(v);
}

json threshold_json(int G) {
    auto t = threshold(G);
    return {{"G", G}, {"exact", to_string(t.exact)}, {"value", round9(t.value)}};
}

}  // namespace

json analyze_json(const json &req) {
    if (!req.is_object() || !req.contains("calc") || !req["calc"].is_string()) {
        throw Error(Error::Code::InvalidArgument, "analysis request needs a string 'calc'");
    }
    const auto calc = req["calc"].get<std::string>();
    json out = {{"calc", calc}};
    if (calc == "threshold") {
        out.update(threshold_json(integer(req, "G")));
    } else if (calc == "bound") {
        double g = num(req, "g");
        double rho = num(req, "rho");
        int k = integer(req, "k");
        out.update({{"g", g}, {"rho", rho}, {"k", k}, {"value", round9(logical_error_bound(g, rho, k))}});
    } else if (calc == "level") {
        double T = num(req, "T");
        double g = num(req, "g");
        double rho = num(req, "rho");
        out.update({{"T", T}, {"g", g}, {"rho", rho}, {"L", min_concat_level(T, g, rho)}});
    } else if (calc == "blowup") {
        int G = integer(req, "G");
        int L = integer(req, "L");
        auto b = blowup(G, L);
        out.update({{"G", G},
                    {"L", L},
                    {"gate_factor", b.gate_factor},
                    {"bit_factor", b.bit_factor},
                    {"gate_exponent", round9(b.gate_exponent)},
                    {"bit_exponent", round9(b.bit_exponent)}});
    } else if (calc == "mixed") {
        int k = integer(req, "k");
        double rho1 = num(req, "rho1");
        double rho2 = num(req, "rho2");
        auto m = mixed_threshold(k, rho1, rho2);
        out.update({{"k", k}, {"rho1", rho1}, {"rho2", rho2}, {"value", round9(m.value)}, {"ratio", round9(m.ratio)}});
    } else if (calc == "table2") {
        auto ratios = table2_ratios();
        json rows = json::array();
        for (int k = 0; k < 6; k++) {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "%.2f", ratios[k]);
            rows.push_back({{"k", k}, {"ratio", round9(ratios[k])}, {"rounded", buf}});
        }
        out.update({{"rho1", threshold_json(38)}, {"rho2", threshold_json(14)}, {"rows", rows}});
    } else if (calc == "entropy") {
        double g = num(req, "g");
        double E = num(req, "E");
        out.update({{"g", g}, {"E", E}, {"kappa", round9(kappa())}, {"max_useful_level", round9(max_useful_level(g, E))}});
        if (req.contains("G_tilde") && req.contains("L")) {
            std::optional<double> temp;
            if (req.contains("temperature")) {
                temp = num(req, "temperature");
            }
            auto r = entropy_bounds(num(req, "G_tilde"), E, integer(req, "L"), g, temp);
            out.update({{"G_tilde", num(req, "G_tilde")},
                        {"L", integer(req, "L")},
                        {"upper_bound_bits", round9(r.upper_bound_bits)},
                        {"lower_bound_bits", round9(r.lower_bound_bits)},
                        {"lower_le_upper", r.lower_bound_bits <= r.upper_bound_bits}});
            if (r.landauer_joules) {
                out["landauer_joules"] = round9(*r.landauer_joules);
            }
        }
    } else if (calc == "landauer") {
        double bits = num(req, "bits");
        double temp = num(req, "temperature");
        out.update({{"bits", bits}, {"temperature", temp}, {"joules", round9(landauer_energy(bits, temp))}});
    } else {
        throw Error(Error::Code::InvalidArgument, "unknown calculator '" + calc + "'");
    }
    return out;
}

}  // namespace revft
