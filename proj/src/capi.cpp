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

#include "revft/revft.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "revft/json_io.hpp"
#include "revft/verify.hpp"

struct revft_circuit {
    revft::Circuit circuit;
};

struct revft_cycle {
    revft::CompiledCycle cycle;
};

namespace {

thread_local std::string g_last_error;

revft_status code_of(revft::Error::Code code) {
    switch (code) {
        case revft::Error::Code::InvalidArgument:
            return REVFT_ERR_INVALID_ARGUMENT;
        case revft::Error::Code::OutOfRange:
            return REVFT_ERR_OUT_OF_RANGE;
        case revft::Error::Code::Parse:
            return REVFT_ERR_PARSE;
        case revft::Error::Code::Io:
            return REVFT_ERR_IO;
        case revft::Error::Code::NotInvertible:
            return REVFT_ERR_NOT_INVERTIBLE;
        case revft::Error::Code::NoFiniteLevel:
            return REVFT_ERR_NO_FINITE_LEVEL;
    }
    return REVFT_ERR_INTERNAL;
}

template <typename F>
revft_status guarded(F &&body) {
    try {
        body();
        g_last_error.clear();
        return REVFT_OK;
    } catch (const revft::Error &e) {
        g_last_error = e.what();
        return code_of(e.code());
    } catch (const nlohmann::json::parse_error &e) {
        g_last_error = e.what();
        return REVFT_ERR_PARSE;
    } catch (const nlohmann::json::exception &e) {
        g_last_error = e.what();
        return REVFT_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return REVFT_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return REVFT_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return REVFT_ERR_INTERNAL;
    }
}

void require(const void *p, const char *what) {
    if (p == nullptr) {
        throw revft::Error(revft::Error::Code::InvalidArgument, std::string(what) + " must not be NULL");
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

revft::Topology parse_topology(const std::string &text) {
    if (text == "nonlocal") {
        return revft::NonLocalTopology{};
    }
    if (text == "1d") {
        return revft::Line1DTopology{};
    }
    int w = 0;
    int h = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "2d:%d:%d%c", &w, &h, &tail) == 2 && w > 0 && h > 0) {
        return revft::Lattice2DTopology::row_major(w, h);
    }
    throw revft::Error(revft::Error::Code::InvalidArgument,
                       "unknown topology '" + text + "' (expected nonlocal, 1d or 2d:W:H)");
}

revft::GateKind parse_gate(const char *name) {
    if (name == nullptr) {
        return revft::GateKind::MAJ;
    }
    auto kind = revft::parse_gate_kind(name);
    if (!kind) {
        throw revft::Error(revft::Error::Code::InvalidArgument, std::string("unknown gate kind '") + name + "'");
    }
    return *kind;
}

revft::PbitOptions pbit_options(const revft_sim_options &o) {
    revft::PbitOptions p;
    p.base_gate = parse_gate(o.gate);
    p.init_lowering = o.physical_init ? revft::InitLowering::Physical : revft::InitLowering::Encoded;
    p.noise.g_init = o.g_init;
    p.threads = o.threads;
    return p;
}

}  // namespace

extern "C" {

const char *revft_version(void) {
    return "1.0.0";
}

const char *revft_last_error(void) {
    return g_last_error.c_str();
}

const char *revft_status_name(revft_status status) {
    switch (status) {
        case REVFT_OK:
            return "ok";
        case REVFT_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case REVFT_ERR_OUT_OF_RANGE:
            return "out of range";
        case REVFT_ERR_PARSE:
            return "parse error";
        case REVFT_ERR_IO:
            return "i/o error";
        case REVFT_ERR_NOT_INVERTIBLE:
            return "not invertible";
        case REVFT_ERR_NO_FINITE_LEVEL:
            return "no finite level";
        case REVFT_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void revft_string_free(char *s) {
    std::free(s);
}

revft_status revft_circuit_from_json(const char *json, revft_circuit **out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new revft_circuit{revft::circuit_from_json_text(json)};
    });
}

revft_status revft_circuit_to_json(const revft_circuit *c, char **out_json) {
    return guarded([&] {
        require(c, "circuit");
        require(out_json, "out_json");
        *out_json = dup_string(revft::circuit_to_json(c->circuit).dump());
    });
}

void revft_circuit_free(revft_circuit *c) {
    delete c;
}

revft_status revft_circuit_width(const revft_circuit *c, size_t *out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = c->circuit.width();
    });
}

revft_status revft_circuit_census_json(const revft_circuit *c, char **out_json) {
    return guarded([&] {
        require(c, "circuit");
        require(out_json, "out_json");
        *out_json = dup_string(revft::census_to_json(revft::gate_census(c->circuit)).dump());
    });
}

revft_status revft_circuit_evaluate(const revft_circuit *c, const char *bits_in, char **bits_out) {
    return guarded([&] {
        require(c, "circuit");
        require(bits_in, "bits_in");
        require(bits_out, "bits_out");
        auto out = revft::evaluate(c->circuit, revft::BitState::from_string(bits_in));
        *bits_out = dup_string(out.str());
    });
}

revft_status revft_circuit_invert(const revft_circuit *c, revft_circuit **out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = new revft_circuit{revft::invert(c->circuit)};
    });
}

revft_status revft_circuit_is_permutation(const revft_circuit *c, int *out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = revft::is_permutation(c->circuit) ? 1 : 0;
    });
}

revft_status revft_circuit_locality_violations(const revft_circuit *c, const char *topology, size_t *out_count) {
    return guarded([&] {
        require(c, "circuit");
        require(topology, "topology");
        require(out_count, "out_count");
        *out_count = revft::check_locality(c->circuit, parse_topology(topology)).size();
    });
}

revft_status revft_build_recovery(const char *layout, revft_circuit **out) {
    return guarded([&] {
        require(layout, "layout");
        require(out, "out");
        *out = new revft_circuit{revft::recovery_for(revft::LayoutStrategy::parse(layout))};
    });
}

revft_status revft_build_interleave_1d(revft_circuit **out) {
    return guarded([&] {
        require(out, "out");
        *out = new revft_circuit{revft::build_interleave_1d()};
    });
}

revft_status revft_build_interleave_2d(int perpendicular, revft_circuit **out) {
    return guarded([&] {
        require(out, "out");
        auto dir = perpendicular ? revft::InterleaveDirection::Perpendicular : revft::InterleaveDirection::Parallel;
        *out = new revft_circuit{revft::build_interleave_2d(dir)};
    });
}

revft_status revft_compile_cycle(const char *gate, int level, const char *layout, int physical_init,
                                 revft_cycle **out) {
    return guarded([&] {
        require(gate, "gate");
        require(layout, "layout");
        require(out, "out");
        auto lowering = physical_init ? revft::InitLowering::Physical : revft::InitLowering::Encoded;
        *out = new revft_cycle{
            revft::compile_cycle(parse_gate(gate), level, revft::LayoutStrategy::parse(layout), lowering)};
    });
}

void revft_cycle_free(revft_cycle *cycle) {
    delete cycle;
}

revft_status revft_cycle_to_json(const revft_cycle *cycle, char **out_json) {
    return guarded([&] {
        require(cycle, "cycle");
        require(out_json, "out_json");
        *out_json = dup_string(revft::compiled_cycle_to_json(cycle->cycle).dump());
    });
}

revft_status revft_cycle_circuit(const revft_cycle *cycle, revft_circuit **out) {
    return guarded([&] {
        require(cycle, "cycle");
        require(out, "out");
        *out = new revft_circuit{cycle->cycle.circuit};
    });
}

revft_status revft_cycle_locality_violations(const revft_cycle *cycle, size_t *out_count) {
    return guarded([&] {
        require(cycle, "cycle");
        require(out_count, "out_count");
        *out_count = revft::check_locality(cycle->cycle.circuit, cycle->cycle.topology).size();
    });
}

revft_status revft_verify(const char *layout, char **report_json, int *passed) {
    return guarded([&] {
        require(layout, "layout");
        require(report_json, "report_json");
        require(passed, "passed");
        auto outcome = revft::verify_layout(revft::LayoutStrategy::parse(layout));
        *report_json = dup_string(outcome.report.dump(2));
        *passed = outcome.passed ? 1 : 0;
    });
}

void revft_sim_options_init(revft_sim_options *opts) {
    if (opts == nullptr) {
        return;
    }
    opts->layout = "nonlocal";
    opts->level = 1;
    opts->g_init = -1.0;
    opts->trials = 100000;
    opts->seed = 1;
    opts->threads = 0;
    opts->gate = nullptr;
    opts->physical_init = 0;
}

revft_status revft_simulate(const revft_sim_options *opts, double g, char **report_json) {
    return guarded([&] {
        require(opts, "opts");
        require(opts->layout, "opts->layout");
        require(report_json, "report_json");
        auto layout = revft::LayoutStrategy::parse(opts->layout);
        auto rep = revft::estimate_pbit(opts->level, layout, g, opts->trials, opts->seed, pbit_options(*opts));
        auto doc = revft::sim_report_to_json(rep);
        doc["g"] = g;
        doc["level"] = opts->level;
        doc["layout"] = layout.str();
        *report_json = dup_string(doc.dump(2));
    });
}

revft_status revft_sweep(const revft_sim_options *opts, const double *g_values, size_t count, int as_json,
                         char **out) {
    return guarded([&] {
        require(opts, "opts");
        require(opts->layout, "opts->layout");
        require(g_values, "g_values");
        require(out, "out");
        auto layout = revft::LayoutStrategy::parse(opts->layout);
        std::vector<double> gs(g_values, g_values + count);
        auto rows = revft::sweep_threshold(gs, opts->level, layout, opts->trials, opts->seed, pbit_options(*opts));
        if (!as_json) {
            *out = dup_string(revft::sweep_csv(rows));
            return;
        }
        nlohmann::json doc = nlohmann::json::array();
        for (const auto &r : rows) {
            auto row = revft::sim_report_to_json(r.report);
            row["g"] = r.g;
            row["level"] = r.level;
            row["layout"] = r.layout;
            doc.push_back(row);
        }
        *out = dup_string(doc.dump(2));
    });
}

revft_status revft_analyze(const char *request_json, char **response_json) {
    return guarded([&] {
        require(request_json, "request_json");
        require(response_json, "response_json");
        auto req = nlohmann::json::parse(request_json);
        *response_json = dup_string(revft::analyze_json(req).dump(2));
    });
}

}  // extern "C"
