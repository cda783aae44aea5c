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

// revft command line: verify, compile, simulate, sweep and analyze. Talks to
// the library only through the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "revft/revft.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Failure {
    int code;
    std::string message;
};

// Owns a char* handed out by the library.
class LibString {
   public:
    LibString() = default;
    ~LibString() {
        revft_string_free(s_);
    }
    LibString(const LibString &) = delete;
    LibString &operator=(const LibString &) = delete;
    char **out() {
        return &s_;
    }
    std::string str() const {
        return s_ ? std::string(s_) : std::string();
    }

   private:
    char *s_ = nullptr;
};

void check(revft_status st) {
    if (st != REVFT_OK) {
        throw Failure{kExitUsage, std::string(revft_status_name(st)) + ": " + revft_last_error()};
    }
}

/// Writes to `path` atomically (temp file + rename), or to stdout when empty.
void emit(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw Failure{kExitUsage, "cannot write '" + path + "'"};
        }
        f << text;
        if (!text.empty() && text.back() != '\n') {
            f << '\n';
        }
        f.flush();
        if (!f) {
            std::remove(tmp.c_str());
            throw Failure{kExitUsage, "cannot write '" + path + "'"};
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Failure{kExitUsage, "cannot rename into '" + path + "'"};
    }
}

std::vector<double> parse_g_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            double v = std::stod(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception &) {
            throw Failure{kExitUsage, "bad value in --g-list: '" + item + "'"};
        }
    }
    if (out.empty()) {
        throw Failure{kExitUsage, "--g-list is empty"};
    }
    return out;
}

struct SimFlags {
    std::string layout = "nonlocal";
    int level = 1;
    double g = 0.0;
    std::string g_list;
    double g_init = -1.0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string gate = "MAJ";
    std::string init_lowering = "encoded";
    std::string format;
    std::string out;
};

revft_sim_options to_options(const SimFlags &f) {
    revft_sim_options o;
    revft_sim_options_init(&o);
    o.layout = f.layout.c_str();
    o.level = f.level;
    o.g_init = f.g_init;
    o.trials = f.trials;
    o.seed = f.seed;
    o.gate = f.gate.c_str();
    o.physical_init = f.init_lowering == "physical";
    return o;
}

void add_sim_flags(CLI::App *cmd, SimFlags &f) {
    cmd->add_option("--layout", f.layout, "nonlocal, 2d, 1d or mixed:K")->capture_default_str();
    cmd->add_option("--level", f.level, "concatenation level (>= 1)")->capture_default_str();
    cmd->add_option("--g-init", f.g_init, "INIT3 error rate (default: same as --g)");
    cmd->add_option("--trials", f.trials, "Monte Carlo trials")->capture_default_str();
    cmd->add_option("--seed", f.seed, "master seed")->capture_default_str();
    cmd->add_option("--gate", f.gate, "3-bit base gate of the cycle")->capture_default_str();
    cmd->add_option("--init-lowering", f.init_lowering, "encoded or physical")
        ->check(CLI::IsMember({"encoded", "physical"}))
        ->capture_default_str();
    cmd->add_option("--out", f.out, "output file (default stdout)");
}

int run_verify(const std::string &layout, const std::string &out) {
    if (layout != "nonlocal" && layout != "1d" && layout != "2d") {
        throw Failure{kExitUsage, "verify --layout must be nonlocal, 1d or 2d"};
    }
    LibString report;
    int passed = 0;
    check(revft_verify(layout.c_str(), report.out(), &passed));
    emit(out, report.str());
    std::cerr << "verify " << layout << ": " << (passed ? "PASS" : "FAIL") << "\n";
    return passed ? kExitOk : kExitViolation;
}

int run_compile(const std::string &layout, int level, const std::string &gate, const std::string &init_lowering,
                const std::string &out) {
    revft_cycle *cycle = nullptr;
    check(revft_compile_cycle(gate.c_str(), level, layout.c_str(), init_lowering == "physical", &cycle));
    LibString json;
    size_t violations = 0;
    revft_status st = revft_cycle_to_json(cycle, json.out());
    if (st == REVFT_OK) {
        st = revft_cycle_locality_violations(cycle, &violations);
    }
    revft_cycle_free(cycle);
    check(st);
    emit(out, json.str());

    auto doc = nlohmann::json::parse(json.str());
    const auto &census = doc["metadata"]["census"];
    std::ostringstream msg;
    msg << "census total=" << census["total"] << " excluding_init=" << census["total_excluding_init"]
        << " width=" << doc["width"] << " locality_violations=" << violations;
    if (layout == "nonlocal") {
        // Encoded INIT3 counts initialization (G = 11); physical INIT3 does not
        // (G = 9), so it is compared against the non-INIT count.
        const bool physical = init_lowering == "physical";
        const int G = physical ? 9 : 11;
        LibString pred;
        std::string req = "{\"calc\":\"blowup\",\"G\":" + std::to_string(G) + ",\"L\":" + std::to_string(level) + "}";
        check(revft_analyze(req.c_str(), pred.out()));
        auto p = nlohmann::json::parse(pred.str());
        auto predicted = p["gate_factor"].get<std::uint64_t>();
        auto actual = census[physical ? "total_excluding_init" : "total"].get<std::uint64_t>();
        msg << " predicted(G=" << G << ")=" << predicted << " bits=" << p["bit_factor"] << " "
            << (predicted == actual ? "match" : "MISMATCH");
    }
    std::cerr << msg.str() << "\n";
    return kExitOk;
}

int run_simulate(const SimFlags &f) {
    auto opts = to_options(f);
    LibString text;
    if (f.format == "csv") {
        double g = f.g;
        check(revft_sweep(&opts, &g, 1, 0, text.out()));
    } else {
        check(revft_simulate(&opts, f.g, text.out()));
    }
    emit(f.out, text.str());
    return kExitOk;
}

int run_sweep(const SimFlags &f) {
    auto gs = parse_g_list(f.g_list);
    auto opts = to_options(f);
    LibString text;
    check(revft_sweep(&opts, gs.data(), gs.size(), f.format == "json", text.out()));
    emit(f.out, text.str());
    return kExitOk;
}

struct AnalyzeFlags {
    std::string calc;
    bool table2 = false;
    std::optional<int> G, k, L;
    std::optional<double> E, G_tilde, T, g, rho, rho1, rho2, temperature, bits;
    std::string out;
};

int run_analyze(const AnalyzeFlags &f) {
    std::string calc = f.table2 ? "table2" : f.calc;
    if (calc.empty()) {
        throw Failure{kExitUsage, "analyze needs a calculator name or --table2"};
    }
    nlohmann::json req = {{"calc", calc}};
    auto put = [&](const char *key, const auto &v) {
        if (v) {
            req[key] = *v;
        }
    };
    put("G", f.G);
    put("k", f.k);
    put("L", f.L);
    put("E", f.E);
    put("G_tilde", f.G_tilde);
    put("T", f.T);
    put("g", f.g);
    put("rho", f.rho);
    put("temperature", f.temperature);
    put("bits", f.bits);
    if (calc == "mixed") {
        // Default to the no-initialization 1D and 2D thresholds.
        req["rho1"] = f.rho1.value_or(1.0 / 2109);
        req["rho2"] = f.rho2.value_or(1.0 / 273);
    }
    LibString resp;
    check(revft_analyze(req.dump().c_str(), resp.out()));
    emit(f.out, resp.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"revft: fault-tolerant reversible circuits"};
    app.require_subcommand(1);

    std::string verify_layout;
    std::string verify_out;
    auto *verify = app.add_subcommand("verify", "exhaustive checks of a recovery circuit");
    verify->add_option("--layout", verify_layout, "nonlocal, 1d or 2d")->required();
    verify->add_option("--out", verify_out, "report file (default stdout)");

    std::string c_layout = "nonlocal";
    std::string c_gate = "MAJ";
    std::string c_init = "physical";
    std::string c_out;
    int c_level = 1;
    auto *compile = app.add_subcommand("compile", "compile one concatenated gate cycle to JSON");
    compile->add_option("--layout", c_layout, "nonlocal, 2d, 1d or mixed:K")->capture_default_str();
    compile->add_option("--level", c_level, "concatenation level")->required();
    compile->add_option("--gate", c_gate, "3-bit base gate")->capture_default_str();
    compile->add_option("--init-lowering", c_init, "encoded or physical")
        ->check(CLI::IsMember({"encoded", "physical"}))
        ->capture_default_str();
    compile->add_option("--out", c_out, "output file (default stdout)");

    SimFlags sim;
    auto *simulate = app.add_subcommand("simulate", "estimate the logical error rate at one g");
    add_sim_flags(simulate, sim);
    simulate->add_option("--g", sim.g, "gate error rate")->required();
    simulate->add_option("--format", sim.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    SimFlags sw;
    sw.format = "csv";
    auto *sweep = app.add_subcommand("sweep", "estimate the logical error rate over a list of g");
    add_sim_flags(sweep, sw);
    sweep->add_option("--g-list", sw.g_list, "comma-separated ascending g values")->required();
    sweep->add_option("--format", sw.format, "csv or json")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    AnalyzeFlags an;
    auto *analyze = app.add_subcommand("analyze", "closed-form calculators");
    analyze->add_option("calc", an.calc, "threshold, bound, level, blowup, mixed, table2, entropy or landauer")
        ->check(CLI::IsMember({"threshold", "bound", "level", "blowup", "mixed", "table2", "entropy", "landauer"}));
    analyze->add_flag("--table2", an.table2, "emit the six mixed-layout ratios");
    analyze->add_option("--G", an.G, "operations per encoded bit per cycle");
    analyze->add_option("--E", an.E, "recovery operation count");
    analyze->add_option("--G-tilde", an.G_tilde, "gates per encoded gate (entropy model)");
    analyze->add_option("--T", an.T, "target gate count");
    analyze->add_option("--g", an.g, "physical gate error rate");
    analyze->add_option("--rho", an.rho, "threshold");
    analyze->add_option("--rho1", an.rho1, "1D threshold");
    analyze->add_option("--rho2", an.rho2, "2D threshold");
    analyze->add_option("--k", an.k, "level count (bound, mixed)");
    analyze->add_option("--L", an.L, "concatenation level");
    analyze->add_option("--temperature", an.temperature, "kelvin");
    analyze->add_option("--bits", an.bits, "entropy in bits (landauer)");
    analyze->add_option("--out", an.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            return run_verify(verify_layout, verify_out);
        }
        if (*compile) {
            return run_compile(c_layout, c_level, c_gate, c_init, c_out);
        }
        if (*simulate) {
            if (sim.format.empty()) {
                sim.format = "json";
            }
            return run_simulate(sim);
        }
        if (*sweep) {
            return run_sweep(sw);
        }
        if (*analyze) {
            return run_analyze(an);
        }
    } catch (const Failure &f) {
        std::cerr << "revft: " << f.message << "\n";
        return f.code;
    } catch (const std::exception &e) {
        std::cerr << "revft: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
