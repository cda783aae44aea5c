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

#include "revft/analysis.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "revft/circuit.hpp"

namespace revft {

namespace {

[[noreturn]] void bad(const std::string &msg) {
    throw Error(Error::Code::InvalidArgument, msg);
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; i++) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
            throw Error(Error::Code::OutOfRange, "blowup factor overflows 64 bits");
        }
        r *= base;
    }
    return r;
}

}  // namespace

std::string to_string(const Rational &r) {
    std::ostringstream ss;
    ss << r.numerator() << "/" << r.denominator();
    return ss.str();
}

Threshold threshold(int G) {
    if (G < 2) {
        bad("threshold needs G >= 2");
    }
    if (G > 2000000) {
        throw Error(Error::Code::OutOfRange, "G too large");
    }
    std::int64_t pairs = static_cast<std::int64_t>(G) * (G - 1) / 2;
    Threshold t;
    t.exact = Rational(1, 3 * pairs);
    t.value = boost::rational_cast<double>(t.exact);
    return t;
}

double logical_error_bound(double g, double rho, int k) {
    if (!(rho > 0)) {
        bad("rho must be positive");
    }
    if (!(g >= 0)) {
        bad("g must be non-negative");
    }
    if (k < 0) {
        bad("k must be non-negative");
    }
    return rho * std::pow(g / rho, std::ldexp(1.0, k));
}

int min_concat_level(double T, double g, double rho) {
    if (!(T >= 1)) {
        bad("T must be at least 1");
    }
    if (!(rho > 0 && rho <= 1) || !(g >= 0)) {
        bad("need 0 < rho <= 1 and g >= 0");
    }
    if (g >= rho) {
        throw Error(Error::Code::NoFiniteLevel, "g >= rho: concatenation never reaches the target");
    }
    if (g == 0) {
        return 0;
    }
    // Compare in log space with a small relative slack so that exact
    // equalities (e.g. 1e-2 * 1e-4 against 1e-6) are not lost to rounding.
    const double target = -std::log(T);
    auto fits = [&](int L) {
        double lhs = std::log(rho) + std::ldexp(1.0, L) * std::log(g / rho);
        return lhs <= target + 1e-12 * std::max(1.0, std::abs(target));
    };
    int L = 0;
    if (T * rho > 1) {
        double closed = std::log2(std::log(T * rho) / std::log(rho / g));
        L = std::max(0, static_cast<int>(std::ceil(closed)));
    }
    while (L > 0 && fits(L - 1)) {
        L--;
    }
    while (!fits(L)) {
        L++;
    }
    return L;
}

Blowup blowup(int G, int L) {
    if (G < 3) {
        bad("blowup needs G >= 3");
    }
    if (L < 0) {
        bad("L must be non-negative");
    }
    Blowup b;
    b.gate_factor = checked_pow(3ULL * static_cast<std::uint64_t>(G - 2), L);
    b.bit_factor = checked_pow(9, L);
    b.gate_exponent = std::log2(3.0 * (G - 2));
    b.bit_exponent = std::log2(9.0);
    return b;
}

MixedThreshold mixed_threshold(int k, double rho1, double rho2) {
    if (!(rho1 > 0 && rho1 <= rho2)) {
        bad("need 0 < rho1 <= rho2");
    }
    if (k < 0) {
        bad("k must be non-negative");
    }
    MixedThreshold m;
    m.ratio = std::pow(rho1 / rho2, 1.0 / std::ldexp(1.0, k));
    m.value = rho2 * m.ratio;
    return m;
}

std::array<double, 6> table2_ratios() {
    const double rho1 = threshold(38).value;
    const double rho2 = threshold(14).value;
    std::array<double, 6> out{};
    for (int k = 0; k < 6; k++) {
        out[k] = mixed_threshold(k, rho1, rho2).ratio;
    }
    return out;
}

double kappa() {
    return 2 * std::sqrt(7.0 / 8.0) + (7.0 / 8.0) * std::log2(7.0);
}

double max_useful_level(double g, double E) {
    if (!(g > 0 && g < 1)) {
        bad("max_useful_level needs 0 < g < 1");
    }
    if (!(E >= 1)) {
        bad("E must be at least 1");
    }
    return std::log(1 / g) / std::log(3 * E) + 1;
}

EntropyReport entropy_bounds(double G_tilde, double E, int L, double g, std::optional<double> temperature_kelvin) {
    if (L < 1) {
        bad("entropy bounds need L >= 1");
    }
    if (!(g > 0 && g <= 1)) {
        bad("entropy bounds need 0 < g <= 1");
    }
    if (!(G_tilde > 0) || !(E >= 1)) {
        bad("need G_tilde > 0 and E >= 1");
    }
    EntropyReport r;
    r.upper_bound_bits = std::pow(G_tilde, L) * kappa() * std::sqrt(g);
    r.lower_bound_bits = std::pow(3 * E, L - 1) * g;
    r.max_useful_level = g < 1 ? max_useful_level(g, E) : 1.0;
    if (temperature_kelvin) {
        r.landauer_joules = landauer_energy(r.upper_bound_bits, *temperature_kelvin);
    }
    return r;
}

double landauer_energy(double delta_h_bits, double temperature_kelvin) {
    if (!(delta_h_bits >= 0) || !(temperature_kelvin >= 0)) {
        bad("entropy and temperature must be non-negative");
    }
    return kBoltzmann * temperature_kelvin * std::log(2.0) * delta_h_bits;
}

}  // namespace revft
