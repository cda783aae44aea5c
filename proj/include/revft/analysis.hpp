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

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace revft {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational &r);

struct Threshold {
    Rational exact;
    double value = 0.0;
};

/// 1 / (3 * C(G, 2)).
Threshold threshold(int G);

/// rho * (g / rho)^(2^k).
double logical_error_bound(double g, double rho, int k);

/// Smallest L with logical_error_bound(g, rho, L) <= 1/T. Throws
/// Error::Code::NoFiniteLevel when g >= rho.
int min_concat_level(double T, double g, double rho);

struct Blowup {
    std::uint64_t gate_factor = 1;
    std::uint64_t bit_factor = 1;
    double gate_exponent = 0.0;
    double bit_exponent = 0.0;
};

Blowup blowup(int G, int L);

struct MixedThreshold {
    double value = 0.0;
    double ratio = 0.0;  // value / rho2
};

/// rho2 * (rho1 / rho2)^(1 / 2^k).
MixedThreshold mixed_threshold(int k, double rho1, double rho2);

/// Ratios for k = 0..5 with the no-initialization 1D and 2D thresholds.
std::array<double, 6> table2_ratios();

/// 2 sqrt(7/8) + (7/8) log2 7.
double kappa();

struct EntropyReport {
    double upper_bound_bits = 0.0;
    double lower_bound_bits = 0.0;
    double max_useful_level = 0.0;
    std::optional<double> landauer_joules;
};

double max_useful_level(double g, double E);

/// Upper G_tilde^L kappa sqrt(g), lower (3E)^(L-1) g. The Landauer energy is
/// filled from the upper bound when a temperature is given.
EntropyReport entropy_bounds(double G_tilde, double E, int L, double g,
                             std::optional<double> temperature_kelvin = std::nullopt);

inline constexpr double kBoltzmann = 1.380649e-23;

/// k_B * T * ln 2 * bits.
double landauer_energy(double delta_h_bits, double temperature_kelvin);

}  // namespace revft
