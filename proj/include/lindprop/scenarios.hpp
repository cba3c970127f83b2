// Copyright 2026 The lindprop Authors
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

#ifndef LINDPROP_SCENARIOS_HPP
#define LINDPROP_SCENARIOS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <lindprop/liouville.hpp>
#include <lindprop/propagators.hpp>

namespace lindprop {

inline constexpr real pi = 3.14159265358979323846;

/**
 * Anharmonic ladder with nearest-neighbour dipole coupling. Rung i
 * (1-based) has spacing omega0 * (1 - 0.1 * (i - 3)).
 */
struct ladder_spec
{
    int n_levels = 6;
    /// rad/s
    real omega0 = 2.0 * pi * 1e13;
    /// V/m
    real field = 9e9;
    /// A s m
    real dipole = 1e-29;
    real hbar = hbar_si;

    /// omega_{i,i+1}, rung is 1-based.
    real rung_frequency(int rung) const;

    /// Throws config_error naming the offending field.
    void validate() const;
};

/// H = (hbar / 2) (omega sigma_z + rabi sigma_x), with level 0 at +hbar omega / 2.
struct two_level_spec
{
    real omega = 2.0 * pi * 1e14;
    real rabi = pi * 1e14;
    /// Scales the dipole operator; the field is chosen to give rabi.
    real dipole = 1e-29;
    real hbar = hbar_si;

    void validate() const;
};

using scenario_spec = std::variant<ladder_spec, two_level_spec>;

/**
 * A scenario split into a static generator and a dipole drive, ready for
 * any propagator. generator_at() of the resulting context is the full
 * Hamiltonian.
 */
struct scenario
{
    std::string name;
    lindblad_generator static_generator;
    std::optional<interaction_drive> drive;

    Eigen::Index n_levels() const { return static_generator.n_levels(); }

    step_context context(real dt) const;

    /// Static part plus the drive at t = 0.
    lindblad_generator full_generator_at_zero() const;
};

/// Full ladder Hamiltonian with the field folded in; no dissipator.
lindblad_generator build_ladder_hamiltonian(const ladder_spec& spec);

/// Diagonal static part plus a constant drive. The dipole operator carries
/// -mu on the off-diagonals so that H_static - mu_op E equals
/// build_ladder_hamiltonian().
scenario build_ladder_scenario(const ladder_spec& spec);

scenario build_two_level_scenario(const two_level_spec& spec);

scenario build_scenario(const scenario_spec& spec);

/// |0><0| in an n-level system (population 1 in the lowest level).
density_matrix ground_state(Eigen::Index n);

/// Closed-form exp(-iHt/hbar) rho0 exp(iHt/hbar) for
/// H = (hbar / 2) (omega sigma_z + rabi sigma_x).
density_matrix two_level_analytic(real omega, real rabi, real t,
                                  const density_matrix& rho0);

enum class initial_state_kind
{
    ground,
    custom
};

struct run_config
{
    scenario_spec scenario = ladder_spec{};
    method_spec method{};
    /// s
    real dt = 1e-16;
    /// s
    real t_end = 2e-12;
    int output_stride = 10;
    initial_state_kind initial_state = initial_state_kind::ground;
    std::optional<complex_matrix> initial_matrix;
    std::optional<std::filesystem::path> csv_path;
    std::optional<std::filesystem::path> report_path;

    /// Throws config_error naming the offending key.
    void validate() const;

    std::int64_t n_steps() const;
    density_matrix initial_density() const;
};

/**
 * Parses the INI-style configuration text. Every absent key takes its
 * default; unknown sections or keys are errors.
 */
run_config parse_config(std::string_view text,
                        std::string_view source = "<config>");

/// Reads and parses a configuration file. Missing files raise io_error.
run_config load_config(const std::filesystem::path& path);

}

#endif
