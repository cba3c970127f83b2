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

#include <lindprop/scenarios.hpp>

#include <cmath>

#include <lindprop/errors.hpp>

namespace lindprop {

namespace {

void require_positive(real value, const char* key)
{
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw config_error(std::string("invalid value for '") + key +
                           "': must be positive and finite");
    }
}

}

real ladder_spec::rung_frequency(int rung) const
{
    return omega0 * (1.0 - 0.1 * (rung - 3));
}

void ladder_spec::validate() const
{
    if (n_levels < 2) {
        throw config_error("invalid value for 'n_levels': must be >= 2");
    }
    require_positive(omega0, "omega0");
    if (!(field >= 0.0) || !std::isfinite(field)) {
        throw config_error("invalid value for 'field': must be >= 0");
    }
    require_positive(dipole, "dipole");
    require_positive(hbar, "hbar");
}

void two_level_spec::validate() const
{
    if (!(omega >= 0.0) || !std::isfinite(omega)) {
        throw config_error("invalid value for 'omega': must be >= 0");
    }
    require_positive(rabi, "rabi");
    require_positive(dipole, "dipole");
    require_positive(hbar, "hbar");
}

step_context scenario::context(real dt) const
{
    return step_context(dt, static_generator, drive);
}

lindblad_generator scenario::full_generator_at_zero() const
{
    lindblad_generator g = static_generator;
    if (drive) {
        g.hamiltonian -= drive->interaction(0.0);
    }
    return g;
}

lindblad_generator build_ladder_hamiltonian(const ladder_spec& spec)
{
    spec.validate();
    const Eigen::Index n = spec.n_levels;
    const real coupling = spec.dipole * spec.field;

    complex_matrix h = complex_matrix::Zero(n, n);
    for (Eigen::Index i = 1; i < n; i++) {
        h(i, i) = h(i - 1, i - 1) +
                  spec.hbar * spec.rung_frequency(static_cast<int>(i));
        h(i - 1, i) = coupling;
        h(i, i - 1) = coupling;
    }
    return { h, {}, spec.hbar };
}

scenario build_ladder_scenario(const ladder_spec& spec)
{
    const lindblad_generator full = build_ladder_hamiltonian(spec);
    const Eigen::Index n = spec.n_levels;

    lindblad_generator static_part = full;
    static_part.hamiltonian = full.hamiltonian.diagonal().asDiagonal();

    complex_matrix mu = complex_matrix::Zero(n, n);
    for (Eigen::Index i = 1; i < n; i++) {
        mu(i - 1, i) = -spec.dipole;
        mu(i, i - 1) = -spec.dipole;
    }
    return { "ladder", std::move(static_part),
             interaction_drive::constant(std::move(mu), spec.field) };
}

scenario build_two_level_scenario(const two_level_spec& spec)
{
    spec.validate();
    complex_matrix h0 = complex_matrix::Zero(2, 2);
    h0(0, 0) = spec.hbar * spec.omega / 2.0;
    h0(1, 1) = -spec.hbar * spec.omega / 2.0;

    complex_matrix mu = complex_matrix::Zero(2, 2);
    mu(0, 1) = -spec.dipole;
    mu(1, 0) = -spec.dipole;
    const real field = spec.hbar * spec.rabi / (2.0 * spec.dipole);

    return { "two_level", lindblad_generator{ h0, {}, spec.hbar },
             interaction_drive::constant(std::move(mu), field) };
}

scenario build_scenario(const scenario_spec& spec)
{
    return std::visit(
        [](const auto& s) -> scenario {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ladder_spec>) {
                return build_ladder_scenario(s);
            } else {
                return build_two_level_scenario(s);
            }
        },
        spec);
}

density_matrix ground_state(Eigen::Index n)
{
    complex_matrix rho = complex_matrix::Zero(n, n);
    rho(0, 0) = 1.0;
    return { rho };
}

density_matrix two_level_analytic(real omega, real rabi, real t,
                                  const density_matrix& rho0)
{
    if (rho0.n_levels() != 2) {
        throw contract_violation("two_level_analytic: expected a 2x2 state");
    }
    const real freq = std::hypot(omega, rabi);
    if (freq == 0.0) {
        return rho0;
    }
    // exp(-i (freq t / 2) n.sigma) = cos(.) I - i sin(.) n.sigma
    const real c = std::cos(freq * t / 2.0);
    const real s = std::sin(freq * t / 2.0);
    const real nz = omega / freq;
    const real nx = rabi / freq;
    const complex i(0.0, 1.0);

    complex_matrix u(2, 2);
    u(0, 0) = c - i * s * nz;
    u(0, 1) = -i * s * nx;
    u(1, 0) = -i * s * nx;
    u(1, 1) = c + i * s * nz;
    return { u * rho0.matrix * u.adjoint() };
}

}
