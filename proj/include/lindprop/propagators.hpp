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

#ifndef LINDPROP_PROPAGATORS_HPP
#define LINDPROP_PROPAGATORS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <lindprop/liouville.hpp>

namespace lindprop {

/**
 * Dipole coupling to a classical field.
 *
 * The interaction energy is -mu E(t), so the total Hamiltonian during a
 * step is H_static - dipole * E(t). With V = dipole * E the interaction
 * propagator is exp(+i V dt / hbar).
 */
struct interaction_drive
{
    /// Hermitian, A s m.
    complex_matrix dipole;
    /// Field in V/m at time t in seconds.
    std::function<real(real)> field;
    /// True when field() returns the same value for every t.
    bool constant_field = false;

    static interaction_drive constant(complex_matrix dipole, real field);
    static interaction_drive time_dependent(complex_matrix dipole,
                                            std::function<real(real)> field);

    /// V = dipole * E(t).
    complex_matrix interaction(real t) const;
};

enum class method_kind
{
    me,
    strang_cayley,
    strang_taylor,
    rk4,
    pc
};

struct method_spec
{
    method_kind kind = method_kind::me;
    /// Only used by strang_taylor.
    int taylor_order = 2;

    std::string name() const;

    /// Accepts "me", "strang_cayley", "strang_taylor", "rk4" and "pc".
    static method_spec parse(std::string_view name, int taylor_order = 2);
};

/// Documented local order (ME is exact and reports 0).
int method_order(method_kind kind);

/**
 * Immutable per-dt propagation context.
 *
 * The generator holds the static Hamiltonian (and any collapse terms);
 * the optional drive adds the time-dependent interaction. All caches are
 * built in the constructor, so a context can be shared across threads.
 */
class step_context
{
public:
    step_context(real dt, lindblad_generator generator,
                 std::optional<interaction_drive> drive = std::nullopt);

    real dt() const { return m_dt; }
    const lindblad_generator& generator() const { return m_generator; }
    const std::optional<interaction_drive>& drive() const { return m_drive; }
    Eigen::Index n_levels() const { return m_generator.n_levels(); }

    /// No drive, or a drive with a constant field.
    bool time_independent() const;

    /// Start time of step n, derived as n * dt.
    real time_of(std::int64_t step) const { return double(step) * m_dt; }

    /// Generator with the interaction frozen at time t.
    lindblad_generator generator_at(real t) const;

    /// exp(L dt) for time-independent contexts.
    const superoperator& frozen_update() const;

    /// exp(L_1 dt / 2) of the static part in Liouville space.
    const superoperator& half_static_update() const
    {
        return m_half_static_liouville;
    }

    /// exp(-i H_static dt / (2 hbar)); only valid without collapse terms.
    const std::optional<complex_matrix>& half_static_unitary() const
    {
        return m_half_static_unitary;
    }

private:
    real m_dt;
    lindblad_generator m_generator;
    std::optional<interaction_drive> m_drive;

    superoperator m_half_static_liouville;
    std::optional<complex_matrix> m_half_static_unitary;
    std::optional<superoperator> m_frozen_update;
};

/// U = sum_j c_j (L dt)^j.
struct polynomial_update
{
    std::vector<real> coefficients;
    superoperator generator;
    real dt = 0.0;
};

/// (1, 1, 1/2, 1/6, 1/24).
std::vector<real> rk4_coefficients();
/// (1, 1, 1/2, 1/4, 1/8).
std::vector<real> pc_coefficients();

/// Horner evaluation of the update polynomial.
superoperator polynomial_update_matrix(const polynomial_update& p);

/// exp(L_n dt) with the field sampled at t_{n+1/2}.
superoperator me_update_matrix(const step_context& ctx, std::int64_t step = 0);

density_matrix me_step(const step_context& ctx, const density_matrix& rho,
                       std::int64_t step = 0);

/// (I - i V dt / (2 hbar))^{-1} (I + i V dt / (2 hbar)).
complex_matrix cayley_propagator(const complex_matrix& v, real dt, real hbar);

/// sum_{m=0}^{k} (i V dt / hbar)^m / m!.
complex_matrix taylor_propagator(const complex_matrix& v, real dt, real hbar,
                                 int order);

/// ||Y Y^dagger - I||_F for the truncated Taylor propagator.
real taylor_unitarity_defect(const complex_matrix& v, real dt, real hbar,
                             int order);

density_matrix strang_cayley_step(const step_context& ctx,
                                  const density_matrix& rho,
                                  std::int64_t step = 0);

density_matrix strang_taylor_step(const step_context& ctx,
                                  const density_matrix& rho, int order = 2,
                                  std::int64_t step = 0);

density_matrix rk4_step(const step_context& ctx, const density_matrix& rho,
                        std::int64_t step = 0);

density_matrix pc_step(const step_context& ctx, const density_matrix& rho,
                       std::int64_t step = 0);

/// Dispatches on the method.
density_matrix step(const step_context& ctx, const method_spec& method,
                    const density_matrix& rho, std::int64_t step_index = 0);

/**
 * Explicit Liouville-space update matrix of one step.
 *
 * ME returns exp(L dt); the Strang variants return the composite
 * half-step / interaction / half-step product; RK4 and PC return their
 * polynomial updates and require a time-independent context
 * (contract_violation otherwise).
 */
superoperator update_matrix(const step_context& ctx, const method_spec& method,
                            std::int64_t step_index = 0);

}

#endif
