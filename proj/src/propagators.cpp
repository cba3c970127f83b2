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

#include <lindprop/propagators.hpp>

#include <lindprop/errors.hpp>

namespace lindprop {

namespace {

const complex imag_unit(0.0, 1.0);

complex_matrix conjugate_with(const complex_matrix& a, const complex_matrix& rho)
{
    return a * rho * a.adjoint();
}

/// Liouville-space form of rho -> a rho a^dagger.
complex_matrix conjugation_superoperator(const complex_matrix& a)
{
    return kron(a.conjugate(), a);
}

density_matrix half_static_step(const step_context& ctx,
                                const density_matrix& rho)
{
    if (const auto& p = ctx.half_static_unitary()) {
        return { conjugate_with(*p, rho.matrix) };
    }
    return apply(ctx.half_static_update(), rho);
}

complex_matrix interaction_at(const step_context& ctx, real t)
{
    if (!ctx.drive()) {
        const Eigen::Index n = ctx.n_levels();
        return complex_matrix::Zero(n, n);
    }
    return ctx.drive()->interaction(t);
}

real half_step_time(const step_context& ctx, std::int64_t step)
{
    return (double(step) + 0.5) * ctx.dt();
}

}

interaction_drive interaction_drive::constant(complex_matrix dipole,
                                              real field)
{
    return { std::move(dipole), [field](real) { return field; }, true };
}

interaction_drive interaction_drive::time_dependent(
    complex_matrix dipole, std::function<real(real)> field)
{
    return { std::move(dipole), std::move(field), false };
}

complex_matrix interaction_drive::interaction(real t) const
{
    return dipole * complex(field(t), 0.0);
}

std::string method_spec::name() const
{
    switch (kind) {
    case method_kind::me:
        return "me";
    case method_kind::strang_cayley:
        return "strang_cayley";
    case method_kind::strang_taylor:
        return "strang_taylor";
    case method_kind::rk4:
        return "rk4";
    case method_kind::pc:
        return "pc";
    }
    return "unknown";
}

method_spec method_spec::parse(std::string_view name, int taylor_order)
{
    if (taylor_order < 1) {
        throw contract_violation("Taylor truncation order must be >= 1");
    }
    if (name == "me") {
        return { method_kind::me, taylor_order };
    }
    if (name == "strang_cayley") {
        return { method_kind::strang_cayley, taylor_order };
    }
    if (name == "strang_taylor") {
        return { method_kind::strang_taylor, taylor_order };
    }
    if (name == "rk4") {
        return { method_kind::rk4, taylor_order };
    }
    if (name == "pc") {
        return { method_kind::pc, taylor_order };
    }
    throw contract_violation("unknown method '" + std::string(name) + "'");
}

int method_order(method_kind kind)
{
    switch (kind) {
    case method_kind::me:
        return 0;
    case method_kind::rk4:
        return 4;
    case method_kind::strang_cayley:
    case method_kind::strang_taylor:
    case method_kind::pc:
        return 2;
    }
    return 0;
}

step_context::step_context(real dt, lindblad_generator generator,
                           std::optional<interaction_drive> drive)
    : m_dt(dt), m_generator(std::move(generator)), m_drive(std::move(drive))
{
    if (!(dt > 0.0)) {
        throw contract_violation("step_context: dt must be positive");
    }
    m_generator.validate();
    const Eigen::Index n = m_generator.n_levels();
    if (m_drive) {
        if (m_drive->dipole.rows() != n || m_drive->dipole.cols() != n) {
            throw contract_violation(
                "step_context: dipole operator has wrong size");
        }
        const complex_matrix& mu = m_drive->dipole;
        if (hermiticity_residual(mu) > 1e-10 * mu.norm()) {
            throw contract_violation(
                "step_context: dipole operator is not Hermitian");
        }
        if (!m_drive->field) {
            throw contract_violation("step_context: drive has no field");
        }
    }

    const superoperator l_static = full_generator(m_generator);
    m_half_static_liouville = { n, matrix_exponential(l_static.matrix *
                                                      complex(dt / 2.0)) };
    if (m_generator.collapse_terms.empty()) {
        m_half_static_unitary = matrix_exponential(
            (-imag_unit * dt / (2.0 * m_generator.hbar)) *
            m_generator.hamiltonian);
    }
    if (time_independent()) {
        const superoperator l = full_generator(generator_at(0.0));
        m_frozen_update = superoperator{
            n, matrix_exponential(l.matrix * complex(dt)) };
    }
}

bool step_context::time_independent() const
{
    return !m_drive || m_drive->constant_field;
}

lindblad_generator step_context::generator_at(real t) const
{
    if (!m_drive) {
        return m_generator;
    }
    lindblad_generator g = m_generator;
    g.hamiltonian -= m_drive->interaction(t);
    return g;
}

const superoperator& step_context::frozen_update() const
{
    if (!m_frozen_update) {
        throw contract_violation(
            "step_context: no frozen update for a time-dependent drive");
    }
    return *m_frozen_update;
}

std::vector<real> rk4_coefficients()
{
    return { 1.0, 1.0, 1.0 / 2.0, 1.0 / 6.0, 1.0 / 24.0 };
}

std::vector<real> pc_coefficients()
{
    return { 1.0, 1.0, 1.0 / 2.0, 1.0 / 4.0, 1.0 / 8.0 };
}

superoperator polynomial_update_matrix(const polynomial_update& p)
{
    if (p.coefficients.empty()) {
        throw contract_violation("polynomial_update: no coefficients");
    }
    const complex_matrix x = p.generator.matrix * complex(p.dt);
    const Eigen::Index dim = x.rows();
    complex_matrix u = p.coefficients.back() * complex_matrix::Identity(dim, dim);
    for (auto c = p.coefficients.rbegin() + 1; c != p.coefficients.rend(); ++c) {
        u = u * x;
        u.diagonal().array() += *c;
    }
    return { p.generator.n_levels, std::move(u) };
}

superoperator me_update_matrix(const step_context& ctx, std::int64_t step)
{
    if (ctx.time_independent()) {
        return ctx.frozen_update();
    }
    const superoperator l =
        full_generator(ctx.generator_at(half_step_time(ctx, step)));
    return { l.n_levels, matrix_exponential(l.matrix * complex(ctx.dt())) };
}

density_matrix me_step(const step_context& ctx, const density_matrix& rho,
                       std::int64_t step)
{
    if (ctx.time_independent()) {
        return apply(ctx.frozen_update(), rho);
    }
    return apply(me_update_matrix(ctx, step), rho);
}

complex_matrix cayley_propagator(const complex_matrix& v, real dt, real hbar)
{
    const complex_matrix half = (imag_unit * dt / (2.0 * hbar)) * v;
    const complex_matrix id = identity(v.rows());
    return solve(id - half, id + half);
}

complex_matrix taylor_propagator(const complex_matrix& v, real dt, real hbar,
                                 int order)
{
    if (order < 1) {
        throw contract_violation("taylor_propagator: order must be >= 1");
    }
    const complex_matrix x = (imag_unit * dt / hbar) * v;
    complex_matrix term = identity(v.rows());
    complex_matrix y = term;
    for (int m = 1; m <= order; m++) {
        term = term * x / complex(m);
        y += term;
    }
    return y;
}

real taylor_unitarity_defect(const complex_matrix& v, real dt, real hbar,
                             int order)
{
    const complex_matrix y = taylor_propagator(v, dt, hbar, order);
    return (y * y.adjoint() - identity(v.rows())).norm();
}

density_matrix strang_cayley_step(const step_context& ctx,
                                  const density_matrix& rho, std::int64_t step)
{
    const complex_matrix a =
        cayley_propagator(interaction_at(ctx, half_step_time(ctx, step)),
                          ctx.dt(), ctx.generator().hbar);
    density_matrix out = half_static_step(ctx, rho);
    out.matrix = conjugate_with(a, out.matrix);
    return half_static_step(ctx, out);
}

density_matrix strang_taylor_step(const step_context& ctx,
                                  const density_matrix& rho, int order,
                                  std::int64_t step)
{
    const complex_matrix y =
        taylor_propagator(interaction_at(ctx, half_step_time(ctx, step)),
                          ctx.dt(), ctx.generator().hbar, order);
    density_matrix out = half_static_step(ctx, rho);
    out.matrix = conjugate_with(y, out.matrix);
    return half_static_step(ctx, out);
}

density_matrix rk4_step(const step_context& ctx, const density_matrix& rho,
                        std::int64_t step)
{
    const real dt = ctx.dt();
    const real t = ctx.time_of(step);
    const lindblad_generator g0 = ctx.generator_at(t);
    const lindblad_generator gh = ctx.generator_at(t + dt / 2.0);
    const lindblad_generator g1 = ctx.generator_at(t + dt);

    const complex_matrix& r = rho.matrix;
    const complex_matrix k1 = apply_generator(g0, r);
    const complex_matrix k2 = apply_generator(gh, r + (dt / 2.0) * k1);
    const complex_matrix k3 = apply_generator(gh, r + (dt / 2.0) * k2);
    const complex_matrix k4 = apply_generator(g1, r + dt * k3);
    return { r + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4) };
}

density_matrix pc_step(const step_context& ctx, const density_matrix& rho,
                       std::int64_t step)
{
    const real dt = ctx.dt();
    const lindblad_generator g = ctx.generator_at(half_step_time(ctx, step));
    const complex_matrix& r = rho.matrix;
    complex_matrix predicted = r;
    for (int iteration = 0; iteration < 4; iteration++) {
        predicted = r + (dt / 2.0) * apply_generator(g, predicted + r);
    }
    return { std::move(predicted) };
}

density_matrix step(const step_context& ctx, const method_spec& method,
                    const density_matrix& rho, std::int64_t step_index)
{
    switch (method.kind) {
    case method_kind::me:
        return me_step(ctx, rho, step_index);
    case method_kind::strang_cayley:
        return strang_cayley_step(ctx, rho, step_index);
    case method_kind::strang_taylor:
        return strang_taylor_step(ctx, rho, method.taylor_order, step_index);
    case method_kind::rk4:
        return rk4_step(ctx, rho, step_index);
    case method_kind::pc:
        return pc_step(ctx, rho, step_index);
    }
    throw contract_violation("step: unknown method");
}

superoperator update_matrix(const step_context& ctx, const method_spec& method,
                            std::int64_t step_index)
{
    const Eigen::Index n = ctx.n_levels();
    switch (method.kind) {
    case method_kind::me:
        return me_update_matrix(ctx, step_index);
    case method_kind::strang_cayley:
    case method_kind::strang_taylor: {
        const complex_matrix v =
            interaction_at(ctx, half_step_time(ctx, step_index));
        const real hbar = ctx.generator().hbar;
        const complex_matrix a =
            method.kind == method_kind::strang_cayley
                ? cayley_propagator(v, ctx.dt(), hbar)
                : taylor_propagator(v, ctx.dt(), hbar, method.taylor_order);
        const complex_matrix& half = ctx.half_static_update().matrix;
        return { n, half * conjugation_superoperator(a) * half };
    }
    case method_kind::rk4:
    case method_kind::pc: {
        if (!ctx.time_independent()) {
            throw contract_violation(
                "update_matrix: RK4/PC update matrices need a "
                "time-independent generator");
        }
        polynomial_update p{ method.kind == method_kind::rk4
                                 ? rk4_coefficients()
                                 : pc_coefficients(),
                             full_generator(ctx.generator_at(0.0)), ctx.dt() };
        return polynomial_update_matrix(p);
    }
    }
    throw contract_violation("update_matrix: unknown method");
}

}
