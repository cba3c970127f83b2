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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include <lindprop/cptp.hpp>
#include <lindprop/errors.hpp>
#include <lindprop/scenarios.hpp>

#include "test_support.hpp"

using namespace lindprop;
using namespace lindprop::testing;

TEST_CASE("ladder coupling and rung frequencies")
{
    const ladder_spec spec{};
    const lindblad_generator g = build_ladder_hamiltonian(spec);
    CHECK(g.hamiltonian(0, 1).real() == doctest::Approx(9e-20));
    CHECK(g.hamiltonian(1, 0).real() == doctest::Approx(9e-20));
    CHECK(g.hamiltonian(0, 0).real() == 0.0);

    CHECK(spec.rung_frequency(1) == doctest::Approx(1.2 * spec.omega0));
    CHECK(spec.rung_frequency(5) == doctest::Approx(0.8 * spec.omega0));
    const real h12 = g.hamiltonian(1, 1).real() - g.hamiltonian(0, 0).real();
    const real h56 = g.hamiltonian(5, 5).real() - g.hamiltonian(4, 4).real();
    CHECK(h12 == doctest::Approx(hbar_si * 1.2 * spec.omega0));
    CHECK(h56 == doctest::Approx(hbar_si * 0.8 * spec.omega0));
}

TEST_CASE("ladder coupling to level spacing ratio")
{
    const ladder_spec spec{};
    const real quantum = spec.hbar * spec.omega0;
    CHECK(quantum == doctest::Approx(6.62607015e-21).epsilon(1e-9));
    CHECK(spec.dipole * spec.field / quantum ==
          doctest::Approx(13.582711625101755).epsilon(1e-12));
}

TEST_CASE("ladder Hamiltonians are real, Hermitian and tridiagonal")
{
    for (int n : { 2, 3, 6, 9 }) {
        for (real field : { 0.0, 1e9, 9e9 }) {
            ladder_spec spec{};
            spec.n_levels = n;
            spec.field = field;
            const complex_matrix h = build_ladder_hamiltonian(spec).hamiltonian;
            CHECK(h.rows() == n);
            CHECK(hermiticity_residual(h) == 0.0);
            CHECK(h.imag().isZero(0.0));
            for (Eigen::Index i = 0; i < n; i++) {
                for (Eigen::Index j = 0; j < n; j++) {
                    if (std::abs(i - j) > 1) {
                        CHECK(h(i, j) == complex(0.0));
                    }
                }
            }
        }
    }
}

TEST_CASE("ladder scenario splits into static part and drive")
{
    const ladder_spec spec{};
    const scenario sc = build_ladder_scenario(spec);
    CHECK(sc.name == "ladder");
    REQUIRE(sc.drive);
    CHECK(sc.drive->constant_field);
    const complex_matrix full = build_ladder_hamiltonian(spec).hamiltonian;
    CHECK(approx_equal(sc.full_generator_at_zero().hamiltonian, full,
                       1e-12 * full.norm()));
    CHECK(approx_equal(sc.context(1e-16).generator_at(3e-16).hamiltonian, full,
                       1e-12 * full.norm()));
    const complex_matrix& h0 = sc.static_generator.hamiltonian;
    CHECK(approx_equal(h0, complex_matrix(h0.diagonal().asDiagonal()), 0.0));
}

TEST_CASE("zero field leaves diagonal states stationary for every method")
{
    ladder_spec spec{};
    spec.field = 0.0;
    const scenario sc = build_ladder_scenario(spec);
    const step_context ctx = sc.context(1e-16);
    complex_matrix rho = complex_matrix::Zero(6, 6);
    for (Eigen::Index i = 0; i < 6; i++) {
        rho(i, i) = real(i + 1) / 21.0;
    }
    for (method_kind kind :
         { method_kind::me, method_kind::strang_cayley, method_kind::strang_taylor,
           method_kind::rk4, method_kind::pc }) {
        density_matrix state{ rho };
        for (int n = 0; n < 20; n++) {
            state = step(ctx, { kind }, state, n);
        }
        CHECK((state.matrix - rho).norm() < 1e-14);
    }
}

TEST_CASE("ladder spec validation")
{
    ladder_spec spec{};
    spec.n_levels = 1;
    CHECK_THROWS_AS(spec.validate(), config_error);
    spec = {};
    spec.omega0 = -1.0;
    CHECK_THROWS_AS(spec.validate(), config_error);
    spec = {};
    spec.field = -1.0;
    CHECK_THROWS_AS(spec.validate(), config_error);
    spec = {};
    spec.dipole = 0.0;
    CHECK_THROWS_AS(spec.validate(), config_error);
}

TEST_CASE("two-level scenario reproduces its Pauli form")
{
    const two_level_spec spec{};
    const scenario sc = build_two_level_scenario(spec);
    const complex_matrix h = sc.full_generator_at_zero().hamiltonian;
    complex_matrix expected(2, 2);
    expected << spec.omega, spec.rabi, spec.rabi, -spec.omega;
    expected *= spec.hbar / 2.0;
    CHECK((h - expected).norm() < 1e-12 * expected.norm());
}

TEST_CASE("two_level_analytic closed-form cases")
{
    complex_matrix diag = complex_matrix::Zero(2, 2);
    diag(0, 0) = 0.7;
    diag(1, 1) = 0.3;
    const density_matrix still = two_level_analytic(5.0, 0.0, 1.3, { diag });
    CHECK((still.matrix - diag).norm() < 1e-15);

    const real rabi = 2.0;
    const density_matrix flipped =
        two_level_analytic(0.0, rabi, pi / rabi, ground_state(2));
    CHECK(std::abs(flipped.matrix(1, 1) - 1.0) < 1e-15);
    CHECK(std::abs(flipped.matrix(0, 0)) < 1e-15);

    CHECK_THROWS_AS(two_level_analytic(1.0, 1.0, 1.0, ground_state(3)),
                    contract_violation);
}

TEST_CASE("two_level_analytic conserves trace and spectrum")
{
    rng_t rng(61);
    for (int trial = 0; trial < 20; trial++) {
        const density_matrix rho = random_density(2, rng);
        const density_matrix out =
            two_level_analytic(1.0 + trial, 0.5 * trial, 0.37 * trial, rho);
        CHECK(std::abs(out.matrix.trace() - rho.matrix.trace()) < 1e-14);
        const real_vector a = hermitian_eigenvalues(rho.matrix);
        const real_vector b = hermitian_eigenvalues(out.matrix);
        CHECK((a - b).norm() < 1e-14);
    }
}

TEST_CASE("two_level_analytic agrees with me stepping")
{
    const two_level_spec spec{};
    const scenario sc = build_two_level_scenario(spec);
    const real dt = 1e-17;
    const step_context ctx = sc.context(dt);
    rng_t rng(62);
    density_matrix rho = random_density(2, rng);
    const density_matrix rho0 = rho;
    for (int n = 0; n < 137; n++) {
        rho = me_step(ctx, rho, n);
    }
    const density_matrix exact =
        two_level_analytic(spec.omega, spec.rabi, 137 * dt, rho0);
    CHECK((rho.matrix - exact.matrix).norm() < 1e-10);
}

TEST_CASE("empty configuration gives the ladder defaults")
{
    const run_config cfg = parse_config("");
    REQUIRE(std::holds_alternative<ladder_spec>(cfg.scenario));
    const auto& ladder = std::get<ladder_spec>(cfg.scenario);
    CHECK(ladder.n_levels == 6);
    CHECK(ladder.omega0 == doctest::Approx(2.0 * pi * 1e13));
    CHECK(ladder.field == 9e9);
    CHECK(ladder.dipole == 1e-29);
    CHECK(ladder.hbar == hbar_si);
    CHECK(cfg.method.kind == method_kind::me);
    CHECK(cfg.method.taylor_order == 2);
    CHECK(cfg.dt == 1e-16);
    CHECK(cfg.t_end == 2e-12);
    CHECK(cfg.n_steps() == 20000);
    CHECK(cfg.output_stride == 10);
    CHECK(cfg.initial_state == initial_state_kind::ground);
    CHECK(approx_equal(cfg.initial_density().matrix, ground_state(6).matrix, 0.0));
    CHECK_FALSE(cfg.csv_path);
    CHECK_FALSE(cfg.report_path);
}

TEST_CASE("configuration keys are applied")
{
    const run_config cfg = parse_config(R"(
; comment
[scenario]
type = two_level
omega = 1e14
rabi = 2e13
initial_state = custom
initial_matrix = 0.5, 0.5, 0.5, 0.5
initial_matrix_imag = 0 -0.0 0 0

[method]
name = strang_taylor
taylor_order = 3

[run]
dt = 2e-16
t_end = 1e-14
output_stride = 5

[output]
csv = out.csv
report = report.json
)");
    REQUIRE(std::holds_alternative<two_level_spec>(cfg.scenario));
    CHECK(std::get<two_level_spec>(cfg.scenario).omega == 1e14);
    CHECK(std::get<two_level_spec>(cfg.scenario).rabi == 2e13);
    CHECK(cfg.method.kind == method_kind::strang_taylor);
    CHECK(cfg.method.taylor_order == 3);
    CHECK(cfg.dt == 2e-16);
    CHECK(cfg.n_steps() == 50);
    CHECK(cfg.output_stride == 5);
    CHECK(cfg.initial_density().matrix(0, 1) == complex(0.5));
    CHECK(cfg.csv_path->string() == "out.csv");
    CHECK(cfg.report_path->string() == "report.json");
}

TEST_CASE("configuration errors name the offending key")
{
    auto message = [](std::string_view text) -> std::string {
        try {
            parse_config(text, "test.ini");
        } catch (const config_error& e) {
            return e.what();
        }
        return "";
    };
    CHECK(message("[run]\ndt = 0\n").find("run.dt") != std::string::npos);
    CHECK(message("[run]\ndt = abc\n").find("run.dt") != std::string::npos);
    CHECK(message("[run]\ndt = 1e-16x\n").find("run.dt") != std::string::npos);
    CHECK(message("[run]\nt_end = 1e-17\n").find("run.t_end") !=
          std::string::npos);
    CHECK(message("[run]\noutput_stride = 0\n").find("output_stride") !=
          std::string::npos);
    CHECK(message("[run]\nsteps = 3\n").find("run.steps") != std::string::npos);
    CHECK(message("[physics]\nx = 1\n").find("physics") != std::string::npos);
    CHECK(message("dt = 1\n").find("inside a section") != std::string::npos);
    CHECK(message("[method]\nname = euler\n").find("method.name") !=
          std::string::npos);
    CHECK(message("[method]\ntaylor_order = 0\n").find("taylor_order") !=
          std::string::npos);
    CHECK(message("[scenario]\ntype = qubit\n").find("scenario.type") !=
          std::string::npos);
    CHECK(message("[scenario]\nrabi = 1e13\n").find("scenario.rabi") !=
          std::string::npos);
    CHECK(message("[scenario]\ntype = two_level\nfield = 1\n")
              .find("scenario.field") != std::string::npos);
    CHECK(message("[scenario]\nn_levels = 1\n").find("n_levels") !=
          std::string::npos);
    CHECK(message("[scenario]\ninitial_state = custom\n")
              .find("initial_matrix") != std::string::npos);
    CHECK(message("[scenario]\ninitial_state = custom\ninitial_matrix = 1 0 0\n")
              .find("initial_matrix") != std::string::npos);
    CHECK(message("[scenario]\ntype = two_level\ninitial_state = custom\n"
                  "initial_matrix = 1.2 0 0 -0.2\n")
              .find("density matrix") != std::string::npos);
    CHECK(message("[scenario\n").find("test.ini:1") != std::string::npos);
}

TEST_CASE("load_config reads files and reports missing ones")
{
    const auto path =
        std::filesystem::temp_directory_path() / "lindprop_test_config.ini";
    {
        std::ofstream out(path);
        out << "[method]\nname = rk4\n";
    }
    CHECK(load_config(path).method.kind == method_kind::rk4);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_config(path), io_error);
}
