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

#ifndef LINDPROP_COMMANDS_HPP
#define LINDPROP_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include <lindprop/cptp.hpp>
#include <lindprop/scenarios.hpp>

namespace lindprop {

inline constexpr const char* version_string = "0.1.0";

/// Least-squares slope of log(y) against log(x).
real fit_loglog_slope(std::span<const real> x, std::span<const real> y);

struct simulation_record
{
    std::int64_t step = 0;
    /// step * dt, never accumulated.
    real time = 0.0;
    real_vector populations;
    real trace_deviation = 0.0;
    real hermiticity_residual = 0.0;
    real min_eigenvalue = 0.0;
};

struct run_result
{
    std::string method;
    real dt = 0.0;
    std::int64_t n_steps = 0;
    /// Every output_stride-th step, including step 0 and the last step.
    std::vector<simulation_record> records;
    /// Scanned over every step, independent of the output stride.
    std::optional<negativity_event> first_negative_eigenvalue;
    std::optional<negativity_event> first_negative_population;
    real worst_trace_deviation = 0.0;
    real min_population = 0.0;
    real max_population = 0.0;
    real min_eigenvalue = 0.0;
    density_matrix final_state;
};

/// Propagates the configured scenario. Throws numerical_failure when a
/// state becomes non-finite.
run_result run_simulation(const run_config& config);

/// Header: step,time_s,pop_1..pop_N,trace_dev,herm_res,min_eig.
void write_csv(std::ostream& out, const run_result& result);

/// One-line human summary including the first-negativity results.
std::string run_summary(const run_result& result);

struct method_verdict
{
    std::string method;
    real dt = 0.0;
    bool is_cptp = false;
    bool is_completely_positive = false;
    bool is_trace_preserving = false;
    real min_choi_eigenvalue = 0.0;
    real trace_preservation_residual = 0.0;
    std::size_t kraus_count = 0;
};

struct verdict_report
{
    std::string scenario;
    real dt = 0.0;
    /// me, strang_cayley, strang_taylor(k), rk4, pc at dt.
    std::vector<method_verdict> verdicts;
    /// The same five methods at dt, dt/2, dt/4, dt/8.
    std::vector<method_verdict> sweep;
};

/// Certifies every method on the configured scenario. Requires a
/// time-independent generator (contract_violation otherwise).
verdict_report verify_methods(const scenario& sc, real dt, int taylor_order);

verdict_report cmd_verify(const run_config& config);

void print_verdict_table(std::ostream& out, const verdict_report& report);

/// Documented schema, see README.
nlohmann::ordered_json to_json(const verdict_report& report);

struct convergence_row
{
    std::string method;
    std::vector<real> dts;
    std::vector<real> errors;
    real fitted_order = 0.0;
};

/**
 * Global error at t_end against the ME reference for dt, dt/2, dt/4, dt/8.
 * The reference uses the smallest dt; it is exact for time-independent
 * generators.
 */
std::vector<convergence_row> cmd_compare(const run_config& config,
                                         std::span<const method_spec> methods);

void print_convergence_table(std::ostream& out,
                             std::span<const convergence_row> rows);

struct bench_row
{
    std::string method;
    std::vector<int> levels;
    /// Seconds per step.
    std::vector<real> seconds_per_step;
    real fitted_exponent = 0.0;
};

/**
 * Times one step of each method on ladders of the given sizes. The field
 * is time-dependent, so ME rebuilds exp(L dt) every step.
 */
std::vector<bench_row> cmd_bench(std::span<const int> levels, int steps,
                                 std::span<const method_spec> methods);

void print_bench_table(std::ostream& out, std::span<const bench_row> rows);

}

#endif
