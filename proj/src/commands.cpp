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

#include <lindprop/commands.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <lindprop/errors.hpp>
#include <lindprop/tolerances.hpp>

namespace lindprop {

namespace {

simulation_record make_record(std::int64_t step, real dt,
                              const state_monitor& m)
{
    return { step, double(step) * dt, m.populations, m.trace_deviation,
             m.hermiticity_residual, m.min_eigenvalue };
}

density_matrix propagate(const step_context& ctx, const method_spec& method,
                         density_matrix rho, std::int64_t n_steps)
{
    for (std::int64_t s = 0; s < n_steps; s++) {
        rho = step(ctx, method, rho, s);
    }
    if (!rho.matrix.allFinite()) {
        throw numerical_failure("propagation produced non-finite values");
    }
    return rho;
}

method_verdict summarize(const std::string& name, real dt,
                         const choi_verdict& v)
{
    return { name,
             dt,
             v.is_cptp,
             v.is_completely_positive,
             v.is_trace_preserving,
             v.min_choi_eigenvalue,
             v.trace_preservation_residual,
             v.kraus_operators ? v.kraus_operators->size() : 0 };
}

std::string display_name(const method_spec& m)
{
    if (m.kind == method_kind::strang_taylor) {
        return m.name() + "(k=" + std::to_string(m.taylor_order) + ")";
    }
    return m.name();
}

std::string format_event(const std::optional<negativity_event>& e)
{
    if (!e) {
        return "none";
    }
    std::ostringstream s;
    s << "step " << e->step << " (t = " << std::setprecision(6) << e->time
      << " s)";
    return s.str();
}

}

real fit_loglog_slope(std::span<const real> x, std::span<const real> y)
{
    if (x.size() != y.size() || x.size() < 2) {
        throw contract_violation("fit_loglog_slope: need >= 2 paired points");
    }
    const auto n = double(x.size());
    real sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); i++) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw contract_violation(
                "fit_loglog_slope: values must be positive");
        }
        const real lx = std::log(x[i]);
        const real ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

run_result run_simulation(const run_config& config)
{
    config.validate();
    const scenario sc = build_scenario(config.scenario);
    const step_context ctx = sc.context(config.dt);

    run_result result;
    result.method = display_name(config.method);
    result.dt = config.dt;
    result.n_steps = config.n_steps();

    density_matrix rho = config.initial_density();
    state_monitor m = monitor(rho);
    std::vector<state_monitor> series{ m };
    series.reserve(static_cast<std::size_t>(result.n_steps) + 1);
    result.records.push_back(make_record(0, config.dt, m));

    for (std::int64_t s = 0; s < result.n_steps; s++) {
        rho = step(ctx, config.method, rho, s);
        if (!rho.matrix.allFinite()) {
            throw numerical_failure("state became non-finite at step " +
                                    std::to_string(s + 1));
        }
        m = monitor(rho);
        series.push_back(m);
        const std::int64_t done = s + 1;
        if (done % config.output_stride == 0 || done == result.n_steps) {
            result.records.push_back(make_record(done, config.dt, m));
        }
    }

    result.first_negative_eigenvalue =
        first_negativity(series, config.dt, tolerances::negativity,
                         negativity_measure::min_eigenvalue);
    result.first_negative_population =
        first_negativity(series, config.dt, tolerances::negativity,
                         negativity_measure::min_population);

    result.min_population = series.front().min_population();
    result.max_population = series.front().max_population;
    result.min_eigenvalue = series.front().min_eigenvalue;
    for (const auto& s : series) {
        result.worst_trace_deviation =
            std::max(result.worst_trace_deviation, s.trace_deviation);
        result.min_population = std::min(result.min_population,
                                         s.min_population());
        result.max_population = std::max(result.max_population,
                                         s.max_population);
        result.min_eigenvalue = std::min(result.min_eigenvalue,
                                         s.min_eigenvalue);
    }
    result.final_state = std::move(rho);
    return result;
}

void write_csv(std::ostream& out, const run_result& result)
{
    if (result.records.empty()) {
        return;
    }
    const Eigen::Index n = result.records.front().populations.size();
    out << "step,time_s";
    for (Eigen::Index i = 1; i <= n; i++) {
        out << ",pop_" << i;
    }
    out << ",trace_dev,herm_res,min_eig\n";

    const auto old_precision = out.precision(17);
    for (const auto& r : result.records) {
        out << r.step << ',' << r.time;
        for (Eigen::Index i = 0; i < n; i++) {
            out << ',' << r.populations(i);
        }
        out << ',' << r.trace_deviation << ',' << r.hermiticity_residual << ','
            << r.min_eigenvalue << '\n';
    }
    out.precision(old_precision);
}

std::string run_summary(const run_result& result)
{
    std::ostringstream s;
    s << "method=" << result.method << " dt=" << result.dt
      << " steps=" << result.n_steps
      << " first_negative_eigenvalue=" << format_event(result.first_negative_eigenvalue)
      << " first_negative_population=" << format_event(result.first_negative_population)
      << " min_population=" << std::setprecision(6) << result.min_population
      << " min_eigenvalue=" << result.min_eigenvalue
      << " max_trace_dev=" << result.worst_trace_deviation;
    return s.str();
}

verdict_report verify_methods(const scenario& sc, real dt, int taylor_order)
{
    if (sc.drive && !sc.drive->constant_field) {
        throw contract_violation(
            "verify: the update matrix is not constant for a time-dependent "
            "drive; use a constant field");
    }
    const std::vector<method_spec> methods = {
        { method_kind::me, taylor_order },
        { method_kind::strang_cayley, taylor_order },
        { method_kind::strang_taylor, taylor_order },
        { method_kind::rk4, taylor_order },
        { method_kind::pc, taylor_order },
    };

    verdict_report report;
    report.scenario = sc.name;
    report.dt = dt;
    for (int halving = 0; halving < 4; halving++) {
        const real h = dt / double(1 << halving);
        const step_context ctx = sc.context(h);
        for (const auto& m : methods) {
            const choi_verdict v = verify_cptp(update_matrix(ctx, m));
            method_verdict entry = summarize(display_name(m), h, v);
            if (halving == 0) {
                report.verdicts.push_back(entry);
            }
            report.sweep.push_back(std::move(entry));
        }
    }
    return report;
}

verdict_report cmd_verify(const run_config& config)
{
    config.validate();
    return verify_methods(build_scenario(config.scenario), config.dt,
                          config.method.taylor_order);
}

void print_verdict_table(std::ostream& out, const verdict_report& report)
{
    auto row = [&out](const method_verdict& v) {
        out << std::left << std::setw(20) << v.method << std::right
            << std::setw(12) << std::setprecision(4) << v.dt << std::setw(7)
            << (v.is_cptp ? "yes" : "no") << std::setw(5)
            << (v.is_completely_positive ? "yes" : "no") << std::setw(5)
            << (v.is_trace_preserving ? "yes" : "no") << std::setw(15)
            << std::setprecision(6) << v.min_choi_eigenvalue << std::setw(15)
            << v.trace_preservation_residual << std::setw(7) << v.kraus_count
            << '\n';
    };
    auto header = [&out] {
        out << std::left << std::setw(20) << "method" << std::right
            << std::setw(12) << "dt [s]" << std::setw(7) << "CPTP"
            << std::setw(5) << "CP" << std::setw(5) << "TP" << std::setw(15)
            << "min choi eig" << std::setw(15) << "trace resid"
            << std::setw(7) << "kraus" << '\n';
    };
    out << "scenario: " << report.scenario << '\n';
    header();
    for (const auto& v : report.verdicts) {
        row(v);
    }
    out << "\ndt sweep\n";
    header();
    for (const auto& v : report.sweep) {
        row(v);
    }
}

nlohmann::ordered_json to_json(const verdict_report& report)
{
    auto entry = [](const method_verdict& v) {
        nlohmann::ordered_json j;
        j["method"] = v.method;
        j["dt"] = v.dt;
        j["is_cptp"] = v.is_cptp;
        j["is_completely_positive"] = v.is_completely_positive;
        j["is_trace_preserving"] = v.is_trace_preserving;
        j["min_choi_eigenvalue"] = v.min_choi_eigenvalue;
        j["trace_preservation_residual"] = v.trace_preservation_residual;
        j["kraus_count"] = v.kraus_count;
        return j;
    };
    nlohmann::ordered_json j;
    j["schema"] = "lindprop.verdict/1";
    j["environment"] = {
        { "version", version_string },
        { "tolerances",
          { { "choi_relative", tolerances::choi },
            { "trace_preservation_per_level", tolerances::choi },
            { "kraus", tolerances::kraus } } },
    };
    j["scenario"] = report.scenario;
    j["dt"] = report.dt;
    j["methods"] = nlohmann::ordered_json::array();
    for (const auto& v : report.verdicts) {
        j["methods"].push_back(entry(v));
    }
    j["sweep"] = nlohmann::ordered_json::array();
    for (const auto& v : report.sweep) {
        j["sweep"].push_back(entry(v));
    }
    return j;
}

std::vector<convergence_row> cmd_compare(const run_config& config,
                                         std::span<const method_spec> methods)
{
    config.validate();
    const scenario sc = build_scenario(config.scenario);
    const density_matrix rho0 = config.initial_density();

    std::vector<real> dts;
    for (int halving = 0; halving < 4; halving++) {
        dts.push_back(config.dt / double(1 << halving));
    }
    auto steps_for = [&config](real h) {
        return static_cast<std::int64_t>(std::llround(config.t_end / h));
    };

    const method_spec me{ method_kind::me };
    const density_matrix reference =
        propagate(sc.context(dts.back()), me, rho0, steps_for(dts.back()));

    std::vector<convergence_row> rows;
    for (const auto& m : methods) {
        convergence_row row;
        row.method = display_name(m);
        row.dts = dts;
        for (real h : dts) {
            const density_matrix rho =
                propagate(sc.context(h), m, rho0, steps_for(h));
            row.errors.push_back((rho.matrix - reference.matrix).norm());
        }
        const bool fittable = std::all_of(row.errors.begin(), row.errors.end(),
                                          [](real e) { return e > 0.0; });
        row.fitted_order =
            fittable ? fit_loglog_slope(row.dts, row.errors) : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_convergence_table(std::ostream& out,
                             std::span<const convergence_row> rows)
{
    for (const auto& row : rows) {
        out << row.method << '\n';
        for (std::size_t i = 0; i < row.dts.size(); i++) {
            out << "  dt = " << std::setprecision(6) << std::setw(12)
                << row.dts[i] << "  error = " << std::setw(14)
                << row.errors[i] << '\n';
        }
        out << "  fitted order: " << std::setprecision(4) << row.fitted_order
            << '\n';
    }
}

std::vector<bench_row> cmd_bench(std::span<const int> levels, int steps,
                                 std::span<const method_spec> methods)
{
    if (steps < 1 || levels.size() < 2) {
        throw contract_violation("bench: need >= 1 step and >= 2 sizes");
    }
    using clock = std::chrono::steady_clock;
    constexpr int repeats = 3;

    std::vector<bench_row> rows;
    for (const auto& m : methods) {
        bench_row row;
        row.method = display_name(m);
        for (int n : levels) {
            ladder_spec spec;
            spec.n_levels = n;
            scenario sc = build_ladder_scenario(spec);
            const real e0 = spec.field;
            const real w = spec.omega0;
            sc.drive = interaction_drive::time_dependent(
                sc.drive->dipole, [e0, w](real t) { return e0 * std::cos(w * t); });
            const step_context ctx = sc.context(1e-16);

            density_matrix rho = ground_state(n);
            rho = step(ctx, m, rho, 0);
            real best = std::numeric_limits<real>::infinity();
            for (int r = 0; r < repeats; r++) {
                const auto start = clock::now();
                for (int s = 0; s < steps; s++) {
                    rho = step(ctx, m, rho, s + 1);
                }
                const std::chrono::duration<real> elapsed = clock::now() - start;
                best = std::min(best, elapsed.count() / steps);
            }
            row.levels.push_back(n);
            row.seconds_per_step.push_back(best);
        }
        std::vector<real> x(row.levels.begin(), row.levels.end());
        row.fitted_exponent = fit_loglog_slope(x, row.seconds_per_step);
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_bench_table(std::ostream& out, std::span<const bench_row> rows)
{
    for (const auto& row : rows) {
        out << row.method << '\n';
        for (std::size_t i = 0; i < row.levels.size(); i++) {
            out << "  N = " << std::setw(3) << row.levels[i]
                << "  seconds/step = " << std::setprecision(4)
                << row.seconds_per_step[i] << '\n';
        }
        out << "  fitted exponent: " << std::setprecision(3)
            << row.fitted_exponent << '\n';
    }
}

}
