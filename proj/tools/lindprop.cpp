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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lindprop/commands.hpp>
#include <lindprop/errors.hpp>

namespace {

using namespace lindprop;

enum exit_code : int
{
    exit_ok = 0,
    exit_config = 2,
    exit_numerical = 3,
    exit_io = 4
};

struct common_options
{
    std::string config;
    std::string out;
    std::string method;
    int taylor_order = 0;
    std::optional<double> dt;
    std::optional<double> t_end;
};

void add_common(CLI::App* cmd, common_options& opts)
{
    cmd->add_option("--config", opts.config, "Configuration file");
    cmd->add_option("--method", opts.method,
                    "me, strang_cayley, strang_taylor, rk4 or pc");
    cmd->add_option("--taylor-order", opts.taylor_order,
                    "Truncation order for strang_taylor");
    cmd->add_option("--dt", opts.dt, "Time step in seconds");
    cmd->add_option("--t-end", opts.t_end, "End time in seconds");
}

run_config resolve_config(const common_options& opts)
{
    run_config cfg = opts.config.empty() ? parse_config("")
                                         : load_config(opts.config);
    if (opts.taylor_order > 0) {
        cfg.method.taylor_order = opts.taylor_order;
    }
    if (!opts.method.empty()) {
        try {
            cfg.method = method_spec::parse(opts.method, cfg.method.taylor_order);
        } catch (const contract_violation& e) {
            throw config_error(e.what());
        }
    }
    if (opts.dt) {
        cfg.dt = *opts.dt;
    }
    if (opts.t_end) {
        cfg.t_end = *opts.t_end;
    }
    cfg.validate();
    return cfg;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot open output file '" + path + "'");
    }
    return out;
}

int cmd_run(const common_options& opts)
{
    run_config cfg = resolve_config(opts);
    if (!opts.out.empty()) {
        cfg.csv_path = opts.out;
    }
    const run_result result = run_simulation(cfg);
    if (cfg.csv_path) {
        std::ofstream out = open_output(cfg.csv_path->string());
        write_csv(out, result);
        if (!out) {
            throw io_error("failed writing '" + cfg.csv_path->string() + "'");
        }
    } else {
        write_csv(std::cout, result);
    }
    std::cerr << run_summary(result) << '\n';
    return exit_ok;
}

int cmd_verify_main(const common_options& opts)
{
    run_config cfg = resolve_config(opts);
    if (!opts.out.empty()) {
        cfg.report_path = opts.out;
    }
    const verdict_report report = cmd_verify(cfg);
    print_verdict_table(std::cout, report);
    if (cfg.report_path) {
        std::ofstream out = open_output(cfg.report_path->string());
        out << to_json(report).dump(2) << '\n';
        if (!out) {
            throw io_error("failed writing '" + cfg.report_path->string() +
                           "'");
        }
    }
    return exit_ok;
}

std::vector<method_spec> parse_methods(const std::vector<std::string>& names,
                                       int taylor_order)
{
    std::vector<method_spec> methods;
    for (const auto& name : names) {
        try {
            methods.push_back(method_spec::parse(name, taylor_order));
        } catch (const contract_violation& e) {
            throw config_error(e.what());
        }
    }
    return methods;
}

int cmd_compare_main(const common_options& opts,
                     const std::vector<std::string>& names)
{
    const run_config cfg = resolve_config(opts);
    const auto methods = parse_methods(names, cfg.method.taylor_order);
    const auto rows = cmd_compare(cfg, methods);
    print_convergence_table(std::cout, rows);
    return exit_ok;
}

int cmd_bench_main(const std::vector<int>& levels, int steps,
                   const std::vector<std::string>& names)
{
    const auto methods = parse_methods(names, 2);
    const auto rows = cmd_bench(levels, steps, methods);
    print_bench_table(std::cout, rows);
    return exit_ok;
}

}

int main(int argc, char** argv)
{
    CLI::App app{ "Density-matrix propagation and CPTP certification" };
    app.set_version_flag("--version", std::string("lindprop ") + version_string);
    app.require_subcommand(1);

    common_options run_opts, verify_opts, compare_opts;

    auto* run = app.add_subcommand("run", "Propagate a scenario, write CSV");
    add_common(run, run_opts);
    run->add_option("--out", run_opts.out, "CSV output path (default stdout)");

    auto* verify = app.add_subcommand("verify",
                                      "Certify every method's update map");
    add_common(verify, verify_opts);
    verify->add_option("--out", verify_opts.out, "JSON report path");

    std::vector<std::string> compare_methods = { "strang_cayley", "rk4", "pc" };
    auto* compare = app.add_subcommand("compare",
                                       "Convergence order against ME");
    add_common(compare, compare_opts);
    compare->add_option("--methods", compare_methods, "Methods to compare")
        ->delimiter(',');

    std::vector<int> bench_levels = { 2, 3, 4, 6, 8, 10, 12 };
    int bench_steps = 5;
    std::vector<std::string> bench_methods = { "me", "rk4", "pc",
                                               "strang_cayley" };
    auto* bench = app.add_subcommand("bench", "Per-step cost versus levels");
    bench->add_option("--levels", bench_levels, "Level counts")
        ->delimiter(',');
    bench->add_option("--steps", bench_steps, "Timed steps per size");
    bench->add_option("--methods", bench_methods, "Methods to time")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (*run) {
            return cmd_run(run_opts);
        }
        if (*verify) {
            return cmd_verify_main(verify_opts);
        }
        if (*compare) {
            return cmd_compare_main(compare_opts, compare_methods);
        }
        if (*bench) {
            return cmd_bench_main(bench_levels, bench_steps, bench_methods);
        }
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const contract_violation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const numerical_failure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    } catch (const io_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return exit_io;
    }
    return exit_ok;
}
