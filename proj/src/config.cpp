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

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <lindprop/cptp.hpp>
#include <lindprop/errors.hpp>
#include <lindprop/tolerances.hpp>

namespace lindprop {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>> allowed_keys = {
    { "scenario",
      { "type", "n_levels", "omega0", "field", "dipole", "omega", "rabi",
        "hbar", "initial_state", "initial_matrix", "initial_matrix_imag" } },
    { "method", { "name", "taylor_order" } },
    { "run", { "dt", "t_end", "output_stride" } },
    { "output", { "csv", "report" } },
};

const std::set<std::string> ladder_only = { "n_levels", "omega0", "field" };
const std::set<std::string> two_level_only = { "omega", "rabi" };

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

class section_reader
{
public:
    section_reader(const pt::ptree* tree, std::string section)
        : m_tree(tree), m_section(std::move(section))
    {
    }

    std::optional<std::string> raw(const std::string& key) const
    {
        if (!m_tree) {
            return std::nullopt;
        }
        auto it = m_tree->find(key);
        if (it == m_tree->not_found()) {
            return std::nullopt;
        }
        return trim(it->second.data());
    }

    bool has(const std::string& key) const { return raw(key).has_value(); }

    std::string qualified(const std::string& key) const
    {
        return m_section + "." + key;
    }

    real number(const std::string& key, real fallback) const
    {
        auto text = raw(key);
        return text ? parse_real(*text, key) : fallback;
    }

    int integer(const std::string& key, int fallback) const
    {
        auto text = raw(key);
        if (!text) {
            return fallback;
        }
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(text->data(), text->data() + text->size(), value);
        if (ec != std::errc() || ptr != text->data() + text->size()) {
            throw config_error("invalid integer for '" + qualified(key) +
                               "': '" + *text + "'");
        }
        return value;
    }

    std::string word(const std::string& key, const std::string& fallback) const
    {
        return raw(key).value_or(fallback);
    }

    real parse_real(const std::string& text, const std::string& key) const
    {
        real value = 0.0;
        auto [ptr, ec] =
            std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size() ||
            !std::isfinite(value)) {
            throw config_error("invalid number for '" + qualified(key) +
                               "': '" + text + "'");
        }
        return value;
    }

    std::vector<real> numbers(const std::string& key) const
    {
        std::vector<real> out;
        auto text = raw(key);
        if (!text) {
            return out;
        }
        std::string cleaned = *text;
        for (char& ch : cleaned) {
            if (ch == ',') {
                ch = ' ';
            }
        }
        std::istringstream in(cleaned);
        std::string token;
        while (in >> token) {
            out.push_back(parse_real(token, key));
        }
        return out;
    }

private:
    const pt::ptree* m_tree;
    std::string m_section;
};

void check_keys(const pt::ptree& root)
{
    for (const auto& [name, section] : root) {
        auto allowed = allowed_keys.find(name);
        if (allowed == allowed_keys.end()) {
            if (section.empty()) {
                throw config_error("key '" + name +
                                   "' must appear inside a section");
            }
            throw config_error("unknown section '[" + name + "]'");
        }
        for (const auto& [key, value] : section) {
            if (!allowed->second.contains(key)) {
                throw config_error("unknown key '" + name + "." + key + "'");
            }
        }
    }
}

const pt::ptree* child(const pt::ptree& root, const std::string& name)
{
    auto it = root.find(name);
    return it == root.not_found() ? nullptr : &it->second;
}

}

void run_config::validate() const
{
    std::visit([](const auto& s) { s.validate(); }, scenario);
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw config_error("invalid value for 'run.dt': must be positive");
    }
    if (!(t_end > dt) || !std::isfinite(t_end)) {
        throw config_error(
            "invalid value for 'run.t_end': must be larger than run.dt");
    }
    if (output_stride < 1) {
        throw config_error(
            "invalid value for 'run.output_stride': must be >= 1");
    }
    if (method.taylor_order < 1) {
        throw config_error(
            "invalid value for 'method.taylor_order': must be >= 1");
    }
    if (initial_state == initial_state_kind::custom) {
        if (!initial_matrix) {
            throw config_error("'scenario.initial_matrix' is required when "
                               "initial_state = custom");
        }
        const Eigen::Index n = build_scenario(scenario).n_levels();
        if (initial_matrix->rows() != n || initial_matrix->cols() != n) {
            throw config_error("'scenario.initial_matrix' must have " +
                               std::to_string(n * n) + " entries");
        }
        const state_monitor m = monitor({ *initial_matrix });
        if (m.hermiticity_residual > tolerances::hermitian ||
            m.trace_deviation > tolerances::trace ||
            m.min_eigenvalue < -tolerances::psd) {
            throw config_error("'scenario.initial_matrix' is not a valid "
                               "density matrix (Hermitian, unit trace, PSD)");
        }
    }
}

std::int64_t run_config::n_steps() const
{
    return static_cast<std::int64_t>(std::llround(t_end / dt));
}

density_matrix run_config::initial_density() const
{
    if (initial_state == initial_state_kind::custom && initial_matrix) {
        return { *initial_matrix };
    }
    return ground_state(build_scenario(scenario).n_levels());
}

run_config parse_config(std::string_view text, std::string_view source)
{
    pt::ptree root;
    try {
        std::istringstream in{ std::string(text) };
        pt::ini_parser::read_ini(in, root);
    } catch (const pt::ini_parser_error& e) {
        throw config_error(std::string(source) + ":" +
                           std::to_string(e.line()) + ": " + e.message());
    }
    check_keys(root);

    const section_reader sc(child(root, "scenario"), "scenario");
    const section_reader me(child(root, "method"), "method");
    const section_reader run(child(root, "run"), "run");
    const section_reader out(child(root, "output"), "output");

    run_config cfg;

    const std::string type = sc.word("type", "ladder");
    if (type == "ladder") {
        for (const auto& key : two_level_only) {
            if (sc.has(key)) {
                throw config_error("key 'scenario." + key +
                                   "' does not apply to type = ladder");
            }
        }
        ladder_spec ladder;
        ladder.n_levels = sc.integer("n_levels", ladder.n_levels);
        ladder.omega0 = sc.number("omega0", ladder.omega0);
        ladder.field = sc.number("field", ladder.field);
        ladder.dipole = sc.number("dipole", ladder.dipole);
        ladder.hbar = sc.number("hbar", ladder.hbar);
        cfg.scenario = ladder;
    } else if (type == "two_level") {
        for (const auto& key : ladder_only) {
            if (sc.has(key)) {
                throw config_error("key 'scenario." + key +
                                   "' does not apply to type = two_level");
            }
        }
        two_level_spec two;
        two.omega = sc.number("omega", two.omega);
        two.rabi = sc.number("rabi", two.rabi);
        two.dipole = sc.number("dipole", two.dipole);
        two.hbar = sc.number("hbar", two.hbar);
        cfg.scenario = two;
    } else {
        throw config_error("invalid value for 'scenario.type': '" + type +
                           "' (expected ladder or two_level)");
    }

    const std::string initial = sc.word("initial_state", "ground");
    if (initial == "ground") {
        cfg.initial_state = initial_state_kind::ground;
    } else if (initial == "custom") {
        cfg.initial_state = initial_state_kind::custom;
    } else {
        throw config_error("invalid value for 'scenario.initial_state': '" +
                           initial + "' (expected ground or custom)");
    }
    if (sc.has("initial_matrix")) {
        const std::vector<real> re = sc.numbers("initial_matrix");
        std::vector<real> im = sc.numbers("initial_matrix_imag");
        const auto n = static_cast<Eigen::Index>(
            std::llround(std::sqrt(double(re.size()))));
        if (n * n != static_cast<Eigen::Index>(re.size()) || n == 0) {
            throw config_error("'scenario.initial_matrix' must list N*N "
                               "entries in row-major order");
        }
        if (!im.empty() && im.size() != re.size()) {
            throw config_error("'scenario.initial_matrix_imag' must have as "
                               "many entries as initial_matrix");
        }
        im.resize(re.size(), 0.0);
        complex_matrix m(n, n);
        for (Eigen::Index r = 0; r < n; r++) {
            for (Eigen::Index c = 0; c < n; c++) {
                m(r, c) = complex(re[r * n + c], im[r * n + c]);
            }
        }
        cfg.initial_matrix = m;
    } else if (sc.has("initial_matrix_imag")) {
        throw config_error(
            "'scenario.initial_matrix_imag' given without initial_matrix");
    }

    const std::string method_name = me.word("name", "me");
    const int order = me.integer("taylor_order", 2);
    try {
        cfg.method = method_spec::parse(method_name, std::max(order, 1));
    } catch (const contract_violation&) {
        throw config_error("invalid value for 'method.name': '" + method_name +
                           "'");
    }
    cfg.method.taylor_order = order;

    cfg.dt = run.number("dt", cfg.dt);
    cfg.t_end = run.number("t_end", cfg.t_end);
    cfg.output_stride = run.integer("output_stride", cfg.output_stride);

    if (auto csv = out.raw("csv")) {
        cfg.csv_path = *csv;
    }
    if (auto report = out.raw("report")) {
        cfg.report_path = *report;
    }

    cfg.validate();
    return cfg;
}

run_config load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open configuration file '" + path.string() +
                       "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path.string());
}

}
