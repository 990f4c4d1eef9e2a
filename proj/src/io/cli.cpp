/*
 * Copyright (C) 2026 The epiqubo authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "epiqubo/io/cli.hpp"
#include "epiqubo/core/errors.hpp"
#include "epiqubo/io/csv.hpp"
#include "epiqubo/io/network_files.hpp"
#include "epiqubo/io/report.hpp"
#include "epiqubo/io/scenario.hpp"
#include "epiqubo/io/synthetic.hpp"
#include "epiqubo/qubo/qubo_format.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <sstream>

namespace epiqubo
{

namespace
{

namespace fs = std::filesystem;

/// Scenario keys collected from flags, applied over an optional --config file.
struct ScenarioFlags {
    std::optional<std::string> config;
    std::map<std::string, std::string> values;

    void add_to(CLI::App& cmd)
    {
        cmd.add_option("--config", config, "Scenario file (key = value); flags override it");
        auto key = [&](const std::string& flag, const std::string& name, const std::string& help) {
            return cmd.add_option_function<std::string>(
                flag, [this, name](const std::string& v) { values[name] = v; }, help);
        };
        key("--network", "network", "Edges CSV (from,to,weight)");
        key("--population", "population", "Population CSV (location,name,population)");
        key("--cases", "cases", "Initial cases CSV (location,infected[,removed])");
        key("--synthetic", "synthetic", "Synthetic profile instead of files: ring, complete or gravity");
        key("--size", "synthetic_size", "Locations in the synthetic network");
        key("--synthetic-seed", "synthetic_seed", "Seed of the synthetic network and initial cases");
        key("--infected-fraction", "infected_fraction", "Initial infected share when no cases file is given");
        key("--model", "model", "sis or sir");
        auto* lambda = key("--lambda", "lambda", "Infection rate per step");
        auto* r0     = key("--r0", "r0", "Basic reproduction number; calibrates lambda from mu");
        r0->excludes(lambda);
        key("--mu", "mu", "Recovery rate per step");
        key("--gamma", "gamma", "Cost per isolated person");
        key("--steps", "steps", "Time steps");
        key("--solver", "solver", "exhaustive, sa, tabu or ga");
        key("--builder,--method", "builder", "QUBO builder: analytic or numeric");
        key("--seed", "seed", "Base solver seed");
        key("--budget", "budget", "Evaluation budget per solve");
        key("--restarts", "restarts", "Independent solver restarts");
        key("--threads", "threads", "Threads for restarts");
        cmd.add_flag_callback("--force", [this] { values["force"] = "true"; },
                              "Run above the invariance bound, clamping states into [0, n]");
    }

    ScenarioConfig resolve() const
    {
        ScenarioConfig c = config ? load_scenario(*config) : ScenarioConfig{};
        if (values.contains("lambda")) {
            c.r0.reset();
        }
        if (values.contains("r0")) {
            c.lambda.reset();
        }
        if (values.contains("synthetic")) {
            c.network.reset();
            c.population.reset();
            c.cases.reset();
        }
        if (values.contains("network")) {
            c.synthetic.reset();
        }
        const auto cwd = fs::current_path();
        for (const auto& [key, value] : values) {
            set_scenario_key(c, key, value, cwd);
        }
        return c;
    }
};

void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out)
{
    if (path) {
        write_text_file(*path, text);
    }
    else {
        out << text;
    }
}

ControlVector parse_isolation(const std::string& list, std::size_t size)
{
    ControlVector u(size);
    std::stringstream stream(list);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) {
            continue;
        }
        std::size_t index = 0;
        try {
            std::size_t used = 0;
            index            = std::stoul(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
        }
        catch (const std::exception&) {
            throw ValidationError("--isolate: bad location index '" + token + "'");
        }
        if (index >= size) {
            throw ValidationError("--isolate: location " + token + " out of range");
        }
        u.set(index, true);
    }
    return u;
}

/// Invariance and parameter checks shared by commands that only simulate.
void check_simulation(const Scenario& s)
{
    auto probe        = s;
    probe.total_steps = 1;
    probe.solver      = SolverKind::simulated_annealing;
    validate_scenario(probe);
}

int run_batch(const std::vector<std::string>& files, const fs::path& directory, std::ostream& err)
{
    fs::create_directories(directory);
    struct Outcome {
        int code;
        std::string message;
    };
    std::vector<std::future<Outcome>> jobs;
    for (const auto& file : files) {
        jobs.push_back(std::async(std::launch::async, [file, directory]() -> Outcome {
            try {
                const auto run  = run_scenario(load_scenario(file));
                const auto stem = fs::path(file).stem().string();
                write_text_file(directory / (stem + ".json"), run_report_json(run));
                write_text_file(directory / (stem + ".csv"), run_report_csv(run));
                return {0, {}};
            }
            catch (const ValidationError& e) {
                return {1, file + ": " + e.what()};
            }
            catch (const std::exception& e) {
                return {2, file + ": " + e.what()};
            }
        }));
    }
    int code = 0;
    for (auto& job : jobs) {
        const auto outcome = job.get();
        if (outcome.code != 0) {
            err << "error: " << outcome.message << "\n";
        }
        code = std::max(code, outcome.code);
    }
    return code;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Mobility-ban control of network epidemics via QUBO", "epiqubo"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::function<void()> action;
    std::optional<std::string> out_path;

    ScenarioFlags flags;
    std::optional<std::string> isolate;
    auto* simulate_cmd = app.add_subcommand("simulate", "Simulate the dynamics under a constant control");
    flags.add_to(*simulate_cmd);
    simulate_cmd->add_option("--isolate", isolate, "Comma-separated locations isolated at every step");
    simulate_cmd->add_option("--out", out_path, "Trajectory CSV (default: standard output)");
    simulate_cmd->callback([&] {
        action = [&] {
            const auto config = flags.resolve();
            const auto r      = resolve_scenario(config);
            check_simulation(r.scenario);
            const auto& s = r.scenario;
            const auto u  = isolate ? parse_isolation(*isolate, s.network.size()) : ControlVector(s.network.size());
            const auto traj = simulate(s.network, s.params, r.initial, u, s.total_steps, SimulationOptions{s.force});
            for (const auto& c : traj.clamps) {
                err << "clamped " << c.compartment << " at step " << c.step << ", location " << c.location << ": "
                    << format_decimal(c.raw_value) << " -> " << format_decimal(c.clamped_value) << "\n";
            }
            emit(out_path, trajectory_csv(traj), out);
        };
    });

    auto* build_cmd = app.add_subcommand("build-qubo", "Compile the two-step window at the initial state");
    flags.add_to(*build_cmd);
    build_cmd->add_option("--out", out_path, "QUBO text file (default: standard output)");
    build_cmd->callback([&] {
        action = [&] {
            const auto r = resolve_scenario(flags.resolve());
            check_simulation(r.scenario);
            const auto& s = r.scenario;
            emit(out_path, export_qubo(build_qubo(s.builder, s.network, s.params, r.initial, s.gamma)), out);
        };
    });

    std::string qubo_path;
    std::string solver_name = "sa";
    SolverConfig solver_config;
    auto* solve_cmd = app.add_subcommand("solve", "Minimize a QUBO file");
    solve_cmd->add_option("qubo", qubo_path, "QUBO text file")->required();
    solve_cmd->add_option("--solver", solver_name, "exhaustive, sa, tabu or ga");
    solve_cmd->add_option("--seed", solver_config.seed, "Solver seed");
    solve_cmd->add_option("--budget", solver_config.budget, "Evaluation budget");
    solve_cmd->add_option("--restarts", solver_config.restarts, "Independent restarts");
    solve_cmd->add_option("--threads", solver_config.threads, "Threads for restarts");
    solve_cmd->add_option("--out", out_path, "Result JSON (default: standard output)");
    solve_cmd->callback([&] {
        action = [&] {
            const auto q = import_qubo(read_text_file(qubo_path), qubo_path);
            emit(out_path, solve_result_json(solve(q, parse_solver_kind(solver_name), solver_config)), out);
        };
    });

    std::optional<std::string> csv_path;
    auto* control_cmd = app.add_subcommand("control", "Run the rolling-horizon controller");
    flags.add_to(*control_cmd);
    control_cmd->add_option("--out", out_path, "Run report JSON (default: standard output)");
    control_cmd->add_option("--csv", csv_path, "Per-step CSV report");
    control_cmd->callback([&] {
        action = [&] {
            const auto run = run_scenario(flags.resolve());
            for (const auto& c : run.log.trajectory.clamps) {
                err << "clamped " << c.compartment << " at step " << c.step << ", location " << c.location << "\n";
            }
            emit(out_path, run_report_json(run), out);
            if (csv_path) {
                write_text_file(*csv_path, run_report_csv(run));
            }
        };
    });

    auto* baseline_cmd = app.add_subcommand("baseline", "Simulate without any isolation");
    flags.add_to(*baseline_cmd);
    baseline_cmd->add_option("--out", out_path, "Trajectory CSV (default: standard output)");
    baseline_cmd->callback([&] {
        action = [&] {
            const auto r = resolve_scenario(flags.resolve());
            emit(out_path, trajectory_csv(run_uncontrolled_baseline(r.scenario, r.initial)), out);
        };
    });

    std::string controlled_path;
    std::string baseline_path;
    auto* metrics_cmd = app.add_subcommand("metrics", "Compare a controlled and a baseline trajectory");
    metrics_cmd->add_option("--controlled", controlled_path, "Controlled trajectory CSV")->required();
    metrics_cmd->add_option("--baseline", baseline_path, "Baseline trajectory CSV")->required();
    metrics_cmd->add_option("--out", out_path, "Metrics JSON (default: standard output)");
    metrics_cmd->callback([&] {
        action = [&] {
            const auto controlled = parse_trajectory_csv(read_text_file(controlled_path), controlled_path);
            const auto baseline   = parse_trajectory_csv(read_text_file(baseline_path), baseline_path);
            emit(out_path, metrics_json(compute_metrics(controlled, baseline)), out);
        };
    });

    std::string profile = "gravity";
    std::size_t size    = 0;
    std::uint64_t seed  = 0;
    std::string model   = "sis";
    double fraction     = 0.001;
    std::string directory;
    auto* generate_cmd = app.add_subcommand("generate", "Write a seeded synthetic network as CSV files");
    generate_cmd->add_option("--profile", profile, "ring, complete or gravity");
    generate_cmd->add_option("--size", size, "Number of locations")->required();
    generate_cmd->add_option("--seed", seed, "Generator seed");
    generate_cmd->add_option("--model", model, "sis or sir (layout of cases.csv)");
    generate_cmd->add_option("--infected-fraction", fraction, "Initial infected share");
    generate_cmd->add_option("--out", directory, "Output directory")->required();
    generate_cmd->callback([&] {
        action = [&] {
            const auto net = generate_synthetic(size, parse_synthetic_profile(profile), seed);
            export_network(directory, net, synthetic_cases(net, parse_model_kind(model), fraction, seed));
        };
    });

    auto* export_cmd = app.add_subcommand("export-network", "Write the scenario's network and initial state as CSV");
    flags.add_to(*export_cmd);
    export_cmd->add_option("--out", directory, "Output directory")->required();
    export_cmd->callback([&] {
        action = [&] {
            const auto r = resolve_scenario(flags.resolve());
            export_network(directory, r.scenario.network, r.initial);
        };
    });

    std::vector<std::string> scenario_files;
    auto* batch_cmd = app.add_subcommand("batch", "Run several scenario files concurrently");
    batch_cmd->add_option("scenarios", scenario_files, "Scenario files")->required();
    batch_cmd->add_option("--out", directory, "Directory for <name>.json and <name>.csv reports")->required();
    int batch_code = 0;
    batch_cmd->callback([&] {
        action = [&] { batch_code = run_batch(scenario_files, directory, err); };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        action();
    }
    catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return batch_code;
}

} // namespace epiqubo
