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
#include "epiqubo/core/errors.hpp"
#include "epiqubo/core/spectral.hpp"
#include "epiqubo/io/cli.hpp"
#include "epiqubo/io/csv.hpp"
#include "epiqubo/io/network_files.hpp"
#include "epiqubo/io/report.hpp"
#include "epiqubo/io/scenario.hpp"
#include "epiqubo/io/synthetic.hpp"
#include "epiqubo/qubo/builders.hpp"

#include <doctest.h>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <sstream>

using namespace epiqubo;
namespace fs = std::filesystem;

namespace
{

struct TempDir {
    fs::path path;

    TempDir()
    {
        static std::atomic<int> counter{0};
        path = fs::temp_directory_path() / ("epiqubo_io_test_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }

    ~TempDir()
    {
        std::error_code ec;
        fs::remove_all(path, ec);
    }

    fs::path write(const std::string& name, const std::string& text) const
    {
        write_text_file(path / name, text);
        return path / name;
    }
};

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string error_of(auto&& action)
{
    try {
        action();
    }
    catch (const ValidationError& e) {
        return e.what();
    }
    return {};
}

const char* pair_edges = "from,to,weight\n0,1,0.5\n1,0,0.5\n";
const char* pair_population = "location,name,population\n0,north,100\n1,south,100\n";

} // namespace

TEST_CASE("csv splitting")
{
    CHECK(split_csv_line(R"(a,"b,c","say ""hi""",)", "t", 1) == std::vector<std::string>{"a", "b,c", "say \"hi\"", ""});
    const auto table = parse_csv("\xEF\xBB\xBFx, y\r\n1,2\r\n\n3,4\n", "t");
    CHECK(table.header == std::vector<std::string>{"x", "y"});
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[1].line == 4);
    CHECK(table.column("y") == 1);
    CHECK_THROWS_AS(parse_csv("x,y\n1\n", "t"), ParseError);
    CHECK_THROWS_AS(parse_csv("", "t"), ParseError);
    CHECK_THROWS_AS(split_csv_line("\"open", "t", 1), ParseError);
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("plain") == "plain");
}

TEST_CASE("network ingestion")
{
    const auto one_edge = parse_network("from,to,weight\n0,1,0.5\n", "location,name,population\n0,,100\n1,,100\n");
    CHECK(one_edge.weights() == SquareMatrix::from_rows({{0, 0.5}, {0, 0}}));
    CHECK(one_edge.names().empty());

    const auto named = parse_network("from,to,weight\nsouth,north,0.25\n", pair_population);
    CHECK(named.weight(1, 0) == 0.25);
    CHECK(named.name(0) == "north");

    const auto empty = parse_network("from,to,weight\n", pair_population);
    CHECK(empty.weights() == SquareMatrix(2));

    const auto ids = parse_network("from,to,weight\nRM,MI,0.1\n", "location,name,population\nMI,Milano,10\nRM,Roma,20\n");
    CHECK(ids.weight(1, 0) == 0.1);

    CHECK(error_of([] { parse_network("from,to,weight\n0,7,0.5\n", pair_population); }).find("unknown location") !=
          std::string::npos);
    CHECK(error_of([] { parse_network("from,to,weight\n0,1,0.5\n0,1,0.2\n", pair_population); })
              .find("duplicate edge") != std::string::npos);
    CHECK(error_of([] { parse_network("from,to,weight\n0,1,-0.5\n", pair_population); }).find("negative weight") !=
          std::string::npos);
    CHECK(error_of([] { parse_network("from,to,weight\n1,1,0.5\n", pair_population); }).find("diagonal") !=
          std::string::npos);
    CHECK(error_of([] { parse_network("from,to,weight\n", "location,name,population\n0,a,-3\n"); })
              .find("population must be positive") != std::string::npos);
    CHECK(error_of([] { parse_network("from,to,weight\n", "location,name,population\n0,a,3\n0,b,4\n"); })
              .find("duplicate location") != std::string::npos);
    CHECK(error_of([] { parse_network("src,dst,weight\n", pair_population); }).find("missing column") !=
          std::string::npos);
}

TEST_CASE("case ingestion")
{
    const LocationNetwork net({5, 100}, SquareMatrix(2));
    CHECK(error_of([&] { parse_cases("location,infected\n0,10\n", net, ModelKind::SIS); }) ==
          "cases exceed population at location 0");

    const auto sir = parse_cases("location,infected\n1,4\n", net, ModelKind::SIR);
    CHECK(sir.infected == std::vector<double>{0, 4});
    CHECK(*sir.removed == std::vector<double>{0, 0});

    const auto with_removed = parse_cases("location,infected,removed\n0,1,2\n", net, ModelKind::SIR);
    CHECK(*with_removed.removed == std::vector<double>{2, 0});
    CHECK_THROWS_AS(parse_cases("location,infected,removed\n0,1,2\n", net, ModelKind::SIS), ParseError);
    CHECK_THROWS_AS(parse_cases("location,infected\n0,1\n0,2\n", net, ModelKind::SIS), ParseError);

    TempDir dir;
    const auto loaded = load_network({dir.write("e.csv", "from,to,weight\nRM,MI,0.1\n"),
                                      dir.write("p.csv", "location,name,population\nMI,Milano,10\nRM,Roma,20\n"),
                                      dir.write("c.csv", "location,infected\nRoma,3\nMI,1\n")},
                                     ModelKind::SIS);
    CHECK(loaded.initial->infected == std::vector<double>{1, 3});
    CHECK_THROWS_AS(load_network({dir.path / "missing.csv", dir.path / "p.csv", std::nullopt}, ModelKind::SIS),
                    ValidationError);
}

TEST_CASE("export and re-import are exact")
{
    for (auto profile : {SyntheticProfile::ring, SyntheticProfile::complete, SyntheticProfile::gravity}) {
        const auto net     = generate_synthetic(9, profile, 5);
        const auto initial = synthetic_cases(net, ModelKind::SIR, 0.3, 5);
        TempDir dir;
        export_network(dir.path, net, initial);
        const auto back = load_network({dir.path / "edges.csv", dir.path / "population.csv", dir.path / "cases.csv"},
                                       ModelKind::SIR);
        CHECK(back.network == net);
        CHECK(*back.initial == initial);
    }
    const auto named = parse_network("from,to,weight\n0,1,0.1\n", "location,name,population\n0,\"a, b\",1.5\n1,c,2\n");
    CHECK(parse_network(edges_csv(named), population_csv(named)) == named);

    const auto traj = simulate(named, {ModelKind::SIR, 0.1, 0.2}, EpidemicState{{1, 0}, std::vector<double>{0, 0}},
                               ControlVector(2), 3);
    CHECK(parse_trajectory_csv(trajectory_csv(traj)).states == traj.states);
}

TEST_CASE("synthetic networks")
{
    CHECK(generate_synthetic(1, SyntheticProfile::gravity, 1).weights() == SquareMatrix(1));
    const auto complete = generate_synthetic(3, SyntheticProfile::complete, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(complete.weight(i, i) == 0.0);
        for (std::size_t j = 0; j < 3; ++j) {
            if (i != j) {
                CHECK(complete.weight(i, j) == complete.weight(0, 1));
            }
        }
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto g = generate_synthetic(21, SyntheticProfile::gravity, seed);
        CHECK(g == generate_synthetic(21, SyntheticProfile::gravity, seed));
        CHECK(validate_network(g).ok());
        double largest = 0.0;
        for (std::size_t i = 0; i < 21; ++i) {
            CHECK(g.weight(i, i) == 0.0);
            CHECK(g.population(i) >= 5e4);
            CHECK(g.population(i) <= 5e6);
            for (std::size_t j = 0; j < 21; ++j) {
                largest = std::max(largest, g.weight(i, j));
            }
        }
        CHECK(largest == doctest::Approx(0.5).epsilon(1e-15));
    }
    CHECK_FALSE(generate_synthetic(21, SyntheticProfile::gravity, 1) == generate_synthetic(21, SyntheticProfile::gravity, 2));
    CHECK_THROWS_AS(generate_synthetic(0, SyntheticProfile::ring, 1), ValidationError);
    CHECK_THROWS_AS(parse_synthetic_profile("star"), ValidationError);
}

TEST_CASE("scenario documents")
{
    const auto config = parse_scenario("# demo\nsynthetic = gravity\nsynthetic_size = 6\nmodel = sir\nr0 = 2.5\n"
                                       "mu = 0.2\ngamma = 1e-4\nsteps = 4\nsolver = tabu\nsa_cooling = 0.9\n");
    CHECK(config.model == ModelKind::SIR);
    CHECK(config.r0 == 2.5);
    CHECK(config.solver == SolverKind::tabu);
    CHECK(config.solver_config.annealing.cooling == 0.9);
    CHECK(parse_scenario(format_scenario(config)) == config);

    CHECK_THROWS_AS(parse_scenario("colour = blue\n"), ParseError);
    CHECK_THROWS_AS(parse_scenario("mu = 0.1\nmu = 0.2\n"), ParseError);
    CHECK_THROWS_AS(parse_scenario("steps = -3\n"), ParseError);
    CHECK_THROWS_AS(parse_scenario("just text\n"), ParseError);

    const auto relative = parse_scenario("network = data/e.csv\n", "s", "/base");
    CHECK(*relative.network == fs::path("/base/data/e.csv"));

    auto both = config;
    both.lambda = 0.1;
    CHECK_THROWS_AS(check_scenario(both), ValidationError);
    auto none = config;
    none.r0.reset();
    CHECK_THROWS_AS(check_scenario(none), ValidationError);
    auto no_network = config;
    no_network.synthetic.reset();
    CHECK_THROWS_AS(check_scenario(no_network), ValidationError);

    const auto resolved = resolve_scenario(config);
    CHECK(resolved.scenario.network.size() == 6);
    CHECK(resolved.scenario.params.lambda ==
          doctest::Approx(infection_rate_from_r0(2.5, 0.2, resolved.scenario.network)).epsilon(1e-15));
    CHECK(resolved.initial.removed.has_value());
}

TEST_CASE("run reports are deterministic and reproducible from their echo")
{
    const auto config = parse_scenario("synthetic = gravity\nsynthetic_size = 8\nsynthetic_seed = 3\nmodel = sis\n"
                                       "infected_fraction = 0.05\nr0 = 1.5\nmu = 0.05\ngamma = 2e-5\nsteps = 6\n"
                                       "solver = sa\nrestarts = 2\nthreads = 2\n");
    auto strip = [](const std::string& text) {
        auto doc = nlohmann::ordered_json::parse(text);
        doc.erase("timing");
        return doc;
    };
    const auto first  = run_scenario(config);
    const auto report = run_report_json(first);
    CHECK(strip(report) == strip(run_report_json(run_scenario(config))));
    CHECK(strip(report).dump() == strip(run_report_json(run_scenario(config))).dump());

    const auto doc = nlohmann::ordered_json::parse(report);
    std::string echo;
    for (const auto& [key, value] : doc["scenario"].items()) {
        echo += key + " = " + value.get<std::string>() + "\n";
    }
    const auto again = run_scenario(parse_scenario(echo));
    CHECK(strip(metrics_json(again.metrics)) == strip(metrics_json(first.metrics)));
    CHECK(again.metrics.peak_controlled == first.metrics.peak_controlled);
    CHECK(again.metrics.average_controlled == first.metrics.average_controlled);

    const auto& net = first.resolved.scenario.network;
    for (const auto& row : doc["infected"]) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const double x = row[i].get<double>();
            CHECK(std::isfinite(x));
            CHECK(x >= 0.0);
            CHECK(x <= net.population(i));
        }
    }
    CHECK(doc["steps"].size() == 6);
    CHECK(doc["timing"]["solves"] == 6);

    const auto csv = parse_csv(run_report_csv(first), "report");
    CHECK(csv.header.size() == 4 + 8);
    CHECK(csv.rows.size() == 7);
    CHECK(csv.rows.back().fields[3].empty());
}

TEST_CASE("cli: simulate, build, solve")
{
    TempDir dir;
    const auto edges = dir.write("edges.csv", pair_edges).string();
    const auto pop   = dir.write("population.csv", pair_population).string();
    const auto cases = dir.write("cases.csv", "location,infected\n0,10\n").string();
    const std::vector<std::string> files{"--network", edges, "--population", pop, "--cases", cases};
    auto with = [&](std::vector<std::string> head, std::vector<std::string> tail) {
        head.insert(head.end(), files.begin(), files.end());
        head.insert(head.end(), tail.begin(), tail.end());
        return head;
    };

    auto r = cli(with({"simulate"}, {"--model", "sis", "--lambda", "0.2", "--mu", "0.1", "--steps", "0"}));
    CHECK(r.code == 0);
    CHECK(r.out == "t,total_infected,x_0,x_1\n0,10,10,0\n");

    r = cli(with({"simulate"}, {"--lambda", "0.2", "--mu", "0.1", "--steps", "1"}));
    CHECK(r.code == 0);
    const auto traj = parse_trajectory_csv(r.out);
    CHECK(traj.states[1].infected[0] == doctest::Approx(10.8).epsilon(1e-14));

    const auto qubo = (dir.path / "window.qubo").string();
    r = cli(with({"build-qubo", "--method", "numeric"}, {"--lambda", "0.2", "--mu", "0.1", "--gamma", "0.01", "--out", qubo}));
    CHECK(r.code == 0);
    r = cli({"solve", qubo, "--solver", "exhaustive"});
    REQUIRE(r.code == 0);
    const auto solved = nlohmann::json::parse(r.out);
    const auto best   = solve_bruteforce_problem1(parse_network(pair_edges, pair_population),
                                                  {ModelKind::SIS, 0.2, 0.1}, EpidemicState{{10, 0}, std::nullopt}, 0.01);
    CHECK(solved["u"] == best.to_string());
    CHECK(solved.contains("timing"));

    r = cli(with({"simulate"}, {"--lambda", "0.2", "--r0", "2", "--mu", "0.1"}));
    CHECK(r.code == 1);
    r = cli(with({"simulate"}, {"--lambda", "0.9", "--mu", "0.1"}));
    CHECK(r.code == 1);
    CHECK(r.err.find("invariance bound") != std::string::npos);
    r = cli(with({"simulate"}, {"--lambda", "0.9", "--mu", "0.1", "--force", "--steps", "3"}));
    CHECK(r.code == 0);
    r = cli(with({"simulate"}, {"--lambda", "0.2", "--mu", "0.1", "--isolate", "0,1", "--steps", "4"}));
    CHECK(r.code == 0);
    CHECK(parse_trajectory_csv(r.out).states.back().infected[1] == 0.0);
    r = cli({"solve", (dir.path / "nope.qubo").string()});
    CHECK(r.code == 1);
}

TEST_CASE("cli: usage errors")
{
    auto r = cli({"simulate", "--bogus"});
    CHECK(r.code == 1);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(r.out.empty());
    CHECK(cli({}).code == 1);
    CHECK(cli({"teleport"}).code == 1);
    r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("control") != std::string::npos);
}

TEST_CASE("cli: control, baseline, metrics, generate, export, batch")
{
    TempDir dir;
    auto r = cli({"generate", "--profile", "gravity", "--size", "7", "--seed", "4", "--model", "sir",
                  "--infected-fraction", "0.02", "--out", (dir.path / "net").string()});
    REQUIRE(r.code == 0);
    const std::string net = (dir.path / "net").string();
    const std::vector<std::string> files{"--network", net + "/edges.csv", "--population", net + "/population.csv",
                                         "--cases", net + "/cases.csv", "--model", "sir", "--r0", "1.2",
                                         "--mu", "0.01", "--steps", "5"};
    auto with = [&](std::vector<std::string> head, std::vector<std::string> tail) {
        head.insert(head.end(), files.begin(), files.end());
        head.insert(head.end(), tail.begin(), tail.end());
        return head;
    };

    r = cli(with({"control"}, {"--gamma", "1e-5", "--solver", "tabu", "--out", (dir.path / "a.json").string(),
                               "--csv", (dir.path / "a.csv").string()}));
    REQUIRE(r.code == 0);
    r = cli(with({"control"}, {"--gamma", "1e-5", "--solver", "tabu", "--out", (dir.path / "b.json").string()}));
    REQUIRE(r.code == 0);
    auto a = nlohmann::ordered_json::parse(read_text_file(dir.path / "a.json"));
    auto b = nlohmann::ordered_json::parse(read_text_file(dir.path / "b.json"));
    a.erase("timing");
    b.erase("timing");
    CHECK(a.dump() == b.dump());

    const auto baseline = (dir.path / "base.csv").string();
    REQUIRE(cli(with({"baseline"}, {"--out", baseline})).code == 0);
    r = cli({"metrics", "--controlled", baseline, "--baseline", baseline});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["p"] == 0.0);

    const auto exported = (dir.path / "copy").string();
    REQUIRE(cli(with({"export-network"}, {"--out", exported})).code == 0);
    CHECK(read_text_file(dir.path / "copy" / "edges.csv") == read_text_file(dir.path / "net" / "edges.csv"));

    const auto s1 = dir.write("one.scn", "synthetic = ring\nsynthetic_size = 5\nlambda = 0.1\nmu = 0.2\nsteps = 3\n");
    const auto s2 = dir.write("two.scn", "synthetic = complete\nsynthetic_size = 4\nr0 = 1.1\nmu = 0.3\nsteps = 2\n");
    r = cli({"batch", s1.string(), s2.string(), "--out", (dir.path / "batch").string()});
    CHECK(r.code == 0);
    CHECK(fs::exists(dir.path / "batch" / "one.json"));
    CHECK(fs::exists(dir.path / "batch" / "two.csv"));

    const auto bad = dir.write("bad.scn", "synthetic = ring\nsynthetic_size = 5\nlambda = 0.9\nmu = 0.2\n");
    r = cli({"batch", s1.string(), bad.string(), "--out", (dir.path / "batch2").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("bad.scn") != std::string::npos);

    r = cli({"control", "--config", s1.string(), "--steps", "2", "--gamma", "0.5"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["steps"].size() == 2);
}
