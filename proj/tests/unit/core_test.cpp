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
#include "epiqubo/core/epidemic.hpp"
#include "epiqubo/core/errors.hpp"
#include "epiqubo/core/spectral.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace epiqubo;

namespace
{

LocationNetwork pair_network(double n0 = 100, double n1 = 100)
{
    return LocationNetwork({n0, n1}, SquareMatrix::from_rows({{0, 0.5}, {0.5, 0}}));
}

EpidemicState sis(std::vector<double> x)
{
    return EpidemicState{std::move(x), std::nullopt};
}

EpidemicState sir(std::vector<double> x, std::vector<double> y)
{
    return EpidemicState{std::move(x), std::move(y)};
}

bool contains(const std::vector<std::string>& messages, const std::string& text)
{
    for (const auto& m : messages) {
        if (m.find(text) != std::string::npos) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("network validation")
{
    CHECK(validate_network(LocationNetwork({100}, SquareMatrix(1))).ok());

    const auto diag = validate_network(LocationNetwork({1, 1}, SquareMatrix::from_rows({{0.1, 0}, {0, 0}})));
    CHECK_FALSE(diag.ok());
    CHECK(contains(diag.violations, "nonzero diagonal at 0"));

    const auto heavy = validate_network(LocationNetwork({1, 1}, SquareMatrix::from_rows({{0, 1.5}, {0.2, 0}})));
    CHECK(heavy.ok());
    CHECK(contains(heavy.warnings, "weight > 1 at (0,1)"));

    CHECK_FALSE(validate_network(LocationNetwork({1, 1}, SquareMatrix::from_rows({{0, -0.1}, {0, 0}}))).ok());
    CHECK_FALSE(validate_network(LocationNetwork({1, 0}, SquareMatrix(2))).ok());
    CHECK_THROWS_AS(require_valid(LocationNetwork({-5}, SquareMatrix(1))), ValidationError);
    CHECK_THROWS_AS(LocationNetwork({1, 2}, SquareMatrix(3)), DimensionError);
}

TEST_CASE("invariance bound")
{
    CHECK(invariance_bound(LocationNetwork({100}, SquareMatrix(1))) == 1.0);
    CHECK(invariance_bound(pair_network()) == doctest::Approx(1.0 / 1.5).epsilon(1e-15));
    CHECK(invariance_bound(pair_network(100, 50)) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("infection force")
{
    const auto net = pair_network();
    CHECK(infection_force(sis({10, 0}), net, ControlVector{0, 0}) == std::vector<double>{10, 5});
    CHECK(infection_force(sis({10, 0}), net, ControlVector{1, 1}) == std::vector<double>{10, 0});
    CHECK(infection_force(sis({0, 0}), net, ControlVector{1, 0}) == std::vector<double>{0, 0});
    CHECK(infection_force(sis({10, 3}), net) == infection_force(sis({10, 3}), net, ControlVector(2)));
    CHECK_THROWS_AS(infection_force(sis({10, 3}), net, ControlVector(3)), DimensionError);
}

TEST_CASE("SIS step")
{
    const auto net = pair_network();
    const EpidemicParams p{ModelKind::SIS, 0.2, 0.1};
    const auto next = step_sis(sis({10, 0}), net, p, ControlVector(2));
    CHECK(next.infected[0] == doctest::Approx(10.8).epsilon(1e-14));
    CHECK(next.infected[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(step_sis(sis({0, 0}), net, p, ControlVector{1, 0}).infected == std::vector<double>{0, 0});

    const auto recovery = step_sis(sis({10, 4}), net, {ModelKind::SIS, 0.0, 0.5}, ControlVector(2));
    CHECK(recovery.infected == std::vector<double>{5, 2});
    CHECK_THROWS_AS(step_sis(sis({10, 0}), net, {ModelKind::SIR, 0.2, 0.1}, ControlVector(2)), ValidationError);
}

TEST_CASE("SIR step")
{
    const LocationNetwork single({100}, SquareMatrix(1));
    const EpidemicParams p{ModelKind::SIR, 0.2, 0.1};
    const auto next = step_sir(sir({10}, {20}), single, p, ControlVector(1));
    CHECK(next.infected[0] == doctest::Approx(10.4).epsilon(1e-14));
    CHECK((*next.removed)[0] == doctest::Approx(21).epsilon(1e-14));

    const auto frozen = step_sir(sir({0}, {30}), single, p, ControlVector(1));
    CHECK(frozen == sir({0}, {30}));

    const auto full = step_sir(sir({10}, {0}), single, {ModelKind::SIR, 0.0, 1.0}, ControlVector(1));
    CHECK(full == sir({0}, {10}));
    CHECK_THROWS_AS(step_sir(sis({10}), single, p, ControlVector(1)), ValidationError);
}

TEST_CASE("simulate")
{
    const auto net = pair_network();
    const EpidemicParams p{ModelKind::SIS, 0.2, 0.1};
    const auto empty = simulate(net, p, sis({10, 0}), ControlVector(2), 0);
    REQUIRE(empty.states.size() == 1);
    CHECK(empty.states[0] == sis({10, 0}));

    const auto two = simulate(net, p, sis({10, 0}), ControlVector(2), 2);
    REQUIRE(two.states.size() == 3);
    CHECK(two.states[1].infected[0] == doctest::Approx(10.8).epsilon(1e-14));
    // One more hand step from [10.8, 1.0].
    const double x0 = 0.9 * 10.8 + 0.2 / 100 * (100 - 10.8) * (10.8 + 0.5 * 1.0);
    const double x1 = 0.9 * 1.0 + 0.2 / 100 * (100 - 1.0) * (1.0 + 0.5 * 10.8);
    CHECK(two.states[2].infected[0] == doctest::Approx(x0).epsilon(1e-14));
    CHECK(two.states[2].infected[1] == doctest::Approx(x1).epsilon(1e-14));

    // Full isolation confines the epidemic to its source.
    const LocationNetwork chain({100, 100, 100}, SquareMatrix::from_rows({{0, 0.3, 0}, {0.4, 0, 0.2}, {0, 0.6, 0}}));
    const auto confined = simulate(chain, p, sis({0, 7, 0}), ControlVector::ones(3), 20);
    for (const auto& s : confined.states) {
        CHECK(s.infected[0] == 0.0);
        CHECK(s.infected[2] == 0.0);
    }

    CHECK_THROWS_AS(simulate(net, p, sis({150, 0}), ControlVector(2), 1), ValidationError);
}

TEST_CASE("window cost")
{
    const auto net = pair_network();
    const EpidemicParams p{ModelKind::SIS, 0.2, 0.1};
    const auto quiet = simulate(net, p, sis({0, 0}), ControlVector{1, 0}, 2);
    CHECK(cost(quiet, ControlVector{1, 0}, 0.01, net) == doctest::Approx(1.0).epsilon(1e-15));

    const auto traj = simulate(net, p, sis({10, 0}), ControlVector(2), 2);
    const double infections = traj.states[1].total_infected() + traj.states[2].total_infected();
    CHECK(cost(traj, ControlVector(2), 0.0, net) == infections);
    CHECK(two_step_cost(net, p, sis({10, 0}), ControlVector(2), 0.01) == doctest::Approx(infections).epsilon(1e-15));
    CHECK_THROWS_AS(cost(traj, ControlVector(2), 0.0, net, 3), ValidationError);
}

TEST_CASE("spectral radius and R0 calibration")
{
    CHECK(spectral_radius(SquareMatrix::identity(3)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(infection_rate_from_r0(2, 0.1, LocationNetwork({100}, SquareMatrix(1))) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(infection_rate_from_r0(3, 0.1, pair_network()) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(infection_rate_from_r0(0, 0.1, pair_network()) == 0.0);

    CHECK(spectral_growth_factor(pair_network(), ControlVector{1, 1}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spectral_growth_factor(pair_network(), ControlVector{0, 0}) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(spectral_growth_factor(pair_network(), ControlVector{1, 0}) == doctest::Approx(1.0).epsilon(1e-12));

    // Periodic and reducible matrices.
    CHECK(spectral_radius(SquareMatrix::from_rows({{0, 2}, {8, 0}})) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(spectral_radius(SquareMatrix::from_rows({{1, 5, 0}, {0, 3, 0}, {0, 7, 2}})) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(spectral_radius(SquareMatrix(4)) == 0.0);
    CHECK_THROWS_AS(spectral_radius(SquareMatrix::from_rows({{0, -1}, {1, 0}})), ValidationError);
    CHECK_THROWS_AS(spectral_radius(SquareMatrix::from_rows({{0, 1}, {1, 0.5}}), {1e-12, 2}), ConvergenceError);
}

TEST_CASE("spectral radius matches the eigenvalues of random symmetric matrices")
{
    // Symmetric 2x2 [[a, b], [b, c]] has root (a + c)/2 + sqrt(((a - c)/2)^2 + b^2).
    Rng rng(41);
    for (int k = 0; k < 200; ++k) {
        const double a = rng.uniform(0, 3), b = rng.uniform(0.01, 2), c = rng.uniform(0, 3);
        const double expected = (a + c) / 2 + std::sqrt((a - c) * (a - c) / 4 + b * b);
        CHECK(spectral_radius(SquareMatrix::from_rows({{a, b}, {b, c}})) == doctest::Approx(expected).epsilon(1e-11));
    }
}

TEST_CASE("property: positive invariance and SIR conservation")
{
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto kind = trial % 2 ? ModelKind::SIR : ModelKind::SIS;
        auto inst = oracle::random_instance(rng, kind, 2 + rng.below(6));
        inst.lambda = oracle::invariance_bound(inst);
        inst.mu     = rng.uniform();
        const auto net = inst.network();
        CHECK(invariance_bound(net) == doctest::Approx(oracle::invariance_bound(inst)).epsilon(1e-14));

        std::vector<ControlVector> schedule;
        for (int t = 0; t < 300; ++t) {
            schedule.push_back(ControlVector::from_mask(rng.next(), inst.size()));
        }
        const auto traj = simulate(net, inst.params(), inst.state(), schedule);
        CHECK(traj.clamps.empty());
        for (std::size_t t = 0; t < traj.states.size(); ++t) {
            const auto& s = traj.states[t];
            for (std::size_t i = 0; i < inst.size(); ++i) {
                const double y = s.removed ? (*s.removed)[i] : 0.0;
                CHECK(s.infected[i] >= 0.0);
                CHECK(s.infected[i] + y <= inst.n[i] * (1 + 1e-12));
                if (t > 0 && s.removed) {
                    const auto& prev = traj.states[t - 1];
                    CHECK(y >= (*prev.removed)[i]);
                    CHECK(inst.n[i] - s.infected[i] - y <= inst.n[i] - prev.infected[i] - (*prev.removed)[i] + 1e-9);
                }
            }
        }
    }
}

TEST_CASE("property: isolation never raises the infection force")
{
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        auto inst = oracle::random_instance(rng, ModelKind::SIS, 1 + rng.below(8));
        if (rng.bernoulli(0.3)) {
            inst.x.assign(inst.size(), 0.0);
            inst.x[rng.below(inst.size())] = 1.0;
        }
        const auto net = inst.network();
        const auto u   = ControlVector::from_mask(rng.next(), inst.size());
        for (std::size_t i = 0; i < inst.size(); ++i) {
            auto on  = u;
            auto off = u;
            on.set(i, true);
            off.set(i, false);
            const double isolated = infection_force(inst.state(), net, on)[i];
            const double open     = infection_force(inst.state(), net, off)[i];
            double inflow = 0.0;
            for (std::size_t j = 0; j < inst.size(); ++j) {
                inflow += inst.a[i][j] * inst.x[j];
            }
            CHECK(isolated <= open);
            CHECK((isolated == open) == (inflow == 0.0));
        }
    }
}

TEST_CASE("property: open controls reproduce the uncontrolled step bit for bit")
{
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = oracle::random_instance(rng, trial % 2 ? ModelKind::SIR : ModelKind::SIS, 1 + rng.below(9));
        const auto net  = inst.network();
        CHECK(infection_force(inst.state(), net) == infection_force(inst.state(), net, ControlVector(inst.size())));
        auto x = inst.x, y = inst.y;
        const auto u = oracle::bits(rng.next() & 0xff, inst.size());
        oracle::step(inst, x, y, u);
        const auto next = step(inst.state(), net, inst.params(), ControlVector(u));
        for (std::size_t i = 0; i < inst.size(); ++i) {
            CHECK(next.infected[i] == doctest::Approx(x[i]).epsilon(1e-13));
        }
    }
}

TEST_CASE("property: disease-free states are absorbing and simulate is pure")
{
    Rng rng(10);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = oracle::random_instance(rng, trial % 2 ? ModelKind::SIR : ModelKind::SIS, 1 + rng.below(6));
        const auto net = inst.network();
        const auto u   = ControlVector::from_mask(rng.next(), inst.size());
        const auto a   = simulate(net, inst.params(), inst.state(), u, 25);
        const auto b   = simulate(net, inst.params(), inst.state(), u, 25);
        CHECK(a.states == b.states);

        inst.x.assign(inst.size(), 0.0);
        for (const auto& s : simulate(net, inst.params(), inst.state(), u, 25).states) {
            CHECK(s.total_infected() == 0.0);
        }
    }
}

TEST_CASE("saturated SIR runs stay exactly inside the box")
{
    // Just below the bound the susceptibles run out, and x + y lands on n_i
    // up to rounding.
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst      = oracle::random_instance(rng, ModelKind::SIR, 2 + rng.below(4));
        inst.mu        = 0.01 + 0.05 * rng.uniform();
        const auto net = inst.network();
        auto params    = inst.params();
        params.lambda  = 0.999 * invariance_bound(net);
        const auto traj = simulate(net, params, inst.state(), ControlVector(inst.size()), 2000,
                                   SimulationOptions{true});
        CHECK(traj.clamps.empty());
        for (const auto& s : traj.states) {
            for (std::size_t i = 0; i < inst.size(); ++i) {
                CHECK(s.infected[i] >= 0.0);
                CHECK(s.infected[i] + (*s.removed)[i] <= inst.n[i]);
            }
        }
    }
}
