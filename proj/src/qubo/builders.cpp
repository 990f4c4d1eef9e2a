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
#include "epiqubo/qubo/builders.hpp"
#include "epiqubo/core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace epiqubo
{

namespace
{

void check_inputs(const LocationNetwork& net, const EpidemicParams& params, const EpidemicState& initial,
                  double gamma)
{
    validate_params(params);
    if (!(gamma >= 0.0)) {
        throw ValidationError("gamma must be >= 0");
    }
    const auto report = validate_state(net, params.kind, initial);
    if (!report.ok()) {
        throw ValidationError("invalid initial state: " + report.summary());
    }
}

/// sum_i [x_i(1) + x_i(2)] under the constant control u = 1 - z.
double two_step_infections(const LocationNetwork& net, const EpidemicParams& params, const EpidemicState& initial,
                           const BitVector& z)
{
    const auto u     = to_control(z);
    const auto first = step(initial, net, params, u);
    const auto second = step(first, net, params, u);
    return first.total_infected() + second.total_infected();
}

/// Both closed forms share one structure. With s_i the susceptible fraction
/// at t=0 and B_i = sum_j A_ij x_j(0), the first step is affine in z_i:
///   x_i(1) = a_i + b_i z_i,  a_i = x_i(0) (1 - mu + lambda s_i),  b_i = lambda s_i B_i.
/// The susceptible fraction after one step is sigma_i - beta_i z_i with
/// beta_i = b_i / n_i, where sigma_i = 1 - a_i/n_i (SIS) or
/// sigma_i = 1 - (a_i + y_i(0) + mu x_i(0))/n_i (SIR). Expanding the second
/// step with z_i^2 = z_i and K_i = sum_j A_ij a_j gives
///   P_i  = (2 - mu) b_i + lambda [(sigma_i - beta_i)(b_i + K_i) - beta_i a_i] - gamma n_i
///   Q_ij = lambda [(sigma_i - beta_i) A_ij b_j + (sigma_j - beta_j) A_ji b_i]   (i < j).
QuboProblem build_closed_form(const LocationNetwork& net, const EpidemicParams& params,
                              const EpidemicState& initial, double gamma)
{
    const auto m       = net.size();
    const double lambda = params.lambda;
    const double mu     = params.mu;
    const auto& x       = initial.infected;

    std::vector<double> a(m), b(m), sigma(m), beta(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double n = net.population(i);
        const double y = initial.removed ? (*initial.removed)[i] : 0.0;
        const double s = 1.0 - (x[i] + y) / n;
        const auto row = net.weights().row(i);
        double inflow  = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            inflow += row[j] * x[j];
        }
        a[i]     = x[i] * (1.0 - mu + lambda * s);
        b[i]     = lambda * s * inflow;
        sigma[i] = params.kind == ModelKind::SIS ? 1.0 - a[i] / n : 1.0 - (a[i] + y + mu * x[i]) / n;
        beta[i]  = b[i] / n;
    }

    QuboProblem q(m, two_step_cost(net, params, initial, ControlVector::ones(m), gamma));
    for (std::size_t i = 0; i < m; ++i) {
        const auto row = net.weights().row(i);
        double k       = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            k += row[j] * a[j];
        }
        const double susceptible = sigma[i] - beta[i];
        const double dynamic     = (2.0 - mu) * b[i] + lambda * (susceptible * (b[i] + k) - beta[i] * a[i]);
        q.set_linear(i, dynamic - gamma * net.population(i));
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double value = lambda * ((sigma[i] - beta[i]) * net.weight(i, j) * b[j] +
                                           (sigma[j] - beta[j]) * net.weight(j, i) * b[i]);
            q.add_quadratic(i, j, value);
        }
    }
    return q;
}

} // namespace

QuboProblem build_qubo_numeric(const LocationNetwork& net, const EpidemicParams& params,
                               const EpidemicState& initial, double gamma)
{
    check_inputs(net, params, initial, gamma);
    const auto m = net.size();

    BitVector z(m);
    const double base = two_step_infections(net, params, initial, z);

    std::vector<double> single(m);
    for (std::size_t i = 0; i < m; ++i) {
        z.set(i, true);
        single[i] = two_step_infections(net, params, initial, z);
        z.set(i, false);
    }

    QuboProblem q(m, base + gamma * net.total_population());
    for (std::size_t i = 0; i < m; ++i) {
        q.set_linear(i, (single[i] - base) - gamma * net.population(i));
    }
    for (std::size_t i = 0; i < m; ++i) {
        z.set(i, true);
        for (std::size_t j = i + 1; j < m; ++j) {
            z.set(j, true);
            const double pair = two_step_infections(net, params, initial, z);
            z.set(j, false);
            q.add_quadratic(i, j, pair - single[i] - single[j] + base);
        }
        z.set(i, false);
    }
    return q;
}

QuboProblem build_qubo_sis_analytic(const LocationNetwork& net, const EpidemicParams& params,
                                    const EpidemicState& initial, double gamma)
{
    if (params.kind != ModelKind::SIS) {
        throw ValidationError("SIS QUBO builder called with SIR parameters");
    }
    check_inputs(net, params, initial, gamma);
    return build_closed_form(net, params, initial, gamma);
}

QuboProblem build_qubo_sir_analytic(const LocationNetwork& net, const EpidemicParams& params,
                                    const EpidemicState& initial, double gamma)
{
    if (params.kind != ModelKind::SIR) {
        throw ValidationError("SIR QUBO builder called with SIS parameters");
    }
    check_inputs(net, params, initial, gamma);
    return build_closed_form(net, params, initial, gamma);
}

std::string_view to_string(BuilderKind kind)
{
    return kind == BuilderKind::analytic ? "analytic" : "numeric";
}

BuilderKind parse_builder_kind(std::string_view text)
{
    if (text == "analytic") {
        return BuilderKind::analytic;
    }
    if (text == "numeric") {
        return BuilderKind::numeric;
    }
    throw ValidationError("unknown QUBO builder '" + std::string(text) + "' (expected analytic or numeric)");
}

QuboProblem build_qubo(BuilderKind builder, const LocationNetwork& net, const EpidemicParams& params,
                       const EpidemicState& initial, double gamma)
{
    if (builder == BuilderKind::numeric) {
        return build_qubo_numeric(net, params, initial, gamma);
    }
    return params.kind == ModelKind::SIS ? build_qubo_sis_analytic(net, params, initial, gamma)
                                         : build_qubo_sir_analytic(net, params, initial, gamma);
}

ControlVector solve_bruteforce_problem1(const LocationNetwork& net, const EpidemicParams& params,
                                        const EpidemicState& initial, double gamma)
{
    const auto m = net.size();
    if (m > max_enumeration_size) {
        throw ValidationError("exhaustive search limited to " + std::to_string(max_enumeration_size) +
                              " locations, got " + std::to_string(m));
    }
    check_inputs(net, params, initial, gamma);

    ControlVector best(m);
    double best_cost = two_step_cost(net, params, initial, best, gamma);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        const auto u = ControlVector::from_mask(mask, m);
        const double c = two_step_cost(net, params, initial, u, gamma);
        if (c < best_cost) {
            best_cost = c;
            best      = u;
        }
    }
    return best;
}

} // namespace epiqubo
