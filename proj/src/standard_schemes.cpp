/*
* Copyright (C) 2026 The metapop-nsfd Authors
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
#include "metapop/standard_schemes.hpp"
#include "metapop/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metapop
{

int StandardScheme::order() const
{
    switch (kind) {
    case Kind::euler:
        return 1;
    case Kind::rk2:
        return 2;
    case Kind::rk4:
        return 4;
    }
    return 0;
}

std::string_view StandardScheme::name() const
{
    switch (kind) {
    case Kind::euler:
        return "euler";
    case Kind::rk2:
        return "rk2";
    case Kind::rk4:
        return "rk4";
    }
    return "?";
}

std::optional<StandardScheme> StandardScheme::parse(std::string_view name)
{
    if (name == "euler") {
        return StandardScheme{Kind::euler};
    }
    if (name == "rk2") {
        return StandardScheme{Kind::rk2};
    }
    if (name == "rk4") {
        return StandardScheme{Kind::rk4};
    }
    return std::nullopt;
}

std::vector<double> standard_step(std::span<const double> state, const VectorField& rhs, double h,
                                  StandardScheme scheme)
{
    if (!(h > 0.0)) {
        fail(ErrorCode::invalid_argument, "step size must be > 0");
    }
    const std::size_t n = state.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    std::vector<double> out(state.begin(), state.end());

    rhs(state, k1);
    switch (scheme.kind) {
    case StandardScheme::Kind::euler:
        for (std::size_t i = 0; i < n; ++i) {
            out[i] += h * k1[i];
        }
        break;
    case StandardScheme::Kind::rk2:
        for (std::size_t i = 0; i < n; ++i) {
            tmp[i] = state[i] + h * k1[i];
        }
        rhs(tmp, k2);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] += 0.5 * h * (k1[i] + k2[i]);
        }
        break;
    case StandardScheme::Kind::rk4:
        for (std::size_t i = 0; i < n; ++i) {
            tmp[i] = state[i] + 0.5 * h * k1[i];
        }
        rhs(tmp, k2);
        for (std::size_t i = 0; i < n; ++i) {
            tmp[i] = state[i] + 0.5 * h * k2[i];
        }
        rhs(tmp, k3);
        for (std::size_t i = 0; i < n; ++i) {
            tmp[i] = state[i] + h * k3[i];
        }
        rhs(tmp, k4);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        break;
    }
    return out;
}

std::string_view to_string(Violation::Kind kind)
{
    switch (kind) {
    case Violation::Kind::negative:
        return "negative";
    case Violation::Kind::sum_drift:
        return "sum_drift";
    case Violation::Kind::non_finite:
        return "non_finite";
    }
    return "?";
}

std::optional<Violation> detect_violation(const Trajectory& traj, Domain domain)
{
    if (traj.dim() != dimension(domain)) {
        fail(ErrorCode::invalid_argument, "trajectory dimension does not match the domain");
    }
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const auto s = traj.state(k);
        if (std::any_of(s.begin(), s.end(), [](double v) { return !std::isfinite(v); })) {
            return Violation{k, Violation::Kind::non_finite};
        }
        if (std::any_of(s.begin(), s.end(), [](double v) { return v < -domain_tolerance; })) {
            return Violation{k, Violation::Kind::negative};
        }
        double sum = 0.0;
        for (double v : s) {
            sum += v;
        }
        const bool drift = domain == Domain::d4 ? std::abs(sum - 1.0) > sum_drift_tolerance
                                                : sum > 1.0 + sum_drift_tolerance;
        if (drift) {
            return Violation{k, Violation::Kind::sum_drift};
        }
    }
    return std::nullopt;
}

std::optional<SpuriousFixedPoint> detect_spurious_fixed_point(const Trajectory& traj,
                                                              const std::vector<std::vector<double>>& equilibria,
                                                              double distance, double settle_tol, std::size_t tail)
{
    if (traj.size() < tail + 1) {
        return std::nullopt;
    }
    const auto last = traj.back();
    if (std::any_of(last.begin(), last.end(), [](double v) { return !std::isfinite(v); })) {
        return std::nullopt;
    }
    for (std::size_t k = traj.size() - tail; k < traj.size(); ++k) {
        if (max_norm_distance(traj.state(k), last) > settle_tol) {
            return std::nullopt;
        }
    }
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& eq : equilibria) {
        nearest = std::min(nearest, max_norm_distance(eq, last));
    }
    if (nearest <= distance) {
        return std::nullopt;
    }
    return SpuriousFixedPoint{{last.begin(), last.end()}, nearest};
}

} // namespace metapop
