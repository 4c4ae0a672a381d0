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
#include "metapop/keymer_nsfd.hpp"
#include "metapop/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metapop::keymer
{

bool SchemeParams::sums_ok() const
{
    return std::abs(c1 + c2 - 1.0) <= sum_tolerance && std::abs(c5 + c6 - 1.0) <= sum_tolerance;
}

double cstar(const Params& p, double c6)
{
    const double le = p.lambda + p.e;
    const double s = p.lambda / le;
    return (p.beta * s + p.delta + p.e + c6 * p.beta * (2.0 - s)) / le;
}

std::vector<std::string> ValidityReport::failures() const
{
    std::vector<std::string> out;
    for (const auto& c : conditions) {
        if (!c.passed) {
            out.push_back(c.name);
        }
    }
    return out;
}

ValidityReport validate_scheme(const Params& p, const SchemeParams& s)
{
    ValidityReport rep;
    rep.cstar = cstar(p, s.c6);
    auto add = [&rep](std::string name, bool ok, double lhs, double rhs) {
        rep.conditions.push_back({std::move(name), ok, lhs, rhs});
    };
    const double tol = SchemeParams::sum_tolerance;
    add("c1 + c2 = 1", std::abs(s.c1 + s.c2 - 1.0) <= tol, s.c1 + s.c2, 1.0);
    add("c5 + c6 = 1", std::abs(s.c5 + s.c6 - 1.0) <= tol, s.c5 + s.c6, 1.0);
    add("c5 <= 0", s.c5 <= 0.0, s.c5, 0.0);
    add("c6 >= 0", s.c6 >= 0.0, s.c6, 0.0);
    const double c2_bound = std::max(s.c6, rep.cstar);
    add("c2 >= max{c6, c*}", s.c2 >= c2_bound, s.c2, c2_bound);
    const double c1_bound = -p.delta / (p.lambda + p.e);
    add("c1 <= -delta/(lambda+e)", s.c1 <= c1_bound, s.c1, c1_bound);
    rep.valid = std::all_of(rep.conditions.begin(), rep.conditions.end(), [](const auto& c) { return c.passed; });
    return rep;
}

State2 nsfd_step_phi(const State2& s, const Params& p, const SchemeParams& sp, double phi)
{
    if (!sp.sums_ok()) {
        fail(ErrorCode::invalid_argument, "scheme weights violate c1 + c2 = 1 or c5 + c6 = 1");
    }
    if (!(phi > 0.0) || !std::isfinite(phi)) {
        fail(ErrorCode::invalid_argument, "phi must be finite and > 0");
    }
    const double le = p.lambda + p.e;
    const double x = s.x;
    const double y = s.y;

    // x-equation is linear in x_{k+1}; y-equation is linear in y_{k+1} once x_{k+1} is known.
    const double den_x = 1.0 + phi * sp.c2 * le + phi * sp.c6 * p.beta * y;
    const double den_y = 1.0 + phi * sp.c2 * le;
    if (!(den_x > 0.0) || !(den_y > 0.0)) {
        fail(ErrorCode::numeric, "degenerate denominator in the keymer scheme");
    }
    const double num_x =
        x - phi * sp.c1 * le * x + phi * (p.delta - p.lambda) * y - phi * sp.c5 * p.beta * x * y + phi * p.lambda;
    const double x_next = num_x / den_x;
    const double num_y =
        y * (1.0 - phi * sp.c1 * le + phi * (p.lambda - p.delta) + phi * sp.c5 * p.beta * x) +
        phi * sp.c6 * p.beta * y * x_next;
    return {x_next, num_y / den_y};
}

State2 nsfd_step(const State2& s, const Params& p, const SchemeParams& sp, double h)
{
    return nsfd_step_phi(s, p, sp, sp.denominator(h));
}

double reduced_step(double x, const Params& p, const SchemeParams& sp, double h)
{
    const double le = p.lambda + p.e;
    const double s = p.lambda / le;
    if (!(x >= -domain_tolerance && x <= s + domain_tolerance)) {
        fail(ErrorCode::domain, "reduced keymer scheme needs 0 <= x <= lambda/(lambda+e)");
    }
    const double phi = sp.denominator(h);
    const double den = 1.0 + phi * sp.c2 * le + phi * p.beta * sp.c6 * (s - x);
    if (!(den > 0.0)) {
        fail(ErrorCode::numeric, "degenerate denominator in the reduced keymer scheme");
    }
    const double num =
        phi * p.beta * x * x - phi * (p.beta * s + p.delta + p.e) * x + phi * p.lambda * (p.delta + p.e) / le;
    return x + num / den;
}

MonotonicityCertificate reduced_monotonicity_certificate(const Params& p, const SchemeParams& sp, std::size_t nx,
                                                         std::size_t nh, double h_max)
{
    const double s = p.s_star();
    const double dx = 1e-6 * s;
    // Evaluates the reduced map without the domain guard so the stencil may
    // straddle the interval ends.
    auto map = [&](double x, double phi) {
        const double le = p.lambda + p.e;
        const double den = 1.0 + phi * sp.c2 * le + phi * p.beta * sp.c6 * (s - x);
        const double num =
            phi * p.beta * x * x - phi * (p.beta * s + p.delta + p.e) * x + phi * p.lambda * (p.delta + p.e) / le;
        return x + num / den;
    };

    MonotonicityCertificate cert;
    cert.min_slope = std::numeric_limits<double>::infinity();
    nx = std::max<std::size_t>(nx, 2);
    nh = std::max<std::size_t>(nh, 1);
    for (std::size_t j = 1; j <= nh; ++j) {
        const double h = h_max * static_cast<double>(j) / static_cast<double>(nh);
        const double phi = sp.denominator(h);
        for (std::size_t i = 0; i < nx; ++i) {
            const double x = s * static_cast<double>(i) / static_cast<double>(nx - 1);
            const double slope = (map(x + dx, phi) - map(x - dx, phi)) / (2.0 * dx);
            // a NaN slope (degenerate denominator) must fail the certificate
            if (!(slope >= cert.min_slope)) {
                cert.min_slope = std::isnan(slope) ? -std::numeric_limits<double>::infinity() : slope;
                cert.x_at_min = x;
                cert.h_at_min = h;
            }
        }
    }
    cert.monotone = cert.min_slope > 0.0;
    return cert;
}

} // namespace metapop::keymer
