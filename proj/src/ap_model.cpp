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
#include "metapop/ap_model.hpp"
#include "metapop/error.hpp"

#include <cmath>
#include <string>

namespace metapop::ap
{

void Params::validate() const
{
    const std::array<std::pair<const char*, double>, 6> fields{
        {{"beta_i", beta_i}, {"beta_l", beta_l}, {"e_i", e_i}, {"e_l", e_l}, {"f", f}, {"g", g}}};
    for (const auto& [name, v] : fields) {
        if (!(std::isfinite(v) && v > 0.0)) {
            fail(ErrorCode::invalid_argument, std::string("ap parameters: ") + name + " must be finite and > 0");
        }
    }
}

std::array<double, 4> rhs(const State4& s, const Params& p)
{
    const double inf = p.beta_i * s.s * s.i; // colonization of susceptible patches
    const double lat = p.beta_l * s.r * s.i; // colonization of recovering patches
    return {
        inf - p.e_i * s.i + p.f * s.l - p.g * s.i,
        p.e_i * s.i - inf + p.f * s.r - p.g * s.s,
        p.g * s.i - p.f * s.l - p.e_l * s.l + lat,
        p.g * s.s - p.f * s.r + p.e_l * s.l - lat,
    };
}

Quadratic quadratic(const Params& p)
{
    p.validate();
    const double as = p.a_star();
    Quadratic q;
    q.a = p.beta_i * p.beta_l;
    q.b = p.beta_i * (p.f + p.e_l) + p.beta_l * (p.e_i + p.g) - p.beta_i * p.beta_l * as;
    q.c = (p.f + p.e_l) * (p.e_i - p.beta_i * as) + p.g * (p.e_l - p.beta_l * as);
    q.gamma = p.f + p.e_l + p.e_i + p.g - p.beta_i * as;
    q.r0 = 1.0 - q.c;
    return q;
}

namespace
{

std::optional<State4> interior(const Params& p, const Quadratic& q)
{
    const double disc = q.discriminant();
    if (disc < 0.0) {
        return std::nullopt;
    }
    const double sq = std::sqrt(disc);
    // (-b + sqrt(disc)) / 2a without subtracting nearly equal numbers
    const double i_star = q.b >= 0.0 ? -2.0 * q.c / (q.b + sq) : (-q.b + sq) / (2.0 * q.a);
    const double as = p.a_star();
    const double bs = p.b_star();
    const double lin = p.beta_i / (p.f + p.g) - (p.g + p.e_i) / p.f;
    const double s_star = as - i_star;
    const double r_star = bs - p.beta_i / p.f * i_star * i_star + lin * i_star;
    const double l_by_sum = 1.0 - i_star - s_star - r_star;
    const double l_closed = p.beta_i / p.f * i_star * i_star - lin * i_star;
    if (std::abs(l_by_sum - l_closed) > 1e-8 * std::max(1.0, std::abs(l_closed))) {
        fail(ErrorCode::internal, "interior equilibrium: closed forms of L* disagree");
    }
    return State4{i_star, s_star, l_closed, r_star};
}

} // namespace

Equilibria equilibria(const Params& p)
{
    const Quadratic q = quadratic(p);
    Equilibria eq;
    eq.a_star = p.a_star();
    eq.b_star = p.b_star();
    eq.e1_star = {0.0, eq.a_star, 0.0, eq.b_star};
    eq.e2_star = interior(p, q);
    eq.e2_in_domain = eq.e2_star && eq.e2_star->i >= 0.0 && eq.e2_star->s >= 0.0 && eq.e2_star->l >= 0.0 &&
                      eq.e2_star->r >= 0.0;
    return eq;
}

State4 interior_equilibrium(const Params& p)
{
    const auto e = interior(p, quadratic(p));
    if (!e) {
        fail(ErrorCode::numeric, "complex interior equilibrium (b^2 - 4ac < 0)");
    }
    return *e;
}

} // namespace metapop::ap
