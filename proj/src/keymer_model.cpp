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
#include "metapop/keymer_model.hpp"
#include "metapop/error.hpp"

#include <cmath>
#include <string>

namespace metapop::keymer
{

void Params::validate() const
{
    auto require = [](bool ok, const char* what) {
        if (!ok) {
            fail(ErrorCode::invalid_argument, std::string("keymer parameters: ") + what);
        }
    };
    require(std::isfinite(beta) && std::isfinite(lambda) && std::isfinite(delta) && std::isfinite(e),
            "all rates must be finite");
    require(beta > 0.0, "beta must be > 0");
    require(lambda > 0.0, "lambda must be > 0");
    require(e > 0.0, "e must be > 0");
    require(delta >= 0.0, "delta must be >= 0");
}

std::array<double, 2> rhs(const State2& s, const Params& p)
{
    const double x = s.x;
    const double y = s.y;
    return {p.lambda * (1.0 - x - y) - p.beta * x * y + p.delta * y - p.e * x, y * (p.beta * x - p.delta - p.e)};
}

double r0(const Params& p)
{
    return p.beta * p.lambda / ((p.lambda + p.e) * (p.delta + p.e));
}

Equilibria equilibria(const Params& p)
{
    p.validate();
    Equilibria eq;
    eq.s_star = p.s_star();
    eq.r0 = r0(p);
    eq.p1_star = {eq.s_star, 0.0};
    const double x2 = (p.delta + p.e) / p.beta;
    eq.p2_star = {x2, eq.s_star - x2};
    eq.p2_in_domain = eq.p2_star[1] >= 0.0;
    return eq;
}

} // namespace metapop::keymer
