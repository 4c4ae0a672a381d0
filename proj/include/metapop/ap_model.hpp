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
#ifndef METAPOP_AP_MODEL_HPP
#define METAPOP_AP_MODEL_HPP

#include "metapop/state.hpp"

#include <array>
#include <optional>

namespace metapop::ap
{

/// Rate constants of the Amarasekare-Possingham model. All strictly positive.
struct Params {
    double beta_i = 0.0; // colonization by infected patches
    double beta_l = 0.0; // colonization by latent patches
    double e_i = 0.0;    // local extinction, infected
    double e_l = 0.0;    // local extinction, latent
    double f = 0.0;      // disturbance frequency
    double g = 0.0;      // habitat succession

    void validate() const;

    double a_star() const
    {
        return f / (f + g);
    }
    double b_star() const
    {
        return g / (f + g);
    }

    friend bool operator==(const Params&, const Params&) = default;
};

/// Coefficients of the quadratic a I^2 + b I + c whose positive root is the
/// interior equilibrium, plus the derived threshold quantities.
struct Quadratic {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double gamma = 0.0; // f + e_L + e_I + g - beta_I f/(f+g)
    double r0 = 0.0;    // 1 - c

    double discriminant() const
    {
        return b * b - 4.0 * a * c;
    }
};

struct Equilibria {
    State4 e1_star;               // (0, f/(f+g), 0, g/(f+g))
    std::optional<State4> e2_star; // absent iff the discriminant is negative
    bool e2_in_domain = false;
    double a_star = 0.0;
    double b_star = 0.0;
};

/// Vector field in (I, S, L, R) order.
std::array<double, 4> rhs(const State4& s, const Params& p);

Quadratic quadratic(const Params& p);

/// Boundary and interior equilibria. The interior one uses the cancellation-free
/// root of the quadratic; both closed forms of L* are cross-checked and a
/// disagreement above 1e-8 raises Error(internal).
Equilibria equilibria(const Params& p);

/// The interior equilibrium alone; Error(numeric) when it is complex.
State4 interior_equilibrium(const Params& p);

} // namespace metapop::ap

#endif // METAPOP_AP_MODEL_HPP
