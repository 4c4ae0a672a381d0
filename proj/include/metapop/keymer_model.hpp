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
#ifndef METAPOP_KEYMER_MODEL_HPP
#define METAPOP_KEYMER_MODEL_HPP

#include "metapop/state.hpp"

#include <array>

namespace metapop::keymer
{

/// Rate constants of the Keymer patch-dynamics model (all in 1/time).
struct Params {
    double beta = 0.0;   // propagule reproduction
    double lambda = 0.0; // patch creation
    double delta = 0.0;  // population extinction
    double e = 0.0;      // patch destruction

    /// Throws Error(invalid_argument) unless all fields are finite,
    /// beta, lambda, e > 0 and delta >= 0.
    void validate() const;

    /// Limiting habitable fraction lambda / (lambda + e).
    double s_star() const
    {
        return lambda / (lambda + e);
    }

    friend bool operator==(const Params&, const Params&) = default;
};

struct Equilibria {
    State2 p1_star;                 // (s*, 0), always in D2
    std::array<double, 2> p2_star;  // ((delta+e)/beta, s* - (delta+e)/beta), may leave D2
    bool p2_in_domain = false;      // y-component >= 0, i.e. r0 >= 1
    double r0 = 0.0;
    double s_star = 0.0;
};

/// Right-hand side of the reduced two-equation system in (p1, p2).
std::array<double, 2> rhs(const State2& s, const Params& p);

/// Persistence threshold beta*lambda / ((lambda+e)(delta+e)).
double r0(const Params& p);

/// Closed-form equilibria; P2* is returned even when it lies outside D2.
Equilibria equilibria(const Params& p);

} // namespace metapop::keymer

#endif // METAPOP_KEYMER_MODEL_HPP
