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
#ifndef METAPOP_DENOMINATOR_HPP
#define METAPOP_DENOMINATOR_HPP

#include <limits>
#include <string_view>

namespace metapop
{

/// Denominator function phi(h) that replaces the step size in the
/// difference quotient. Both kinds satisfy phi(h) = h + O(h^2).
struct DenominatorSpec {
    enum class Kind {
        identity,    // phi(h) = h
        exponential, // phi(h) = (1 - exp(-tau h)) / tau
    };

    Kind kind = Kind::identity;
    double tau = 0.0; // exponential only

    static DenominatorSpec identity()
    {
        return {};
    }
    static DenominatorSpec exponential(double tau)
    {
        return {Kind::exponential, tau};
    }

    void validate() const;

    /// phi(h) for h > 0.
    double operator()(double h) const;

    /// sup over h > 0 of phi(h): +inf for identity, 1/tau for exponential.
    double supremum() const
    {
        return kind == Kind::exponential ? 1.0 / tau : std::numeric_limits<double>::infinity();
    }

    friend bool operator==(const DenominatorSpec&, const DenominatorSpec&) = default;
};

std::string_view to_string(DenominatorSpec::Kind kind);

/// Smallest value with two significant digits strictly above 1/phi_star.
/// With tau chosen this way, the exponential denominator stays below phi_star
/// for every h.
double default_tau(double phi_star);

} // namespace metapop

#endif // METAPOP_DENOMINATOR_HPP
