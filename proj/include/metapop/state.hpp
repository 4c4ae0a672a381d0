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
#ifndef METAPOP_STATE_HPP
#define METAPOP_STATE_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

namespace metapop
{

/// Default slack for domain membership of floating point states.
inline constexpr double domain_tolerance = 1e-12;

/// Point of the Keymer state space. x is the habitable unoccupied fraction
/// (p1), y the occupied fraction (p2); the uninhabitable fraction p0 is 1 - x - y.
struct State2 {
    double x = 0.0;
    double y = 0.0;

    std::array<double, 2> to_array() const
    {
        return {x, y};
    }
    static State2 from(std::span<const double> v);

    friend bool operator==(const State2&, const State2&) = default;
};

/// Patch-type frequencies of the Amarasekare-Possingham model, ordered
/// (I, S, L, R) everywhere in this library.
struct State4 {
    double i = 0.0;
    double s = 0.0;
    double l = 0.0;
    double r = 0.0;

    std::array<double, 4> to_array() const
    {
        return {i, s, l, r};
    }
    static State4 from(std::span<const double> v);

    friend bool operator==(const State4&, const State4&) = default;
};

enum class Domain {
    d2, // x, y >= 0, x + y <= 1
    d4, // I, S, L, R >= 0, I + S + L + R = 1
};

std::size_t dimension(Domain d);
std::string_view to_string(Domain d);

bool in_d2(const State2& s, double tol = domain_tolerance);
bool in_d4(const State4& s, double tol = domain_tolerance);
bool in_domain(std::span<const double> state, Domain d, double tol = domain_tolerance);

/// Max-norm distance between equally sized vectors.
double max_norm_distance(std::span<const double> a, std::span<const double> b);

} // namespace metapop

#endif // METAPOP_STATE_HPP
