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
#include "metapop/state.hpp"
#include "metapop/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace metapop
{

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::invalid_argument:
        return "invalid argument";
    case ErrorCode::domain:
        return "domain error";
    case ErrorCode::numeric:
        return "numeric error";
    case ErrorCode::io:
        return "i/o error";
    case ErrorCode::internal:
        return "internal consistency error";
    }
    return "unknown error";
}

State2 State2::from(std::span<const double> v)
{
    if (v.size() != 2) {
        fail(ErrorCode::invalid_argument, "State2 needs 2 components, got " + std::to_string(v.size()));
    }
    return {v[0], v[1]};
}

State4 State4::from(std::span<const double> v)
{
    if (v.size() != 4) {
        fail(ErrorCode::invalid_argument, "State4 needs 4 components, got " + std::to_string(v.size()));
    }
    return {v[0], v[1], v[2], v[3]};
}

std::size_t dimension(Domain d)
{
    return d == Domain::d2 ? 2 : 4;
}

std::string_view to_string(Domain d)
{
    return d == Domain::d2 ? "D2" : "D4";
}

bool in_d2(const State2& s, double tol)
{
    return std::isfinite(s.x) && std::isfinite(s.y) && s.x >= -tol && s.y >= -tol && s.x + s.y <= 1.0 + tol;
}

bool in_d4(const State4& s, double tol)
{
    const auto v = s.to_array();
    return std::all_of(v.begin(), v.end(), [tol](double c) { return std::isfinite(c) && c >= -tol; }) &&
           std::abs(s.i + s.s + s.l + s.r - 1.0) <= tol;
}

bool in_domain(std::span<const double> state, Domain d, double tol)
{
    if (state.size() != dimension(d)) {
        return false;
    }
    return d == Domain::d2 ? in_d2(State2::from(state), tol) : in_d4(State4::from(state), tol);
}

double max_norm_distance(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        fail(ErrorCode::invalid_argument, "max_norm_distance: size mismatch");
    }
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        d = std::max(d, std::abs(a[k] - b[k]));
    }
    return d;
}

} // namespace metapop
