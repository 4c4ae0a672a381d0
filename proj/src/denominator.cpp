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
#include "metapop/denominator.hpp"
#include "metapop/error.hpp"

#include <cmath>
#include <string>

namespace metapop
{

void DenominatorSpec::validate() const
{
    if (kind == Kind::exponential && !(std::isfinite(tau) && tau > 0.0)) {
        fail(ErrorCode::invalid_argument, "exponential denominator needs tau > 0, got " + std::to_string(tau));
    }
}

double DenominatorSpec::operator()(double h) const
{
    if (!(std::isfinite(h) && h > 0.0)) {
        fail(ErrorCode::invalid_argument, "step size must be finite and > 0, got " + std::to_string(h));
    }
    if (kind == Kind::identity) {
        return h;
    }
    validate();
    return -std::expm1(-tau * h) / tau;
}

std::string_view to_string(DenominatorSpec::Kind kind)
{
    return kind == DenominatorSpec::Kind::identity ? "identity" : "exponential";
}

double default_tau(double phi_star)
{
    if (!(phi_star > 0.0) || !std::isfinite(phi_star)) {
        fail(ErrorCode::invalid_argument, "default_tau needs a finite positive bound");
    }
    const double target = 1.0 / phi_star;
    const double unit = std::pow(10.0, std::floor(std::log10(target)) - 1.0);
    double tau = (std::floor(target / unit) + 1.0) * unit;
    // floor() may land one unit low when target/unit is within rounding of an integer
    while (tau <= target) {
        tau += unit;
    }
    const double digits = std::round(tau / unit);
    return unit < 1.0 ? digits / std::round(1.0 / unit) : digits * unit;
}

} // namespace metapop
