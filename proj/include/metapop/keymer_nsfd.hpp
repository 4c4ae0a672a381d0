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
#ifndef METAPOP_KEYMER_NSFD_HPP
#define METAPOP_KEYMER_NSFD_HPP

#include "metapop/denominator.hpp"
#include "metapop/keymer_model.hpp"

#include <span>
#include <string>
#include <vector>

namespace metapop::keymer
{

/// Weights of the nonlocal discretization. Only c1, c2, c5, c6 are free;
/// the remaining weights are fixed by the admissible family.
struct SchemeParams {
    double c1 = 0.0;
    double c2 = 1.0;
    double c5 = 0.0;
    double c6 = 1.0;
    DenominatorSpec denominator = DenominatorSpec::identity();

    static constexpr double c3 = 1.0;
    static constexpr double c4 = 0.0;
    static constexpr double c7 = 0.0;
    static constexpr double c8 = 0.0;

    /// Tolerance on c1 + c2 = 1 and c5 + c6 = 1.
    static constexpr double sum_tolerance = 1e-12;

    bool sums_ok() const;

    friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// Lower bound on c2 that makes the reduced scheme monotone:
/// (beta s* + delta + e + c6 beta (2 - s*)) / (lambda + e).
double cstar(const Params& p, double c6);

struct ConditionCheck {
    std::string name;
    bool passed = false;
    double lhs = 0.0; // the quantity being tested
    double rhs = 0.0; // its bound
};

struct ValidityReport {
    std::vector<ConditionCheck> conditions;
    double cstar = 0.0;
    bool valid = false; // conjunction of all conditions

    /// Names of failed conditions.
    std::vector<std::string> failures() const;
};

/// Checks the sum constraints and the sufficient conditions
/// c5 <= 0, c6 >= 0, c2 >= max{c6, c*}, c1 <= -delta/(lambda+e).
ValidityReport validate_scheme(const Params& p, const SchemeParams& s);

/// One step of the implicit scheme, solved in closed form. Throws
/// Error(numeric) on a nonpositive denominator, Error(invalid_argument) if the
/// weight sums are violated or h <= 0.
State2 nsfd_step(const State2& s, const Params& p, const SchemeParams& sp, double h);

/// The same step with phi supplied directly.
State2 nsfd_step_phi(const State2& s, const Params& p, const SchemeParams& sp, double phi);

/// One-dimensional scheme on the invariant line x + y = s*. Requires
/// 0 <= x <= s* (within domain_tolerance).
double reduced_step(double x, const Params& p, const SchemeParams& sp, double h);

struct MonotonicityCertificate {
    bool monotone = false; // every sampled slope > 0
    double min_slope = 0.0;
    double x_at_min = 0.0;
    double h_at_min = 0.0;
};

/// Samples d/dx of the reduced map by centered differences on an
/// nx-point grid over [0, s*] and an nh-point grid over (0, h_max].
MonotonicityCertificate reduced_monotonicity_certificate(const Params& p, const SchemeParams& sp,
                                                         std::size_t nx = 200, std::size_t nh = 20,
                                                         double h_max = 100.0);

} // namespace metapop::keymer

#endif // METAPOP_KEYMER_NSFD_HPP
