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
#ifndef METAPOP_AP_NSFD_HPP
#define METAPOP_AP_NSFD_HPP

#include "metapop/ap_model.hpp"
#include "metapop/denominator.hpp"
#include "metapop/matrix2.hpp"
#include "metapop/polynomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace metapop::ap
{

/// Upper end of the root search for phi_0; a root beyond it counts as none.
inline constexpr double phi_search_ceiling = 1e6;

/// One step of the nonlocal scheme. Updates run S, I, R, L: the new S feeds
/// the I update and the new R feeds the L update. Reordering changes the scheme.
State4 nsfd_step(const State4& s, const Params& p, const DenominatorSpec& d, double h);
State4 nsfd_step_phi(const State4& s, const Params& p, double phi);

/// phi below which every component stays nonnegative: min{1/(e_I+g), 1/(f+e_L)}.
double positivity_bound(const Params& p);

/// Coefficients alpha_k of det(J(e2*)) and gamma_k of trace(J(e2*)) over the
/// common denominator (1 + phi beta_I I*)^2 (1 + phi beta_L I*)^2, and the
/// three polynomials whose positivity is equivalent to the Jury conditions:
///   lambda1 > 0  <=>  det < 1
///   lambda2 > 0  <=>  1 - trace + det > 0
///   lambda3 > 0  <=>  1 + trace + det > 0
struct StabilityPolys {
    std::array<double, 4> alpha{}; // alpha[k-1] = alpha_k; alpha_4 = 0
    std::array<double, 4> gamma{}; // gamma[k-1] = gamma_k
    Polynomial lambda1;            // cubic
    Polynomial lambda2;            // quadratic
    Polynomial lambda3;            // quartic
    double i_star = 0.0;
    double l_star = 0.0;
};

/// Requires c < 0; throws Error(invalid_argument) otherwise.
StabilityPolys stability_polys(const Params& p);

struct Phi0 {
    std::array<double, 3> roots{}; // smallest positive root of each lambda_i, +inf if none
    double phi0 = 0.0;             // min of roots, +inf if all are
};

/// Throws Error(numeric) when a constant term is <= 0.
Phi0 phi0(const StabilityPolys& polys);

enum class ThresholdCase {
    boundary_stable, // c > 0
    interior_stable, // c < 0
    degenerate,      // |c| <= threshold_epsilon; no classification claimed
};

inline constexpr double threshold_epsilon = 1e-12;

ThresholdCase classify_threshold(double c);
std::string to_string(ThresholdCase t);

struct PhiBound {
    double phi_star = 0.0;
    ThresholdCase threshold = ThresholdCase::degenerate;
    std::vector<std::pair<std::string, double>> candidates; // every term of the minimum
    std::optional<Phi0> phi0;                               // interior_stable only
};

/// Largest phi for which the scheme is guaranteed to preserve positivity,
/// monotone sums and the stability of the designated equilibrium.
PhiBound phi_bound(const Params& p);

/// Map on the invariant set I + S = f/(f+g), L + R = g/(f+g), in (I, L).
/// Requires I in [0, f/(f+g)] and L in [0, g/(f+g)] within domain_tolerance.
std::array<double, 2> reduced_step(const std::array<double, 2>& il, const Params& p, const DenominatorSpec& d,
                                   double h);
std::array<double, 2> reduced_step_phi(const std::array<double, 2>& il, const Params& p, double phi);
/// Same formula without the domain check, for points outside D4 such as a
/// negative interior equilibrium.
std::array<double, 2> reduced_map_phi(const std::array<double, 2>& il, const Params& p, double phi);

/// Jacobian of the reduced map evaluated at an equilibrium (I*, L*).
Mat2 reduced_jacobian(const std::array<double, 2>& eq, const Params& p, double phi);

} // namespace metapop::ap

#endif // METAPOP_AP_NSFD_HPP
