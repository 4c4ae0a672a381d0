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
#include "metapop/ap_nsfd.hpp"
#include "metapop/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metapop::ap
{

State4 nsfd_step_phi(const State4& s, const Params& p, double phi)
{
    if (!(phi > 0.0) || !std::isfinite(phi)) {
        fail(ErrorCode::invalid_argument, "phi must be finite and > 0");
    }
    const double s_next = ((1.0 - phi * p.g) * s.s + phi * p.e_i * s.i + phi * p.f * s.r) / (1.0 + phi * p.beta_i * s.i);
    const double i_next = (1.0 - phi * p.e_i - phi * p.g) * s.i + phi * p.beta_i * s_next * s.i + phi * p.f * s.l;
    const double r_next = ((1.0 - phi * p.f) * s.r + phi * p.g * s.s + phi * p.e_l * s.l) / (1.0 + phi * p.beta_l * s.i);
    const double l_next = (1.0 - phi * p.f - phi * p.e_l) * s.l + phi * p.g * s.i + phi * p.beta_l * r_next * s.i;
    return {i_next, s_next, l_next, r_next};
}

State4 nsfd_step(const State4& s, const Params& p, const DenominatorSpec& d, double h)
{
    return nsfd_step_phi(s, p, d(h));
}

double positivity_bound(const Params& p)
{
    return std::min(1.0 / (p.e_i + p.g), 1.0 / (p.f + p.e_l));
}

StabilityPolys stability_polys(const Params& p)
{
    const Quadratic q = quadratic(p);
    if (!(q.c < 0.0)) {
        fail(ErrorCode::invalid_argument, "stability polynomials need c < 0 (interior equilibrium)");
    }
    const State4 e2 = interior_equilibrium(p);
    const double bi = p.beta_i;
    const double bl = p.beta_l;
    const double f = p.f;
    const double g = p.g;
    const double ei = p.e_i;
    const double el = p.e_l;
    const double as = p.a_star();
    const double bs = p.b_star();
    const double is = e2.i;
    const double ls = e2.l;

    // recurring groups
    const double k_i = ei + g - bi * as;     // net loss rate of I at an empty landscape
    const double k_l = bl * is - f - el;
    const double m_l = g + bl * bs - bl * ls;

    StabilityPolys out;
    out.i_star = is;
    out.l_star = ls;
    auto& al = out.alpha;
    al[0] = bl * is - f - el - ei - g + bi * as;
    al[1] = -((f + el) * bl * is + k_i * k_l + f * bi * ls + m_l * f);
    al[2] = k_i * (f + el) * bl * is - f * bi * ls * k_l - m_l * f * bi * is - (f + el) * f * bl * ls;
    al[3] = 0.0;

    auto& ga = out.gamma;
    ga[0] = 3.0 * bl * is - ei - g + bi * as - f - el + 2.0 * bi * is;
    ga[1] = bl * bl * is * is - 2.0 * k_i * bl * is - f * bi * ls + bi * bi * is * is + 2.0 * k_l * bi * is -
            (f + el) * bl * is;
    ga[2] = -k_i * bl * bl * is * is - 2.0 * f * bi * bl * is * ls + k_l * bi * bi * is * is -
            2.0 * (f + el) * bi * bl * is * is;
    ga[3] = -f * bi * bl * bl * is * is * ls - (f + el) * bl * bi * bi * is * is * is;

    // expansion of (1 + phi beta_I I*)^2 (1 + phi beta_L I*)^2
    const double d1 = 2.0 * (bi + bl) * is;
    const double d2 = (bi + bl) * (bi + bl) * is * is + 2.0 * bi * bl * is * is;
    const double d3 = 2.0 * (bi + bl) * bi * bl * is * is * is;
    const double d4 = bi * bi * bl * bl * is * is * is * is;

    out.lambda1 = Polynomial({d1 - al[0], d2 - al[1], d3 - al[2], d4 - al[3]});
    out.lambda2 = Polynomial({d2 - ga[1] + al[1], d3 - ga[2] + al[2], d4 - ga[3] + al[3]});
    out.lambda3 = Polynomial({4.0, d1 + ga[0] + al[0], d2 + ga[1] + al[1], d3 + ga[2] + al[2], d4 + ga[3] + al[3]});
    return out;
}

Phi0 phi0(const StabilityPolys& polys)
{
    const std::array<const Polynomial*, 3> ls{&polys.lambda1, &polys.lambda2, &polys.lambda3};
    Phi0 out;
    out.phi0 = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ls.size(); ++k) {
        if (!(ls[k]->coeff(0) > 0.0)) {
            fail(ErrorCode::numeric,
                 "lambda" + std::to_string(k + 1) + " has a nonpositive constant term; no admissible phi0");
        }
        const auto r = smallest_positive_root(*ls[k], phi_search_ceiling);
        out.roots[k] = r ? *r : std::numeric_limits<double>::infinity();
        out.phi0 = std::min(out.phi0, out.roots[k]);
    }
    return out;
}

ThresholdCase classify_threshold(double c)
{
    if (std::abs(c) <= threshold_epsilon) {
        return ThresholdCase::degenerate;
    }
    return c > 0.0 ? ThresholdCase::boundary_stable : ThresholdCase::interior_stable;
}

std::string to_string(ThresholdCase t)
{
    switch (t) {
    case ThresholdCase::boundary_stable:
        return "c>0";
    case ThresholdCase::interior_stable:
        return "c<0";
    case ThresholdCase::degenerate:
        return "c=0";
    }
    return "?";
}

PhiBound phi_bound(const Params& p)
{
    const Quadratic q = quadratic(p);
    PhiBound out;
    out.threshold = classify_threshold(q.c);
    out.candidates = {
        {"1/(e_i+g)", 1.0 / (p.e_i + p.g)},
        {"1/(f+e_l)", 1.0 / (p.f + p.e_l)},
        {"1/(f+g)", 1.0 / (p.f + p.g)},
    };
    switch (out.threshold) {
    case ThresholdCase::boundary_stable:
        out.candidates.emplace_back("gamma/c", q.gamma / q.c);
        out.candidates.emplace_back("2/gamma", 2.0 / q.gamma);
        break;
    case ThresholdCase::interior_stable:
        out.phi0 = phi0(stability_polys(p));
        out.candidates.emplace_back("phi0", out.phi0->phi0);
        break;
    case ThresholdCase::degenerate:
        break;
    }
    out.phi_star = std::numeric_limits<double>::infinity();
    for (const auto& [name, v] : out.candidates) {
        out.phi_star = std::min(out.phi_star, v);
    }
    return out;
}

std::array<double, 2> reduced_step_phi(const std::array<double, 2>& il, const Params& p, double phi)
{
    const double as = p.a_star();
    const double bs = p.b_star();
    const double i = il[0];
    const double l = il[1];
    if (!(i >= -domain_tolerance && i <= as + domain_tolerance && l >= -domain_tolerance &&
          l <= bs + domain_tolerance)) {
        fail(ErrorCode::domain, "reduced ap scheme needs 0 <= I <= f/(f+g) and 0 <= L <= g/(f+g)");
    }
    return reduced_map_phi(il, p, phi);
}

std::array<double, 2> reduced_map_phi(const std::array<double, 2>& il, const Params& p, double phi)
{
    if (!(phi > 0.0) || !std::isfinite(phi)) {
        fail(ErrorCode::invalid_argument, "phi must be finite and > 0");
    }
    const double as = p.a_star();
    const double bs = p.b_star();
    const double i = il[0];
    const double l = il[1];
    const double i_next =
        ((1.0 + phi * p.beta_i * as - phi * p.e_i - phi * p.g) * i + phi * p.f * l) / (1.0 + phi * p.beta_i * i);
    const double l_next =
        ((phi * p.g + phi * p.beta_l * bs) * i + (1.0 - phi * p.f - phi * p.e_l) * l) / (1.0 + phi * p.beta_l * i);
    return {i_next, l_next};
}

std::array<double, 2> reduced_step(const std::array<double, 2>& il, const Params& p, const DenominatorSpec& d,
                                   double h)
{
    return reduced_step_phi(il, p, d(h));
}

Mat2 reduced_jacobian(const std::array<double, 2>& eq, const Params& p, double phi)
{
    if (!(phi > 0.0)) {
        fail(ErrorCode::invalid_argument, "phi must be > 0");
    }
    const double is = eq[0];
    const double ls = eq[1];
    const double pi = 1.0 + phi * p.beta_i * is;
    const double pl = 1.0 + phi * p.beta_l * is;
    const double keep_l = 1.0 - phi * p.f - phi * p.e_l;
    Mat2 j;
    j.a11 = (1.0 - phi * p.e_i - phi * p.g + phi * p.beta_i * p.a_star() - phi * phi * p.f * p.beta_i * ls) / (pi * pi);
    j.a12 = phi * p.f / pi;
    j.a21 = (phi * p.g + phi * p.beta_l * p.b_star() - phi * p.beta_l * keep_l * ls) / (pl * pl);
    j.a22 = keep_l / pl;
    return j;
}

} // namespace metapop::ap
