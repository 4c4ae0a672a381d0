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
#include "metapop/analysis.hpp"
#include "metapop/ap_nsfd.hpp"
#include "metapop/error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace metapop;

namespace
{

const ap::Params example3{.beta_i = 0.4, .beta_l = 0.25, .e_i = 0.1, .e_l = 1.0, .f = 0.25, .g = 0.75};
const ap::Params example4{.beta_i = 0.8, .beta_l = 2.0, .e_i = 0.25, .e_l = 0.1, .f = 0.2, .g = 0.75};

std::vector<State4> d4_starts()
{
    return {{0.25, 0.25, 0.25, 0.25}, {0.7, 0.1, 0.1, 0.1}, {0.05, 0.05, 0.1, 0.8},
            {0.1, 0.6, 0.2, 0.1},     {1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0},
            {0.0, 0.5, 0.5, 0.0},     {0.0, 0.0, 1.0, 0.0}};
}

ap::Params random_params(std::mt19937_64& rng)
{
    auto lu = [&rng](double lo, double hi) {
        return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
    };
    return {lu(0.05, 5), lu(0.05, 5), lu(0.05, 2), lu(0.05, 2), lu(0.05, 2), lu(0.05, 2)};
}

/// Jacobian of the continuous reduced system at (I, L), by centered differences.
Mat2 continuous_jacobian(const ap::Params& p, double i, double l)
{
    auto field = [&p](double ii, double ll) {
        const auto r = ap::rhs({ii, p.a_star() - ii, ll, p.b_star() - ll}, p);
        return std::array<double, 2>{r[0], r[2]};
    };
    const double d = 1e-6;
    const auto fi_p = field(i + d, l);
    const auto fi_m = field(i - d, l);
    const auto fl_p = field(i, l + d);
    const auto fl_m = field(i, l - d);
    return {(fi_p[0] - fi_m[0]) / (2 * d), (fl_p[0] - fl_m[0]) / (2 * d), (fi_p[1] - fi_m[1]) / (2 * d),
            (fl_p[1] - fl_m[1]) / (2 * d)};
}

} // namespace

TEST(TestApNsfd, BoundaryEquilibriumIsFixed)
{
    const State4 e1{0.0, 0.25, 0.0, 0.75};
    for (double phi : {1e-3, 0.5, 0.8, 3.0}) {
        const auto n = ap::nsfd_step_phi(e1, example3, phi);
        EXPECT_NEAR(n.i, 0.0, 1e-15);
        EXPECT_NEAR(n.s, 0.25, 1e-15);
        EXPECT_NEAR(n.l, 0.0, 1e-15);
        EXPECT_NEAR(n.r, 0.75, 1e-15);
    }
}

TEST(TestApNsfd, InteriorEquilibriumIsFixed)
{
    const State4 e2 = ap::interior_equilibrium(example4);
    const DenominatorSpec d = DenominatorSpec::exponential(1.1);
    for (double h : {0.1, 1.0, 10.0, 50.0}) {
        const auto n = ap::nsfd_step(e2, example4, d, h);
        EXPECT_NEAR(n.i, e2.i, 1e-14);
        EXPECT_NEAR(n.s, e2.s, 1e-14);
        EXPECT_NEAR(n.l, e2.l, 1e-14);
        EXPECT_NEAR(n.r, e2.r, 1e-14);
    }
}

TEST(TestApNsfd, LargeStepStaysInDomain)
{
    const DenominatorSpec d = DenominatorSpec::exponential(1.1);
    for (auto s : d4_starts()) {
        for (int k = 0; k < 200; ++k) {
            s = ap::nsfd_step(s, example4, d, 50.0);
            ASSERT_TRUE(in_d4(s));
        }
    }
}

TEST(TestApNsfd, PhiBoundExample3)
{
    const auto b = ap::phi_bound(example3);
    EXPECT_EQ(b.threshold, ap::ThresholdCase::boundary_stable);
    EXPECT_NEAR(b.phi_star, 0.8, 1e-14);
    EXPECT_FALSE(b.phi0.has_value());
    EXPECT_EQ(b.candidates.size(), 5u);
    EXPECT_NEAR(ap::positivity_bound(example3), 0.8, 1e-14);
}

TEST(TestApNsfd, PhiBoundExample4)
{
    const auto b = ap::phi_bound(example4);
    EXPECT_EQ(b.threshold, ap::ThresholdCase::interior_stable);
    ASSERT_TRUE(b.phi0.has_value());
    EXPECT_GE(b.phi0->phi0, 1.5);
    EXPECT_NEAR(b.phi_star, 1.0, 1e-14); // 1/(e_I + g)
    // the preset tau keeps phi below the bound for every h
    EXPECT_LT(DenominatorSpec::exponential(1.1).supremum(), b.phi_star);
}

TEST(TestApNsfd, ThresholdClassification)
{
    EXPECT_EQ(ap::classify_threshold(0.3), ap::ThresholdCase::boundary_stable);
    EXPECT_EQ(ap::classify_threshold(-0.3), ap::ThresholdCase::interior_stable);
    EXPECT_EQ(ap::classify_threshold(1e-13), ap::ThresholdCase::degenerate);
    EXPECT_EQ(ap::to_string(ap::ThresholdCase::degenerate), "c=0");
}

TEST(TestApNsfd, StabilityPolysNeedNegativeC)
{
    EXPECT_THROW(ap::stability_polys(example3), Error);
}

TEST(TestApNsfd, PolynomialConstantsMatchContinuousLinearization)
{
    const auto polys = ap::stability_polys(example4);
    const Mat2 a = continuous_jacobian(example4, polys.i_star, polys.l_star);
    // phi -> 0: (1 - det)/phi -> -trace A, (1 - trace + det)/phi^2 -> det A
    EXPECT_NEAR(polys.lambda1.coeff(0), -a.trace(), 1e-7);
    EXPECT_NEAR(polys.lambda2.coeff(0), a.det(), 1e-7);
    EXPECT_DOUBLE_EQ(polys.lambda3.coeff(0), 4.0);
}

TEST(TestApNsfd, AlphaGammaReproduceJacobian)
{
    std::mt19937_64 rng(21);
    int tested = 0;
    for (int n = 0; n < 400 && tested < 60; ++n) {
        const auto p = random_params(rng);
        if (!(ap::quadratic(p).c < -1e-6)) {
            continue;
        }
        ++tested;
        const auto polys = ap::stability_polys(p);
        for (double phi : {0.01, 0.3, 1.0, 4.0}) {
            const Mat2 j = ap::reduced_jacobian({polys.i_star, polys.l_star}, p, phi);
            const double den = std::pow(1 + phi * p.beta_i * polys.i_star, 2) * std::pow(1 + phi * p.beta_l * polys.i_star, 2);
            double det_num = 1.0;
            double tr_num = 2.0;
            for (int k = 0; k < 4; ++k) {
                det_num += polys.alpha[k] * std::pow(phi, k + 1);
                tr_num += polys.gamma[k] * std::pow(phi, k + 1);
            }
            EXPECT_NEAR(det_num / den, j.det(), 1e-10 * std::max(1.0, std::abs(j.det())));
            EXPECT_NEAR(tr_num / den, j.trace(), 1e-10 * std::max(1.0, std::abs(j.trace())));
        }
    }
    EXPECT_GE(tested, 30);
}

TEST(TestApNsfd, Phi0AgreesWithGridOnJuryFunctions)
{
    std::mt19937_64 rng(22);
    std::vector<ap::Params> cases{example4};
    while (cases.size() < 25) {
        const auto p = random_params(rng);
        if (ap::quadratic(p).c < -1e-6) {
            cases.push_back(p);
        }
    }
    for (const auto& p : cases) {
        const auto polys = ap::stability_polys(p);
        const auto got = ap::phi0(polys);
        const std::array<double, 2> eq{polys.i_star, polys.l_star};
        const std::array<std::function<double(double)>, 3> jury{
            [&](double phi) {
                return (1.0 - ap::reduced_jacobian(eq, p, phi).det()) / phi;
            },
            [&](double phi) {
                const Mat2 j = ap::reduced_jacobian(eq, p, phi);
                return ((1.0 - j.a11) * (1.0 - j.a22) - j.a12 * j.a21) / (phi * phi);
            },
            [&](double phi) {
                const Mat2 j = ap::reduced_jacobian(eq, p, phi);
                return 1.0 + j.trace() + j.det();
            }};
        for (std::size_t k = 0; k < 3; ++k) {
            // the Jury functions vanish like phi^k at 0; start the scan above the cancellation floor
            const auto ref = oracle::grid_smallest_positive_root(jury[k], ap::phi_search_ceiling, 200000, 1e-3);
            if (ref) {
                EXPECT_NEAR(got.roots[k], *ref, 1e-6 * std::max(1.0, *ref)) << "lambda" << k + 1;
            }
            else {
                EXPECT_TRUE(std::isinf(got.roots[k])) << "lambda" << k + 1;
            }
        }
    }
}

TEST(TestApNsfd, PositivityBelowBound)
{
    std::mt19937_64 rng(23);
    for (int n = 0; n < 200; ++n) {
        const auto p = random_params(rng);
        const auto bound = ap::phi_bound(p);
        if (!std::isfinite(bound.phi_star)) {
            continue;
        }
        const DenominatorSpec d = DenominatorSpec::exponential(1.0 / (0.999 * bound.phi_star));
        for (double h : {1e-3, 1.0, 10.0, 1000.0}) {
            for (auto s : d4_starts()) {
                for (int k = 0; k < 20; ++k) {
                    s = ap::nsfd_step(s, p, d, h);
                    ASSERT_TRUE(in_d4(s)) << "draw " << n << " h=" << h;
                }
            }
        }
    }
}

TEST(TestApNsfd, MatchesImplicitSolve)
{
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 300; ++n) {
        const auto p = random_params(rng);
        double w[4];
        double tot = 0.0;
        for (double& v : w) {
            v = u(rng);
            tot += v;
        }
        const State4 s{w[0] / tot, w[1] / tot, w[2] / tot, w[3] / tot};
        const double phi = 0.9 * ap::positivity_bound(p) * u(rng) + 1e-3;
        const auto ref = oracle::ap_implicit_solve(s, p, phi);
        ASSERT_TRUE(ref.has_value());
        const auto got = ap::nsfd_step_phi(s, p, phi);
        EXPECT_NEAR(got.i, ref->i, 1e-10);
        EXPECT_NEAR(got.s, ref->s, 1e-10);
        EXPECT_NEAR(got.l, ref->l, 1e-10);
        EXPECT_NEAR(got.r, ref->r, 1e-10);
    }
}

TEST(TestApNsfd, JacobianAtBoundary)
{
    const auto q = ap::quadratic(example3);
    for (double phi : {0.1, 0.4, 0.8}) {
        const Mat2 j = ap::reduced_jacobian({0.0, 0.0}, example3, phi);
        EXPECT_NEAR(j.trace(), 2.0 - phi * q.gamma, 1e-14);
        EXPECT_NEAR(j.det(), 1.0 - phi * q.gamma + phi * phi * q.c, 1e-14);
        EXPECT_NEAR(j.a12, phi * example3.f, 1e-15);
        EXPECT_NEAR(j.a22, 1.0 - phi * (example3.f + example3.e_l), 1e-15);
    }
}

TEST(TestApNsfd, JuryMatchesSpectrumOnRandomParams)
{
    std::mt19937_64 rng(25);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int compared = 0;
    for (int n = 0; n < 200 && compared < 50; ++n) {
        const auto p = random_params(rng);
        const double phi = 3.0 * u(rng) + 1e-3;
        const auto eqs = ap::equilibria(p);
        const std::array<double, 2> eq = eqs.e2_in_domain ? std::array<double, 2>{eqs.e2_star->i, eqs.e2_star->l}
                                                          : std::array<double, 2>{0.0, 0.0};
        const Mat2 j = ap::reduced_jacobian(eq, p, phi);
        const auto v = jury_2x2(j);
        if (v.marginal) {
            continue;
        }
        EXPECT_EQ(v.stable, oracle::spectral_stable(j));
        ++compared;
    }
    EXPECT_EQ(compared, 50);
}

TEST(TestApNsfd, ReducedStepAgreesWithFullStep)
{
    const double phi = 0.6;
    for (double i : {0.0, 0.1, 0.25}) {
        for (double l : {0.0, 0.3, 0.75}) {
            const auto red = ap::reduced_step_phi({i, l}, example3, phi);
            const auto full = ap::nsfd_step_phi({i, 0.25 - i, l, 0.75 - l}, example3, phi);
            EXPECT_NEAR(red[0], full.i, 1e-15);
            EXPECT_NEAR(red[1], full.l, 1e-15);
        }
    }
    EXPECT_THROW(ap::reduced_step_phi({0.3, 0.0}, example3, phi), Error);
    EXPECT_NO_THROW(ap::reduced_map_phi({0.3, -0.1}, example3, phi));
}

TEST(TestApNsfd, ErrorPaths)
{
    EXPECT_THROW(ap::nsfd_step_phi({0.25, 0.25, 0.25, 0.25}, example3, 0.0), Error);
    EXPECT_THROW(ap::reduced_jacobian({0.0, 0.0}, example3, -1.0), Error);
}
