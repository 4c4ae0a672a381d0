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
#include "metapop/error.hpp"
#include "metapop/keymer_nsfd.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace metapop;

namespace
{

const keymer::Params example1{0.8, 0.1, 0.2, 0.3};
const keymer::Params example2{2.0, 0.3, 0.3, 0.1};
const keymer::SchemeParams preset_weights{-17.0, 18.0, -1.0, 2.0, DenominatorSpec::identity()};

bool condition_passed(const keymer::ValidityReport& rep, const std::string& name)
{
    const auto it = std::find_if(rep.conditions.begin(), rep.conditions.end(), [&](const auto& c) {
        return c.name == name;
    });
    EXPECT_NE(it, rep.conditions.end()) << name;
    return it != rep.conditions.end() && it->passed;
}

struct Draw {
    keymer::Params p;
    keymer::SchemeParams sp;
};

/// Parameters and weights satisfying every sufficient condition.
Draw valid_draw(std::mt19937_64& rng)
{
    auto lu = [&rng](double lo, double hi) {
        return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
    };
    auto coin = [&rng](double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    };
    const keymer::Params p{lu(1e-2, 10), lu(1e-2, 10), coin(0.2) ? 0.0 : lu(1e-2, 10), lu(1e-2, 10)};
    const double le = p.lambda + p.e;
    // c5 = 1 - c6 <= 0 forces c6 >= 1
    const double c6 = coin(0.3) ? 1.0 : lu(1.0, 20.0);
    // the relative 1e-12 keeps c1 = 1 - c2 on the valid side after rounding
    const double c2 = std::max({c6, keymer::cstar(p, c6), 1.0 + p.delta / le}) * (1.0 + 1e-12) *
                      (coin(0.5) ? 1.0 : lu(1.0, 10.0));
    return {p, {1.0 - c2, c2, 1.0 - c6, c6, DenominatorSpec::identity()}};
}

std::vector<State2> d2_grid(int n)
{
    std::vector<State2> out;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            out.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});
        }
    }
    return out;
}

} // namespace

TEST(TestKeymerNsfd, Cstar)
{
    // (0.8 * 0.25 + 0.5 + 2 * 0.8 * 1.75) / 0.4
    EXPECT_NEAR(keymer::cstar(example1, 2.0), 8.75, 1e-14);
    EXPECT_LT(keymer::cstar(example1, 2.0), 18.0);
    EXPECT_NEAR(keymer::cstar(example1, 0.0), (0.8 * 0.25 + 0.2 + 0.3) / 0.4, 1e-14);
    // (2 * 0.75 + 0.4 + 2 * 2 * 1.25) / 0.4
    EXPECT_NEAR(keymer::cstar(example2, 2.0), 17.25, 1e-13);
    EXPECT_LT(keymer::cstar(example2, 2.0), 18.0);
}

TEST(TestKeymerNsfd, PresetWeightsAreValid)
{
    for (const auto& p : {example1, example2}) {
        const auto rep = keymer::validate_scheme(p, preset_weights);
        EXPECT_TRUE(rep.valid);
        EXPECT_TRUE(rep.failures().empty());
        EXPECT_EQ(rep.conditions.size(), 6u);
    }
}

TEST(TestKeymerNsfd, SingleConditionViolation)
{
    const keymer::SchemeParams positive_c5{-17.0, 18.0, 1.0, 0.0, DenominatorSpec::identity()};
    const auto rep = keymer::validate_scheme(example1, positive_c5);
    EXPECT_FALSE(rep.valid);
    ASSERT_EQ(rep.failures().size(), 1u);
    EXPECT_EQ(rep.failures().front(), "c5 <= 0");
}

TEST(TestKeymerNsfd, ExtinctionBoundOnC1)
{
    const keymer::SchemeParams weak{0.0, 1.0, -1.0, 2.0, DenominatorSpec::identity()};
    const auto rep = keymer::validate_scheme(example1, weak);
    EXPECT_FALSE(rep.valid);
    EXPECT_FALSE(condition_passed(rep, "c1 <= -delta/(lambda+e)"));
    for (const auto& c : rep.conditions) {
        if (c.name == "c1 <= -delta/(lambda+e)") {
            EXPECT_DOUBLE_EQ(c.rhs, -0.5);
        }
    }
}

TEST(TestKeymerNsfd, SumConstraintsReported)
{
    const keymer::SchemeParams off{-17.0, 17.0, -1.0, 2.0, DenominatorSpec::identity()};
    const auto rep = keymer::validate_scheme(example1, off);
    EXPECT_FALSE(condition_passed(rep, "c1 + c2 = 1"));
    EXPECT_TRUE(condition_passed(rep, "c5 + c6 = 1"));
    EXPECT_THROW(keymer::nsfd_step({0.5, 0.25}, example1, off, 1.0), Error);
}

TEST(TestKeymerNsfd, EquilibriaAreFixedPoints)
{
    for (double h : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
        const auto s1 = keymer::nsfd_step({0.25, 0.0}, example1, preset_weights, h);
        EXPECT_NEAR(s1.x, 0.25, 1e-15);
        EXPECT_EQ(s1.y, 0.0);
        const auto s2 = keymer::nsfd_step({0.2, 0.55}, example2, preset_weights, h);
        EXPECT_NEAR(s2.x, 0.2, 1e-14);
        EXPECT_NEAR(s2.y, 0.55, 1e-14);
    }
}

TEST(TestKeymerNsfd, SumMovesStrictlyTowardLimit)
{
    for (const auto& s : d2_grid(8)) {
        const double s0 = s.x + s.y;
        if (std::abs(s0 - 0.25) < 1e-12) {
            continue;
        }
        const auto n = keymer::nsfd_step(s, example1, preset_weights, 1.0);
        const double s1 = n.x + n.y;
        EXPECT_GT(s1, std::min(s0, 0.25));
        EXPECT_LT(s1, std::max(s0, 0.25));
    }
}

TEST(TestKeymerNsfd, MatchesImplicitSolve)
{
    const State2 s{0.5, 0.25};
    const auto got = keymer::nsfd_step(s, example1, preset_weights, 0.1);
    const auto ref = oracle::keymer_implicit_solve(s, example1, {{-17.0, 18.0, 1.0, 0.0, -1.0, 2.0, 0.0, 0.0}}, 0.1);
    ASSERT_TRUE(ref.has_value());
    EXPECT_NEAR(got.x, ref->x, 1e-12);
    EXPECT_NEAR(got.y, ref->y, 1e-12);
}

TEST(TestKeymerNsfd, ExponentialDenominatorUsesPhi)
{
    keymer::SchemeParams sp = preset_weights;
    sp.denominator = DenominatorSpec::exponential(3.0);
    const double phi = sp.denominator(2.0);
    EXPECT_EQ(keymer::nsfd_step({0.4, 0.3}, example2, sp, 2.0), keymer::nsfd_step_phi({0.4, 0.3}, example2, sp, phi));
}

TEST(TestKeymerNsfd, ErrorPaths)
{
    EXPECT_THROW(keymer::nsfd_step({0.5, 0.25}, example1, preset_weights, 0.0), Error);
    EXPECT_THROW(keymer::nsfd_step_phi({0.5, 0.25}, example1, preset_weights, -1.0), Error);
    const keymer::SchemeParams negative_c2{6.0, -5.0, 0.0, 1.0, DenominatorSpec::identity()};
    try {
        keymer::nsfd_step({0.5, 0.0}, example1, negative_c2, 1.0);
        FAIL() << "expected a degenerate denominator";
    }
    catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::numeric);
    }
}

TEST(TestKeymerNsfd, BoundaryAxisStaysExact)
{
    State2 s{0.9, 0.0};
    for (int k = 0; k < 1000; ++k) {
        s = keymer::nsfd_step(s, example2, preset_weights, 5.0);
        ASSERT_EQ(s.y, 0.0);
    }
    EXPECT_NEAR(s.x, 0.75, 1e-10);
}

TEST(TestKeymerNsfd, ReducedStepFixedPoints)
{
    EXPECT_NEAR(keymer::reduced_step(0.25, example1, preset_weights, 3.0), 0.25, 1e-15);
    EXPECT_NEAR(keymer::reduced_step(0.75, example2, preset_weights, 3.0), 0.75, 1e-15);
    EXPECT_NEAR(keymer::reduced_step(0.2, example2, preset_weights, 3.0), 0.2, 1e-15);
}

TEST(TestKeymerNsfd, ReducedStepConvergesMonotonically)
{
    double x = 0.6;
    for (int k = 0; k < 5000; ++k) {
        const double next = keymer::reduced_step(x, example2, preset_weights, 10.0);
        ASSERT_LE(next, x);
        ASSERT_GE(next, 0.2 - 1e-15);
        x = next;
    }
    EXPECT_NEAR(x, 0.2, 1e-8);
}

TEST(TestKeymerNsfd, ReducedStepMatchesFullStepOnInvariantLine)
{
    for (const auto& [p, sp] : {std::pair{example1, preset_weights}, std::pair{example2, preset_weights}}) {
        const double ss = p.s_star();
        for (int k = 0; k <= 20; ++k) {
            const double x = ss * k / 20.0;
            for (double h : {0.01, 1.0, 50.0}) {
                const double reduced = keymer::reduced_step(x, p, sp, h);
                const auto full = keymer::nsfd_step({x, ss - x}, p, sp, h);
                EXPECT_NEAR(reduced, full.x, 1e-13);
                EXPECT_NEAR(full.x + full.y, ss, 1e-14);
            }
        }
    }
}

TEST(TestKeymerNsfd, ReducedStepDomain)
{
    EXPECT_THROW(keymer::reduced_step(0.3, example1, preset_weights, 1.0), Error);
    EXPECT_THROW(keymer::reduced_step(-0.01, example1, preset_weights, 1.0), Error);
}

TEST(TestKeymerNsfd, MonotonicityCertificate)
{
    for (const auto& p : {example1, example2}) {
        const auto cert = keymer::reduced_monotonicity_certificate(p, preset_weights);
        EXPECT_TRUE(cert.monotone);
        EXPECT_GT(cert.min_slope, 0.0);
        EXPECT_GE(cert.x_at_min, 0.0);
        EXPECT_LE(cert.x_at_min, p.s_star());
        EXPECT_GT(cert.h_at_min, 0.0);
        EXPECT_LE(cert.h_at_min, 100.0);
    }
    const keymer::SchemeParams no_damping{1.0, 0.0, -1.0, 2.0, DenominatorSpec::identity()};
    keymer::MonotonicityCertificate cert;
    EXPECT_NO_THROW(cert = keymer::reduced_monotonicity_certificate(example2, no_damping));
    EXPECT_TRUE(std::isfinite(cert.min_slope));
}

TEST(TestKeymerNsfd, PropertySimplexSumAndLyapunov)
{
    std::mt19937_64 rng(5);
    const auto starts = d2_grid(6);
    for (int n = 0; n < 300; ++n) {
        const auto [p, sp] = valid_draw(rng);
        const auto rep = keymer::validate_scheme(p, sp);
        ASSERT_TRUE(rep.valid) << "draw " << n << ": " << (rep.failures().empty() ? "" : rep.failures().front());
        const double ss = p.s_star();
        for (double h : {1e-3, 1e-1, 1.0, 10.0, 100.0}) {
            for (const auto& start : starts) {
                State2 s = start;
                for (int k = 0; k < 30; ++k) {
                    const State2 next = keymer::nsfd_step(s, p, sp, h);
                    ASSERT_TRUE(in_d2(next)) << "draw " << n << " h=" << h << " k=" << k;
                    const double gap0 = std::abs(s.x + s.y - ss);
                    const double gap1 = std::abs(next.x + next.y - ss);
                    ASSERT_LE(gap1, gap0 + 1e-15);
                    const double dv = lyapunov_keymer(next, p) - lyapunov_keymer(s, p);
                    ASSERT_LE(dv, lyapunov_slack);
                    if (gap0 > 1e-3) {
                        ASSERT_LT(dv, 0.0);
                    }
                    s = next;
                }
            }
        }
    }
}

TEST(TestKeymerNsfd, PropertyMatchesImplicitSolve)
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 500; ++n) {
        const auto [p, sp] = valid_draw(rng);
        const double x = u(rng);
        const State2 s{x, u(rng) * (1.0 - x)};
        const double phi = std::exp(std::uniform_real_distribution<double>(std::log(1e-3), std::log(1e2))(rng));
        const auto got = keymer::nsfd_step_phi(s, p, sp, phi);
        const auto ref = oracle::keymer_implicit_solve(s, p, {{sp.c1, sp.c2, 1.0, 0.0, sp.c5, sp.c6, 0.0, 0.0}}, phi);
        ASSERT_TRUE(ref.has_value());
        EXPECT_NEAR(got.x, ref->x, 1e-12);
        EXPECT_NEAR(got.y, ref->y, 1e-12);
    }
}

TEST(TestKeymerNsfd, GlobalLimitSelection)
{
    for (const auto& start : d2_grid(5)) {
        State2 a = start;
        State2 b = start;
        for (int k = 0; k < 5000; ++k) {
            a = keymer::nsfd_step(a, example1, preset_weights, 1.0);
            b = keymer::nsfd_step(b, example2, preset_weights, 1.0);
        }
        EXPECT_NEAR(a.x, 0.25, 1e-6);
        EXPECT_NEAR(a.y, 0.0, 1e-6);
        if (start.y > 0.0) {
            EXPECT_NEAR(b.x, 0.2, 1e-6);
            EXPECT_NEAR(b.y, 0.55, 1e-6);
        }
        else {
            EXPECT_NEAR(b.x, 0.75, 1e-6);
            EXPECT_EQ(b.y, 0.0);
        }
    }
}

TEST(TestKeymerNsfd, OneStepDefectIsSecondOrder)
{
    const State2 s{0.5, 0.25};
    std::vector<double> hs{1e-2, 5e-3, 2.5e-3, 1.25e-3};
    std::vector<double> defects;
    for (double h : hs) {
        const auto n = keymer::nsfd_step(s, example2, preset_weights, h);
        const auto r = keymer::rhs(s, example2);
        defects.push_back(std::max(std::abs(n.x - s.x - h * r[0]), std::abs(n.y - s.y - h * r[1])));
    }
    for (std::size_t k = 1; k < hs.size(); ++k) {
        const double slope = std::log(defects[k - 1] / defects[k]) / std::log(hs[k - 1] / hs[k]);
        EXPECT_NEAR(slope, 2.0, 0.1);
    }
}
