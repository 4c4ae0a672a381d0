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
#include "metapop/ap_model.hpp"
#include "metapop/error.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace metapop;

namespace
{

const ap::Params example3{.beta_i = 0.4, .beta_l = 0.25, .e_i = 0.1, .e_l = 1.0, .f = 0.25, .g = 0.75};
const ap::Params example4{.beta_i = 0.8, .beta_l = 2.0, .e_i = 0.25, .e_l = 0.1, .f = 0.2, .g = 0.75};

ap::Params draw(std::mt19937_64& rng)
{
    auto lu = [&rng]() {
        return std::exp(std::uniform_real_distribution<double>(std::log(1e-2), std::log(10.0))(rng));
    };
    return {.beta_i = lu(), .beta_l = lu(), .e_i = lu(), .e_l = lu(), .f = lu(), .g = lu()};
}

} // namespace

TEST(TestApModel, RhsVanishesAtEquilibria)
{
    const auto r3 = ap::rhs({0.0, 0.25, 0.0, 0.75}, example3);
    for (double v : r3) {
        EXPECT_NEAR(v, 0.0, 1e-16);
    }
    const auto e2 = ap::interior_equilibrium(example4);
    for (double v : ap::rhs(e2, example4)) {
        EXPECT_NEAR(v, 0.0, 1e-8);
    }
}

TEST(TestApModel, RhsConservesTotal)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 2.0);
    for (int n = 0; n < 200; ++n) {
        const auto p = draw(rng);
        const auto r = ap::rhs({u(rng), u(rng), u(rng), u(rng)}, p);
        const double scale = std::abs(r[0]) + std::abs(r[1]) + std::abs(r[2]) + std::abs(r[3]) + 1.0;
        EXPECT_LE(std::abs(r[0] + r[1] + r[2] + r[3]), 1e-15 * scale * 8);
    }
}

TEST(TestApModel, QuadraticExample3)
{
    const auto q = ap::quadratic(example3);
    EXPECT_NEAR(q.c, 0.7031, 5e-5);
    EXPECT_DOUBLE_EQ(q.c, 0.703125);
    EXPECT_NEAR(q.gamma, 2.0, 1e-15);
    EXPECT_DOUBLE_EQ(q.a, 0.1);
    EXPECT_DOUBLE_EQ(q.r0, 1.0 - q.c);
}

TEST(TestApModel, QuadraticExample4)
{
    const auto q = ap::quadratic(example4);
    EXPECT_NEAR(q.c, -0.2163, 5e-5);
    EXPECT_DOUBLE_EQ(q.a, 1.6);
}

TEST(TestApModel, EquilibriaExample3)
{
    const auto eq = ap::equilibria(example3);
    EXPECT_EQ(eq.e1_star, (State4{0.0, 0.25, 0.0, 0.75}));
    ASSERT_TRUE(eq.e2_star.has_value());
    EXPECT_NEAR(eq.e2_star->i, -1.25, 1e-12);
    EXPECT_NEAR(eq.e2_star->s, 1.5, 1e-12);
    EXPECT_NEAR(eq.e2_star->l, -1.25, 1e-12);
    EXPECT_NEAR(eq.e2_star->r, 2.0, 1e-12);
    EXPECT_FALSE(eq.e2_in_domain);
}

TEST(TestApModel, EquilibriaExample4)
{
    const auto eq = ap::equilibria(example4);
    ASSERT_TRUE(eq.e2_star.has_value());
    EXPECT_NEAR(eq.e2_star->i, 0.1045, 5e-5);
    EXPECT_NEAR(eq.e2_star->s, 0.1060, 5e-5);
    EXPECT_NEAR(eq.e2_star->l, 0.4781, 5e-5);
    EXPECT_NEAR(eq.e2_star->r, 0.3114, 5e-5);
    EXPECT_TRUE(eq.e2_in_domain);
    const auto& e = *eq.e2_star;
    EXPECT_NEAR(e.i + e.s + e.l + e.r, 1.0, 1e-10);
}

TEST(TestApModel, DiscriminantIsNonnegative)
{
    // no positive rates found that make the interior root complex
    std::mt19937_64 rng(99);
    for (int n = 0; n < 20000; ++n) {
        const auto pp = draw(rng);
        const auto q = ap::quadratic(pp);
        const double scale = std::max(q.b * q.b, 4.0 * q.a * std::abs(q.c));
        ASSERT_GE(q.discriminant(), -1e-12 * scale) << "draw " << n;
        EXPECT_TRUE(ap::equilibria(pp).e2_star.has_value());
    }
}

TEST(TestApModel, ValidationRejectsNonPositiveRates)
{
    EXPECT_NO_THROW(example3.validate());
    auto p = example3;
    p.f = 0.0;
    EXPECT_THROW(p.validate(), Error);
    p = example3;
    p.beta_l = -1.0;
    EXPECT_THROW(p.validate(), Error);
    p = example3;
    p.g = std::nan("");
    EXPECT_THROW(ap::quadratic(p), Error);
}

TEST(TestApModel, PropertyGammaPositiveWhenCPositive)
{
    std::mt19937_64 rng(21);
    int hits = 0;
    for (int n = 0; n < 1000; ++n) {
        const auto q = ap::quadratic(draw(rng));
        if (q.c > 0.0) {
            ++hits;
            EXPECT_GT(q.gamma, 0.0);
        }
    }
    EXPECT_GT(hits, 100);
}

TEST(TestApModel, PropertyLowerBoundOnInteriorRoot)
{
    std::mt19937_64 rng(22);
    int hits = 0;
    for (int n = 0; n < 1000; ++n) {
        const auto p = draw(rng);
        const auto q = ap::quadratic(p);
        if (q.c < 0.0) {
            ++hits;
            const auto e = ap::interior_equilibrium(p);
            EXPECT_GT(e.i, (-q.b + p.beta_i * (p.f + p.e_l)) / (2.0 * q.a));
        }
    }
    EXPECT_GT(hits, 100);
}

TEST(TestApModel, PropertyInteriorEquilibriumInDomainIffCNegative)
{
    std::mt19937_64 rng(23);
    int counterexamples = 0;
    for (int n = 0; n < 1000; ++n) {
        const auto p = draw(rng);
        const auto q = ap::quadratic(p);
        const auto eq = ap::equilibria(p);
        if (eq.e2_star) {
            const auto& e = *eq.e2_star;
            EXPECT_NEAR(e.i + e.s + e.l + e.r, 1.0, 1e-10);
            for (double v : ap::rhs(e, p)) {
                EXPECT_NEAR(v, 0.0, 1e-9 * (1.0 + std::abs(q.b)));
            }
        }
        if (std::abs(q.c) > 1e-9 && eq.e2_in_domain != (q.c < 0.0)) {
            ++counterexamples;
        }
    }
    EXPECT_EQ(counterexamples, 0);
}
