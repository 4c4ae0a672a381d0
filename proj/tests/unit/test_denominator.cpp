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

#include <gtest/gtest.h>

#include <cmath>

using namespace metapop;

TEST(TestDenominator, Identity)
{
    const auto d = DenominatorSpec::identity();
    EXPECT_EQ(d(0.5), 0.5);
    EXPECT_EQ(d(1e6), 1e6);
    EXPECT_TRUE(std::isinf(d.supremum()));
}

TEST(TestDenominator, Exponential)
{
    const auto d = DenominatorSpec::exponential(2.0);
    EXPECT_NEAR(d(1.0), (1.0 - std::exp(-2.0)) / 2.0, 1e-16);
    EXPECT_DOUBLE_EQ(d.supremum(), 0.5);
    for (double h : {1e-8, 1e-3, 0.1, 1.0, 10.0, 1e3, 1e9}) {
        EXPECT_GT(d(h), 0.0);
        EXPECT_LE(d(h), d.supremum());
    }
}

TEST(TestDenominator, FirstOrderAgreementWithH)
{
    const auto d = DenominatorSpec::exponential(1.1);
    for (double h : {1e-1, 1e-2, 1e-3, 1e-4, 1e-6, 1e-9}) {
        EXPECT_LE(std::abs(d(h) / h - 1.0), 1.1 * h);
    }
    // expm1 keeps full precision where 1 - exp(-tau h) would cancel
    EXPECT_NEAR(d(1e-12) / 1e-12, 1.0, 1e-11);
}

TEST(TestDenominator, RejectsBadInput)
{
    EXPECT_THROW(DenominatorSpec::identity()(0.0), Error);
    EXPECT_THROW(DenominatorSpec::identity()(-1.0), Error);
    EXPECT_THROW(DenominatorSpec::identity()(std::nan("")), Error);
    EXPECT_THROW(DenominatorSpec::exponential(0.0)(1.0), Error);
    EXPECT_THROW(DenominatorSpec::exponential(-1.0).validate(), Error);
}

TEST(TestDenominator, DefaultTau)
{
    EXPECT_EQ(default_tau(1.0), 1.1);
    EXPECT_EQ(default_tau(0.8), 1.3);
    EXPECT_EQ(default_tau(0.5), 2.1);
    EXPECT_EQ(default_tau(0.05), 21.0);
    EXPECT_EQ(default_tau(3.0), 0.34);
    for (double phi_star : {0.8, 1.0, 0.123, 7.7, 0.05, 1.0 / 3.0}) {
        const double tau = default_tau(phi_star);
        EXPECT_GT(tau, 1.0 / phi_star);
        EXPECT_LT(DenominatorSpec::exponential(tau)(1e12), phi_star);
    }
    EXPECT_THROW(default_tau(0.0), Error);
    EXPECT_THROW(default_tau(INFINITY), Error);
}
