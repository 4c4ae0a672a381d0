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
#include "metapop/experiment.hpp"
#include "metapop/standard_schemes.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace metapop;

namespace
{

const VectorField decay = [](std::span<const double> s, std::span<double> out) {
    out[0] = -s[0];
};

double solve_decay(StandardScheme scheme, double h)
{
    std::vector<double> y{1.0};
    const auto n = static_cast<int>(std::lround(1.0 / h));
    for (int k = 0; k < n; ++k) {
        y = standard_step(y, decay, h, scheme);
    }
    return std::abs(y[0] - std::exp(-1.0));
}

Trajectory make_traj(Domain d, const std::vector<std::vector<double>>& rows)
{
    Trajectory t("test", dimension(d), 1.0, 1.0);
    for (const auto& r : rows) {
        t.push_back(r);
    }
    return t;
}

} // namespace

TEST(TestStandardSchemes, NamesAndOrders)
{
    EXPECT_EQ(StandardScheme{StandardScheme::Kind::euler}.order(), 1);
    EXPECT_EQ(StandardScheme{StandardScheme::Kind::rk2}.order(), 2);
    EXPECT_EQ(StandardScheme{StandardScheme::Kind::rk4}.order(), 4);
    EXPECT_EQ(StandardScheme::parse("rk4")->name(), "rk4");
    EXPECT_FALSE(StandardScheme::parse("rk3").has_value());
}

TEST(TestStandardSchemes, ZeroFieldIsIdentity)
{
    const VectorField zero = [](std::span<const double>, std::span<double> out) {
        std::fill(out.begin(), out.end(), 0.0);
    };
    const std::vector<double> s{0.3, 0.7};
    for (auto k : {StandardScheme::Kind::euler, StandardScheme::Kind::rk2, StandardScheme::Kind::rk4}) {
        EXPECT_EQ(standard_step(s, zero, 0.5, {k}), s);
    }
}

TEST(TestStandardSchemes, SingleStepValues)
{
    const std::vector<double> one{1.0};
    EXPECT_DOUBLE_EQ(standard_step(one, decay, 0.1, {StandardScheme::Kind::euler})[0], 0.9);
    EXPECT_DOUBLE_EQ(standard_step(one, decay, 0.1, {StandardScheme::Kind::rk2})[0], 1.0 - 0.1 + 0.005);
    EXPECT_NEAR(standard_step(one, decay, 0.1, {StandardScheme::Kind::rk4})[0],
                1.0 - 0.1 + 0.005 - 0.1 * 0.1 * 0.1 / 6.0 + 0.1 * 0.1 * 0.1 * 0.1 / 24.0, 1e-15);
}

TEST(TestStandardSchemes, ObservedOrder)
{
    for (auto k : {StandardScheme::Kind::euler, StandardScheme::Kind::rk2, StandardScheme::Kind::rk4}) {
        const StandardScheme s{k};
        const double e1 = solve_decay(s, 0.1);
        const double e2 = solve_decay(s, 0.05);
        EXPECT_NEAR(std::log2(e1 / e2), s.order(), 0.1) << s.name();
    }
}

TEST(TestStandardSchemes, ViolationKinds)
{
    EXPECT_FALSE(detect_violation(make_traj(Domain::d2, {{0.5, 0.2}, {0.4, 0.3}}), Domain::d2).has_value());
    const auto neg = detect_violation(make_traj(Domain::d2, {{0.5, 0.2}, {0.5, 0.2}, {-0.1, 0.2}}), Domain::d2);
    ASSERT_TRUE(neg.has_value());
    EXPECT_EQ(neg->index, 2u);
    EXPECT_EQ(neg->kind, Violation::Kind::negative);
    const auto drift = detect_violation(make_traj(Domain::d2, {{0.6, 0.5}}), Domain::d2);
    ASSERT_TRUE(drift.has_value());
    EXPECT_EQ(drift->kind, Violation::Kind::sum_drift);
    const auto drift4 = detect_violation(make_traj(Domain::d4, {{0.25, 0.25, 0.25, 0.2}}), Domain::d4);
    ASSERT_TRUE(drift4.has_value());
    EXPECT_EQ(drift4->kind, Violation::Kind::sum_drift);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const auto nf = detect_violation(make_traj(Domain::d2, {{0.1, 0.1}, {nan, 0.1}}), Domain::d2);
    ASSERT_TRUE(nf.has_value());
    EXPECT_EQ(nf->kind, Violation::Kind::non_finite);
    EXPECT_EQ(nf->index, 1u);
    EXPECT_EQ(to_string(Violation::Kind::non_finite), "non_finite");
}

TEST(TestStandardSchemes, SpuriousFixedPoint)
{
    std::vector<std::vector<double>> rows(20, {0.4, 0.1});
    const auto t = make_traj(Domain::d2, rows);
    const auto sp = detect_spurious_fixed_point(t, {{0.25, 0.0}});
    ASSERT_TRUE(sp.has_value());
    EXPECT_NEAR(sp->distance_to_nearest, 0.15, 1e-15);
    EXPECT_FALSE(detect_spurious_fixed_point(t, {{0.4, 0.1}}).has_value());
    rows.back() = {0.41, 0.1};
    EXPECT_FALSE(detect_spurious_fixed_point(make_traj(Domain::d2, rows), {{0.25, 0.0}}).has_value());
}

TEST(TestStandardSchemes, SchemesAgreeAtSmallStep)
{
    // first-order NSFD with large weights: O(h) agreement with the RK4 reference
    for (const auto& name : preset_names()) {
        auto cfg = preset(name);
        const auto& ic = cfg.initial.front();
        const auto rhs = [&cfg](std::span<const double> s, std::span<double> out) {
            if (cfg.model == Model::keymer) {
                const auto r = keymer::rhs(State2::from(s), cfg.keymer);
                out[0] = r[0];
                out[1] = r[1];
            }
            else {
                const auto r = ap::rhs(State4::from(s), cfg.ap);
                std::copy(r.begin(), r.end(), out.begin());
            }
        };
        const auto ref = oracle::rk4_reference(rhs, ic, 1.0, 20000);
        for (auto scheme : {SchemeKind::euler, SchemeKind::rk2, SchemeKind::rk4, SchemeKind::nsfd}) {
            cfg.h = 1e-3;
            cfg.steps = 1000;
            const auto traj = run(cfg, scheme, ic);
            const double err = max_norm_distance(traj.back(), ref);
            EXPECT_LT(err, scheme == SchemeKind::nsfd ? 2e-3 : 1e-2) << name << " " << to_string(scheme);
            if (scheme == SchemeKind::rk4) {
                EXPECT_LT(err, 1e-10) << name;
            }
        }
    }
}
