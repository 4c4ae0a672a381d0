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
#include "metapop/verification.hpp"
#include "metapop/analysis.hpp"
#include "metapop/ap_nsfd.hpp"
#include "metapop/error.hpp"
#include "metapop/experiment.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <limits>
#include <sstream>

namespace metapop
{

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.passed;
    });
}

VerificationContext VerificationContext::library()
{
    VerificationContext ctx;
    ctx.keymer_step = [](const State2& s, const keymer::Params& p, const keymer::SchemeParams& sp, double phi) {
        return keymer::nsfd_step_phi(s, p, sp, phi);
    };
    ctx.ap_step = [](const State4& s, const ap::Params& p, double phi) {
        return ap::nsfd_step_phi(s, p, phi);
    };
    return ctx;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"all",         "paper-numbers", "invariants", "oracle",
                                                "jury",        "instability",   "order",      "jacobian"};
    return names;
}

namespace
{

using Clock = std::chrono::steady_clock;

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

/// Times `body`, fills runtime and applies the runtime limit to `passed`.
template <class F>
CheckResult timed(std::string id, std::string name, double limit, F&& body)
{
    CheckResult r;
    r.id = std::move(id);
    r.name = std::move(name);
    r.runtime_limit_s = limit;
    const auto t0 = Clock::now();
    try {
        body(r);
    }
    catch (const std::exception& e) {
        r.passed = false;
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
    }
    while (r.detail.ends_with("; ")) {
        r.detail.resize(r.detail.size() - 2);
    }
    r.runtime_s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit > 0.0 && r.runtime_s >= limit) {
        r.passed = false;
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("runtime ") + fmt(r.runtime_s) + " s over limit " +
                    fmt(limit) + " s";
    }
    return r;
}

struct Expectation {
    std::string label;
    double expected;
    double actual;
};

CheckResult check_published_values()
{
    return timed("C1", "reference-value regression", 1.0, [](CheckResult& r) {
        constexpr double tol = 5e-5;
        const auto k1 = keymer::equilibria(preset("keymer-example1").keymer);
        const auto k2 = keymer::equilibria(preset("keymer-example2").keymer);
        const auto p3 = preset("ap-example3").ap;
        const auto p4 = preset("ap-example4").ap;
        const auto q3 = ap::quadratic(p3);
        const auto q4 = ap::quadratic(p4);
        const auto b3 = ap::phi_bound(p3);
        const auto e4 = ap::interior_equilibrium(p4);
        const std::vector<Expectation> list{
            {"example1 R0", 0.4, k1.r0},
            {"example1 P2*.x", 0.625, k1.p2_star[0]},
            {"example1 P2*.y", -0.375, k1.p2_star[1]},
            {"example2 P1*.x", 0.75, k2.p1_star.x},
            {"example2 P1*.y", 0.0, k2.p1_star.y},
            {"example2 P2*.x", 0.2, k2.p2_star[0]},
            {"example2 P2*.y", 0.55, k2.p2_star[1]},
            {"example2 R0", 3.75, k2.r0},
            {"example3 c", 0.7031, q3.c},
            {"example3 gamma", 2.0, q3.gamma},
            {"example3 phi*", 0.8, b3.phi_star},
            {"example4 c", -0.2163, q4.c},
            {"example4 E2*.I", 0.1045, e4.i},
            {"example4 E2*.S", 0.1060, e4.s},
            {"example4 E2*.L", 0.4781, e4.l},
            {"example4 E2*.R", 0.3114, e4.r},
        };
        r.tolerance = tol;
        r.passed = true;
        for (const auto& e : list) {
            const double err = std::abs(e.actual - e.expected);
            r.measured = std::max(r.measured, err);
            if (!(err <= tol)) {
                r.passed = false;
                r.detail += e.label + " = " + fmt(e.actual) + " expected " + fmt(e.expected) + "; ";
            }
        }
        if (r.passed) {
            r.detail = std::to_string(list.size()) + " values within tolerance";
        }
    });
}

CheckResult check_lambda_polys()
{
    return timed("C2", "lambda-polynomial coefficients and phi0", 1.0, [](CheckResult& r) {
        constexpr double tol = 1e-3;
        const auto polys = ap::stability_polys(preset("ap-example4").ap);
        const std::vector<std::pair<const Polynomial*, std::vector<double>>> expected{
            {&polys.lambda1, {1.5077, 0.4586, 0.0314, 3.0509e-4}},
            {&polys.lambda2, {0.2338, 0.0684, 0.0041}},
            {&polys.lambda3, {4.0, -0.6750, -0.6688, -0.0904, -0.0035}},
        };
        r.tolerance = tol;
        r.passed = true;
        for (std::size_t n = 0; n < expected.size(); ++n) {
            const auto& [poly, coeffs] = expected[n];
            if (poly->degree() + 1 != coeffs.size()) {
                r.passed = false;
                r.detail += "lambda" + std::to_string(n + 1) + " has degree " + std::to_string(poly->degree()) + "; ";
            }
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                const double err = std::abs(poly->coeff(k) - coeffs[k]);
                r.measured = std::max(r.measured, err);
                if (!(err <= tol)) {
                    r.passed = false;
                    r.detail += "lambda" + std::to_string(n + 1) + " coefficient of phi^" + std::to_string(k) +
                                " = " + fmt(poly->coeff(k)) + "; ";
                }
            }
        }
        const double phi0 = ap::phi0(polys).phi0;
        if (!(phi0 >= 1.5)) {
            r.passed = false;
            r.detail += "phi0 = " + fmt(phi0) + " < 1.5; ";
        }
        if (r.passed) {
            r.detail = "max coefficient error " + fmt(r.measured) + ", phi0 = " + fmt(phi0);
        }
    });
}

// ---------------------------------------------------------------------------
// C3

constexpr std::array<double, 4> sweep_h{0.1, 1.0, 10.0, 100.0};
constexpr std::size_t sweep_steps = 20000;

std::vector<State2> keymer_grid_starts()
{
    std::vector<State2> out;
    for (double x : {0.05, 0.3, 0.55, 0.8}) {
        for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            out.push_back({x, frac * (1.0 - x)});
        }
    }
    return out;
}

std::vector<State4> ap_grid_starts()
{
    // every composition of 3 into four parts, scaled by 1/3
    std::vector<State4> out;
    for (int i = 0; i <= 3; ++i) {
        for (int s = 0; s <= 3 - i; ++s) {
            for (int l = 0; l <= 3 - i - s; ++l) {
                const int r = 3 - i - s - l;
                out.push_back({i / 3.0, s / 3.0, l / 3.0, r / 3.0});
            }
        }
    }
    return out;
}

struct SweepTally {
    std::size_t runs = 0;
    std::size_t failed_runs = 0;
    double worst_dv = -std::numeric_limits<double>::infinity();
    double worst_closed_form = 0.0;
    double worst_distance = 0.0;
    std::string first_failure;

    void fail_run(const std::string& what)
    {
        ++failed_runs;
        if (first_failure.empty()) {
            first_failure = what;
        }
    }
};

void sweep_keymer(const std::string& name, const VerificationContext& ctx, SweepTally& t)
{
    const auto cfg = preset(name);
    const auto& p = cfg.keymer;
    const auto sp = cfg.resolved_keymer_scheme();
    const auto eq = keymer::equilibria(p);
    const double ss = p.s_star();
    const auto starts = keymer_grid_starts();
    for (double h : sweep_h) {
        const double phi = cfg.resolved_denominator()(h);
        for (std::size_t j = 0; j < starts.size(); ++j) {
            ++t.runs;
            const std::string tag = name + " h=" + fmt(h) + " start " + std::to_string(j);
            Trajectory traj("nsfd", 2, h, phi);
            traj.reserve(sweep_steps + 1);
            State2 s = starts[j];
            traj.push_back(s.to_array());
            std::optional<std::string> problem;
            double prev_gap = std::abs(s.x + s.y - ss);
            for (std::size_t k = 1; k <= sweep_steps; ++k) {
                s = ctx.keymer_step(s, p, sp, phi);
                traj.push_back(s.to_array());
                if (!problem && !in_d2(s)) {
                    problem = "(a) domain membership lost at step " + std::to_string(k);
                }
                const double gap = std::abs(s.x + s.y - ss);
                if (!problem && gap > prev_gap + lyapunov_slack) {
                    problem = "(b) |s_k - s*| increased at step " + std::to_string(k);
                }
                prev_gap = gap;
            }
            const auto lyap = monitor_lyapunov(traj, p);
            t.worst_dv = std::max(t.worst_dv, lyap.max_increase);
            if (!problem && !lyap.dissipative) {
                problem = "(c) Delta V = " + fmt(lyap.max_increase) + " at step " + std::to_string(lyap.index_of_max);
            }
            const bool to_p1 = eq.r0 < 1.0 || starts[j].y == 0.0;
            const std::vector<double> target =
                to_p1 ? std::vector<double>{eq.p1_star.x, eq.p1_star.y} : std::vector<double>{eq.p2_star[0], eq.p2_star[1]};
            const double dist = max_norm_distance(traj.back(), target);
            t.worst_distance = std::max(t.worst_distance, dist);
            if (!problem && !detect_convergence(traj, {target}, 1e-5)) {
                problem = std::string("(d) no convergence to ") + (to_p1 ? "P1*" : "P2*") + ", distance " + fmt(dist);
            }
            if (problem) {
                t.fail_run(tag + ": " + *problem);
            }
        }
    }
}

void sweep_ap(const std::string& name, const VerificationContext& ctx, SweepTally& t)
{
    const auto cfg = preset(name);
    const auto& p = cfg.ap;
    const auto eq = ap::equilibria(p);
    const bool interior = ap::classify_threshold(ap::quadratic(p).c) == ap::ThresholdCase::interior_stable;
    const double as = p.a_star();
    const double bs = p.b_star();
    const auto starts = ap_grid_starts();
    for (double h : sweep_h) {
        const double phi = cfg.resolved_denominator()(h);
        const double rate = 1.0 - phi * p.f - phi * p.g;
        for (std::size_t j = 0; j < starts.size(); ++j) {
            ++t.runs;
            const std::string tag = name + " h=" + fmt(h) + " start " + std::to_string(j);
            Trajectory traj("nsfd", 4, h, phi);
            traj.reserve(sweep_steps + 1);
            State4 s = starts[j];
            const double a0 = s.i + s.s;
            const double b0 = s.l + s.r;
            traj.push_back(s.to_array());
            std::optional<std::string> problem;
            double decay = 1.0;
            for (std::size_t k = 1; k <= sweep_steps; ++k) {
                s = ctx.ap_step(s, p, phi);
                traj.push_back(s.to_array());
                decay *= rate;
                if (!problem && !in_d4(s)) {
                    problem = "(a) domain membership lost at step " + std::to_string(k);
                }
                const double da = std::abs(s.i + s.s - ((a0 - as) * decay + as));
                const double db = std::abs(s.l + s.r - ((b0 - bs) * decay + bs));
                t.worst_closed_form = std::max({t.worst_closed_form, da, db});
                if (!problem && (da > 1e-10 || db > 1e-10)) {
                    problem = "(b) a_k/b_k closed form off by " + fmt(std::max(da, db)) + " at step " +
                              std::to_string(k);
                }
            }
            const auto lyap = monitor_lyapunov(traj, p);
            t.worst_dv = std::max(t.worst_dv, lyap.max_increase);
            if (!problem && !lyap.dissipative) {
                problem = "(c) Delta V = " + fmt(lyap.max_increase) + " at step " + std::to_string(lyap.index_of_max);
            }
            const bool to_e2 = interior && (starts[j].i > 0.0 || starts[j].l > 0.0);
            const State4 target = to_e2 ? *eq.e2_star : eq.e1_star;
            const auto ta = target.to_array();
            const std::vector<double> tv(ta.begin(), ta.end());
            const double dist = max_norm_distance(traj.back(), tv);
            t.worst_distance = std::max(t.worst_distance, dist);
            if (!problem && !detect_convergence(traj, {tv}, 5e-4)) {
                problem = std::string("(d) no convergence to ") + (to_e2 ? "E2*" : "E1*") + ", distance " + fmt(dist);
            }
            if (problem) {
                t.fail_run(tag + ": " + *problem);
            }
        }
    }
}

CheckResult check_dynamic_consistency(const VerificationContext& ctx)
{
    return timed("C3", "dynamic-consistency sweep", 60.0, [&ctx](CheckResult& r) {
        SweepTally t;
        sweep_keymer("keymer-example1", ctx, t);
        sweep_keymer("keymer-example2", ctx, t);
        sweep_ap("ap-example3", ctx, t);
        sweep_ap("ap-example4", ctx, t);
        r.measured = static_cast<double>(t.failed_runs);
        r.tolerance = 0.0;
        r.passed = t.failed_runs == 0;
        r.detail = std::to_string(t.failed_runs) + " of " + std::to_string(t.runs) +
                   " runs failed; max Delta V " + fmt(t.worst_dv) + ", max a_k/b_k deviation " +
                   fmt(t.worst_closed_form) + ", max final distance " + fmt(t.worst_distance);
        if (!t.first_failure.empty()) {
            r.detail += "; first failure: " + t.first_failure;
        }
    });
}

// ---------------------------------------------------------------------------
// C4

CheckResult check_oracle(const VerificationContext& ctx)
{
    return timed("C4", "explicit/implicit oracle", 10.0, [&ctx](CheckResult& r) {
        constexpr double tol = 1e-12;
        constexpr int draws = 1000;
        std::mt19937_64 rng(20260419);
        auto u = [&rng](double lo, double hi) {
            return std::uniform_real_distribution<double>(lo, hi)(rng);
        };
        double worst_k = 0.0;
        double worst_a = 0.0;
        int unsolved = 0;
        for (int n = 0; n < draws; ++n) {
            const keymer::Params p{u(0.1, 3.0), u(0.05, 1.0), u(0.0, 1.0), u(0.05, 1.0)};
            const double le = p.lambda + p.e;
            const double c6 = u(0.0, 4.0);
            const double c2 = std::max({c6, keymer::cstar(p, c6), 1.0 + p.delta / le}) + u(0.0, 5.0);
            const keymer::SchemeParams sp{1.0 - c2, c2, 1.0 - c6, c6, DenominatorSpec::identity()};
            const double x = u(0.0, 1.0);
            const State2 s{x, u(0.0, 1.0 - x)};
            const double phi = u(1e-3, 20.0);
            const auto got = ctx.keymer_step(s, p, sp, phi);
            const auto ref = oracle::keymer_implicit_solve(s, p, {{sp.c1, sp.c2, 1.0, 0.0, sp.c5, sp.c6, 0.0, 0.0}}, phi);
            if (!ref) {
                ++unsolved;
                continue;
            }
            worst_k = std::max({worst_k, std::abs(got.x - ref->x), std::abs(got.y - ref->y)});
        }
        for (int n = 0; n < draws; ++n) {
            const ap::Params p{.beta_i = u(0.05, 3.0),
                               .beta_l = u(0.05, 3.0),
                               .e_i = u(0.05, 2.0),
                               .e_l = u(0.05, 2.0),
                               .f = u(0.05, 2.0),
                               .g = u(0.05, 2.0)};
            std::array<double, 4> w{u(0, 1), u(0, 1), u(0, 1), u(0, 1)};
            const double sum = w[0] + w[1] + w[2] + w[3];
            const State4 s{w[0] / sum, w[1] / sum, w[2] / sum, w[3] / sum};
            const double phi = DenominatorSpec::exponential(u(0.5, 5.0))(u(1e-3, 100.0));
            const auto got = ctx.ap_step(s, p, phi);
            const auto ref = oracle::ap_implicit_solve(s, p, phi);
            if (!ref) {
                ++unsolved;
                continue;
            }
            worst_a = std::max(worst_a, max_norm_distance(got.to_array(), ref->to_array()));
        }
        r.measured = std::max(worst_k, worst_a);
        r.tolerance = tol;
        r.passed = unsolved == 0 && r.measured <= tol;
        r.detail = "keymer max deviation " + fmt(worst_k) + ", ap max deviation " + fmt(worst_a) + " over " +
                   std::to_string(draws) + " draws each";
        if (unsolved > 0) {
            r.detail += "; oracle failed to converge on " + std::to_string(unsolved) + " draws";
        }
    });
}

// ---------------------------------------------------------------------------
// C5

CheckResult check_jury()
{
    return timed("C5", "Jury/spectral equivalence", 0.0, [](CheckResult& r) {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        int accepted = 0;
        int disagree = 0;
        int skipped = 0;
        while (accepted < 1000) {
            const Mat2 m{u(rng), u(rng), u(rng), u(rng)};
            const double det = m.det();
            const double tr = m.trace();
            if (std::abs(1.0 - det) <= jury_marginal_band || std::abs(1.0 - tr + det) <= jury_marginal_band ||
                std::abs(1.0 + tr + det) <= jury_marginal_band) {
                ++skipped;
                continue;
            }
            ++accepted;
            if (jury_2x2(m).stable != oracle::spectral_stable(m)) {
                ++disagree;
            }
        }

        const auto p4 = preset("ap-example4").ap;
        const auto polys = ap::stability_polys(p4);
        const double phi0 = ap::phi0(polys).phi0;
        const std::array<double, 2> e2{polys.i_star, polys.l_star};
        int poly_disagree = 0;
        for (int k = 0; k < 100; ++k) {
            const double phi = phi0 * (k + 0.5) / 100.0;
            const auto v = jury_2x2(ap::reduced_jacobian(e2, p4, phi));
            if ((polys.lambda1(phi) > 0.0) != v.cond1 || (polys.lambda2(phi) > 0.0) != v.cond2 ||
                (polys.lambda3(phi) > 0.0) != v.cond3) {
                ++poly_disagree;
            }
        }
        int beyond_disagree = 0;
        for (int k = 0; k < 100; ++k) {
            const double phi = phi0 * (1.0 + 3.0 * (k + 0.5) / 100.0);
            const auto v = jury_2x2(ap::reduced_jacobian(e2, p4, phi));
            const double q3 = polys.lambda3(phi);
            if (std::abs(q3) < 1e-9) {
                continue;
            }
            if ((polys.lambda1(phi) > 0.0) != v.cond1 || (polys.lambda2(phi) > 0.0) != v.cond2 ||
                (q3 > 0.0) != v.cond3) {
                ++beyond_disagree;
            }
        }
        r.measured = disagree + poly_disagree;
        r.tolerance = 0.0;
        r.passed = disagree == 0 && poly_disagree == 0;
        r.detail = std::to_string(disagree) + " of 1000 random matrices disagree (" + std::to_string(skipped) +
                   " boundary draws skipped); " + std::to_string(poly_disagree) +
                   " of 100 phi in (0, phi0) disagree; " + std::to_string(beyond_disagree) +
                   " of 100 phi in (phi0, 4 phi0) disagree";
    });
}

// ---------------------------------------------------------------------------
// C6

constexpr std::array<double, 5> instability_h{0.5, 1.0, 2.0, 4.0, 8.0};

/// Violation in the domain, or (keymer) a sum that overshoots s* or moves away from it.
std::optional<std::string> misbehaviour(const Trajectory& traj, const ExperimentConfig& cfg)
{
    if (const auto v = detect_violation(traj, domain_of(cfg.model))) {
        return std::string(to_string(v->kind)) + " at step " + std::to_string(v->index);
    }
    if (cfg.model != Model::keymer) {
        return std::nullopt;
    }
    const double ss = cfg.keymer.s_star();
    const auto s0 = traj.state(0);
    double prev = s0[0] + s0[1] - ss;
    for (std::size_t k = 1; k < traj.size(); ++k) {
        const auto s = traj.state(k);
        const double cur = s[0] + s[1] - ss;
        if (std::abs(cur) > std::abs(prev) + lyapunov_slack) {
            return "sum moves away from s* at step " + std::to_string(k);
        }
        if ((cur > lyapunov_slack && prev < -lyapunov_slack) || (cur < -lyapunov_slack && prev > lyapunov_slack)) {
            return "sum overshoots s* at step " + std::to_string(k);
        }
        prev = cur;
    }
    return std::nullopt;
}

CheckResult check_instability()
{
    return timed("C6", "instability contrast", 60.0, [](CheckResult& r) {
        int missing = 0;
        for (const std::string name : {"ap-example3", "keymer-example1", "keymer-example2"}) {
            auto cfg = preset(name);
            cfg.steps = 500;
            std::string found;
            for (double h : instability_h) {
                cfg.h = h;
                bool nsfd_clean = true;
                for (const auto& ic : cfg.initial) {
                    if (misbehaviour(run(cfg, SchemeKind::nsfd, ic), cfg)) {
                        nsfd_clean = false;
                    }
                }
                if (!nsfd_clean) {
                    continue;
                }
                for (SchemeKind sk : {SchemeKind::euler, SchemeKind::rk4}) {
                    for (std::size_t j = 0; j < cfg.initial.size() && found.empty(); ++j) {
                        if (const auto what = misbehaviour(run(cfg, sk, cfg.initial[j]), cfg)) {
                            found = "h=" + fmt(h) + " " + std::string(to_string(sk)) + " start " + std::to_string(j) +
                                    ": " + *what;
                        }
                    }
                }
                if (!found.empty()) {
                    break;
                }
            }
            if (found.empty()) {
                ++missing;
                r.detail += name + ": no contrast found; ";
            }
            else {
                r.detail += name + ": " + found + "; ";
            }
        }
        r.measured = missing;
        r.tolerance = 0.0;
        r.passed = missing == 0;
    });
}

// ---------------------------------------------------------------------------
// C7

double loglog_slope(const std::vector<double>& h, const std::vector<double>& err)
{
    double mx = 0.0;
    double my = 0.0;
    const double n = static_cast<double>(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
        mx += std::log(h[k]) / n;
        my += std::log(err[k]) / n;
    }
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
        const double dx = std::log(h[k]) - mx;
        sxy += dx * (std::log(err[k]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

CheckResult check_order(const VerificationContext& ctx)
{
    return timed("C7", "convergence order", 0.0, [&ctx](CheckResult& r) {
        constexpr double horizon = 1.0;
        const std::vector<double> hs{1e-1, 1e-2, 1e-3, 1e-4};
        r.tolerance = 0.15;
        r.passed = true;
        for (const auto& name : preset_names()) {
            const auto cfg = preset(name);
            const auto& ic = cfg.initial.front();
            VectorField rhs;
            if (cfg.model == Model::keymer) {
                rhs = [p = cfg.keymer](std::span<const double> s, std::span<double> out) {
                    const auto v = keymer::rhs(State2::from(s), p);
                    std::copy(v.begin(), v.end(), out.begin());
                };
            }
            else {
                rhs = [p = cfg.ap](std::span<const double> s, std::span<double> out) {
                    const auto v = ap::rhs(State4::from(s), p);
                    std::copy(v.begin(), v.end(), out.begin());
                };
            }
            const auto ref = oracle::rk4_reference(rhs, ic, horizon, 100000);
            std::vector<double> errs;
            for (double h : hs) {
                const auto n = static_cast<std::size_t>(std::llround(horizon / h));
                const double phi = cfg.resolved_denominator()(h);
                std::vector<double> last;
                if (cfg.model == Model::keymer) {
                    const auto sp = cfg.resolved_keymer_scheme();
                    State2 s = State2::from(ic);
                    for (std::size_t k = 0; k < n; ++k) {
                        s = ctx.keymer_step(s, cfg.keymer, sp, phi);
                    }
                    last = {s.x, s.y};
                }
                else {
                    State4 s = State4::from(ic);
                    for (std::size_t k = 0; k < n; ++k) {
                        s = ctx.ap_step(s, cfg.ap, phi);
                    }
                    const auto a = s.to_array();
                    last.assign(a.begin(), a.end());
                }
                errs.push_back(max_norm_distance(last, ref));
            }
            const double slope = loglog_slope(hs, errs);
            r.measured = std::max(r.measured, std::abs(slope - 1.0));
            r.detail += name + " nsfd slope " + fmt(slope) + "; ";
            if (!(std::abs(slope - 1.0) <= 0.15)) {
                r.passed = false;
            }
        }

        const VectorField decay = [](std::span<const double> s, std::span<double> out) {
            out[0] = -s[0];
        };
        const std::vector<double> hs_std{0.2, 0.1, 0.05, 0.025};
        for (const auto kind : {StandardScheme::Kind::euler, StandardScheme::Kind::rk2, StandardScheme::Kind::rk4}) {
            const StandardScheme scheme{kind};
            std::vector<double> errs;
            for (double h : hs_std) {
                std::vector<double> y{1.0};
                const auto n = static_cast<std::size_t>(std::llround(1.0 / h));
                for (std::size_t k = 0; k < n; ++k) {
                    y = standard_step(y, decay, h, scheme);
                }
                errs.push_back(std::abs(y[0] - std::exp(-1.0)));
            }
            const double slope = loglog_slope(hs_std, errs);
            r.detail += std::string(scheme.name()) + " slope " + fmt(slope) + "; ";
            if (!(std::abs(slope - scheme.order()) <= 0.1)) {
                r.passed = false;
            }
        }
    });
}

// ---------------------------------------------------------------------------
// C8

CheckResult check_jacobian()
{
    return timed("C8", "reduced-map Jacobian", 0.0, [](CheckResult& r) {
        constexpr double tol = 1e-5;
        constexpr double d = 1e-6;
        r.tolerance = tol;
        for (const std::string name : {"ap-example3", "ap-example4"}) {
            const auto cfg = preset(name);
            const auto eq = ap::equilibria(cfg.ap);
            std::vector<std::pair<std::string, std::array<double, 2>>> points{{"E1*", {0.0, 0.0}}};
            if (eq.e2_star) {
                points.push_back({"E2*", {eq.e2_star->i, eq.e2_star->l}});
            }
            for (double phi : {cfg.resolved_denominator()(1.0), 0.4}) {
                for (const auto& [label, pt] : points) {
                    const Mat2 j = ap::reduced_jacobian(pt, cfg.ap, phi);
                    const std::array<std::array<double, 2>, 2> analytic{{{j.a11, j.a12}, {j.a21, j.a22}}};
                    for (std::size_t col = 0; col < 2; ++col) {
                        auto plus = pt;
                        auto minus = pt;
                        plus[col] += d;
                        minus[col] -= d;
                        const auto fp = ap::reduced_map_phi(plus, cfg.ap, phi);
                        const auto fm = ap::reduced_map_phi(minus, cfg.ap, phi);
                        for (std::size_t row = 0; row < 2; ++row) {
                            const double fd = (fp[row] - fm[row]) / (2.0 * d);
                            const double err = std::abs(fd - analytic[row][col]);
                            if (err > r.measured) {
                                r.measured = err;
                            }
                            if (!(err <= tol)) {
                                r.detail += name + " " + label + " phi=" + fmt(phi) + " entry (" +
                                            std::to_string(row + 1) + "," + std::to_string(col + 1) + ") off by " +
                                            fmt(err) + "; ";
                            }
                        }
                    }
                }
            }
        }
        r.passed = r.measured <= tol;
        if (r.passed) {
            r.detail = "max entry deviation " + fmt(r.measured);
        }
    });
}

} // namespace

VerificationReport run_verification(const std::string& suite, const VerificationContext& ctx)
{
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        fail(ErrorCode::invalid_argument, "unknown verification suite '" + suite + "'");
    }
    VerificationReport rep;
    rep.suite = suite;
    const bool all = suite == "all";
    if (all || suite == "paper-numbers") {
        rep.checks.push_back(check_published_values());
        rep.checks.push_back(check_lambda_polys());
    }
    if (all || suite == "invariants") {
        rep.checks.push_back(check_dynamic_consistency(ctx));
    }
    if (all || suite == "oracle") {
        rep.checks.push_back(check_oracle(ctx));
    }
    if (all || suite == "jury") {
        rep.checks.push_back(check_jury());
    }
    if (all || suite == "instability") {
        rep.checks.push_back(check_instability());
    }
    if (all || suite == "order") {
        rep.checks.push_back(check_order(ctx));
    }
    if (all || suite == "jacobian") {
        rep.checks.push_back(check_jacobian());
    }
    return rep;
}

} // namespace metapop
