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

#include <algorithm>
#include <cmath>
#include <limits>

namespace metapop
{

std::string to_string(Classification c)
{
    switch (c) {
    case Classification::stable:
        return "stable";
    case Classification::unstable:
        return "unstable";
    case Classification::marginal:
        return "marginal";
    }
    return "?";
}

JuryVerdict jury_2x2(const Mat2& j)
{
    JuryVerdict v;
    v.det = j.det();
    v.trace = j.trace();
    const double q1 = 1.0 - v.det;
    const double q2 = 1.0 - v.trace + v.det;
    const double q3 = 1.0 + v.trace + v.det;
    v.cond1 = q1 > 0.0;
    v.cond2 = q2 > 0.0;
    v.cond3 = q3 > 0.0;
    v.stable = v.cond1 && v.cond2 && v.cond3;
    v.marginal = std::abs(q1) <= jury_marginal_band || std::abs(q2) <= jury_marginal_band ||
                 std::abs(q3) <= jury_marginal_band;
    return v;
}

double spectral_radius(const Mat2& j)
{
    const double tr = j.trace();
    const double det = j.det();
    const double disc = tr * tr - 4.0 * det;
    if (disc < 0.0) {
        return std::sqrt(det); // complex pair, |lambda|^2 = det
    }
    const double sq = std::sqrt(disc);
    return std::max(std::abs(0.5 * (tr + sq)), std::abs(0.5 * (tr - sq)));
}

double lyapunov_keymer(const State2& s, const keymer::Params& p)
{
    const double d = s.x + s.y - p.s_star();
    return d * d;
}

double lyapunov_ap(const State4& s, const ap::Params& p)
{
    const double da = s.i + s.s - p.a_star();
    const double db = s.l + s.r - p.b_star();
    return da * da + db * db;
}

namespace
{

template <class V>
LyapunovReport monitor(const Trajectory& traj, V&& lyap)
{
    LyapunovReport rep;
    if (traj.size() < 2) {
        return rep;
    }
    double prev = lyap(traj.state(0));
    rep.max_increase = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < traj.size(); ++k) {
        const double cur = lyap(traj.state(k));
        const double diff = cur - prev;
        if (!(diff <= rep.max_increase)) {
            rep.max_increase = std::isnan(diff) ? std::numeric_limits<double>::infinity() : diff;
            rep.index_of_max = k - 1;
        }
        prev = cur;
    }
    rep.dissipative = rep.max_increase <= lyapunov_slack;
    return rep;
}

} // namespace

LyapunovReport monitor_lyapunov(const Trajectory& traj, const keymer::Params& p)
{
    if (traj.dim() != 2) {
        fail(ErrorCode::invalid_argument, "keymer Lyapunov monitor needs a 2-component trajectory");
    }
    return monitor(traj, [&p](std::span<const double> s) { return lyapunov_keymer(State2::from(s), p); });
}

LyapunovReport monitor_lyapunov(const Trajectory& traj, const ap::Params& p)
{
    if (traj.dim() != 4) {
        fail(ErrorCode::invalid_argument, "ap Lyapunov monitor needs a 4-component trajectory");
    }
    return monitor(traj, [&p](std::span<const double> s) { return lyapunov_ap(State4::from(s), p); });
}

std::optional<std::size_t> detect_convergence(const Trajectory& traj, const std::vector<std::vector<double>>& targets,
                                              double tol, std::size_t tail)
{
    if (!(tol > 0.0)) {
        fail(ErrorCode::invalid_argument, "convergence tolerance must be > 0");
    }
    if (traj.empty()) {
        return std::nullopt;
    }
    const std::size_t first = traj.size() > tail ? traj.size() - tail : 0;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        bool close = true;
        for (std::size_t k = first; k < traj.size() && close; ++k) {
            close = max_norm_distance(traj.state(k), targets[t]) < tol;
        }
        if (close) {
            return t;
        }
    }
    return std::nullopt;
}

double StabilityReport::value(const std::string& name) const
{
    for (const auto* list : {&thresholds, &bounds}) {
        for (const auto& [k, v] : *list) {
            if (k == name) {
                return v;
            }
        }
    }
    fail(ErrorCode::invalid_argument, "stability report has no value named '" + name + "'");
}

const EquilibriumEntry& StabilityReport::equilibrium(const std::string& name) const
{
    for (const auto& e : equilibria) {
        if (e.name == name) {
            return e;
        }
    }
    fail(ErrorCode::invalid_argument, "stability report has no equilibrium named '" + name + "'");
}

StabilityReport analyze(const keymer::Params& p, const std::optional<keymer::SchemeParams>& scheme)
{
    const auto eq = keymer::equilibria(p);
    StabilityReport rep;
    rep.model = "keymer";
    rep.thresholds = {{"R0", eq.r0}, {"s_star", eq.s_star}};

    Classification c1 = Classification::marginal;
    Classification c2 = Classification::marginal;
    if (std::abs(eq.r0 - 1.0) > 1e-12) {
        c1 = eq.r0 < 1.0 ? Classification::stable : Classification::unstable;
        c2 = eq.r0 < 1.0 ? Classification::unstable : Classification::stable;
    }
    else {
        rep.notes.emplace_back("R0 = 1: threshold case, no classification claimed");
    }
    rep.equilibria.push_back({"P1*", {eq.p1_star.x, eq.p1_star.y}, true, c1, std::nullopt});
    rep.equilibria.push_back({"P2*", {eq.p2_star[0], eq.p2_star[1]}, eq.p2_in_domain, c2, std::nullopt});

    rep.bounds.emplace_back("c1_max", -p.delta / (p.lambda + p.e));
    if (scheme) {
        rep.scheme_validity = keymer::validate_scheme(p, *scheme);
        rep.bounds.emplace_back("c_star", rep.scheme_validity->cstar);
        if (!rep.scheme_validity->valid) {
            for (const auto& f : rep.scheme_validity->failures()) {
                rep.notes.push_back("scheme condition failed: " + f);
            }
        }
        if (scheme->sums_ok()) {
            const auto cert = keymer::reduced_monotonicity_certificate(p, *scheme);
            rep.bounds.emplace_back("reduced_map_min_slope", cert.min_slope);
        }
    }
    return rep;
}

StabilityReport analyze(const ap::Params& p, std::optional<double> phi)
{
    const auto q = ap::quadratic(p);
    const auto eq = ap::equilibria(p);
    const auto threshold = ap::classify_threshold(q.c);
    StabilityReport rep;
    rep.model = "ap";
    rep.thresholds = {{"a", q.a}, {"b", q.b}, {"c", q.c}, {"gamma", q.gamma}, {"R0", q.r0},
                      {"discriminant", q.discriminant()}};

    Classification c1 = Classification::marginal;
    Classification c2 = Classification::marginal;
    if (threshold == ap::ThresholdCase::boundary_stable) {
        c1 = Classification::stable;
        c2 = Classification::unstable;
    }
    else if (threshold == ap::ThresholdCase::interior_stable) {
        c1 = Classification::unstable;
        c2 = Classification::stable;
    }
    else {
        rep.notes.emplace_back("c = 0: threshold-degenerate, no classification claimed");
    }

    EquilibriumEntry e1{"E1*", {eq.e1_star.i, eq.e1_star.s, eq.e1_star.l, eq.e1_star.r}, true, c1, std::nullopt};
    if (phi) {
        e1.jury = jury_2x2(ap::reduced_jacobian({0.0, 0.0}, p, *phi));
    }
    rep.equilibria.push_back(std::move(e1));
    if (eq.e2_star) {
        const auto& e = *eq.e2_star;
        EquilibriumEntry e2{"E2*", {e.i, e.s, e.l, e.r}, eq.e2_in_domain, c2, std::nullopt};
        if (phi) {
            e2.jury = jury_2x2(ap::reduced_jacobian({e.i, e.l}, p, *phi));
        }
        rep.equilibria.push_back(std::move(e2));
    }
    else {
        rep.notes.emplace_back("interior equilibrium is complex (b^2 - 4ac < 0)");
    }

    const auto bound = ap::phi_bound(p);
    rep.bounds.emplace_back("phi_star", bound.phi_star);
    for (const auto& cand : bound.candidates) {
        rep.bounds.push_back(cand);
    }
    rep.bounds.emplace_back("positivity_bound", ap::positivity_bound(p));
    if (bound.phi0) {
        rep.bounds.emplace_back("phi1_star", bound.phi0->roots[0]);
        rep.bounds.emplace_back("phi2_star", bound.phi0->roots[1]);
        rep.bounds.emplace_back("phi3_star", bound.phi0->roots[2]);
    }
    if (std::isfinite(bound.phi_star)) {
        rep.bounds.emplace_back("default_tau", default_tau(bound.phi_star));
    }
    if (phi) {
        rep.bounds.emplace_back("phi", *phi);
        if (!(*phi < bound.phi_star)) {
            rep.notes.emplace_back("phi >= phi_star: preservation guarantees do not apply");
        }
    }
    if (threshold == ap::ThresholdCase::interior_stable && !eq.e2_in_domain) {
        rep.notes.emplace_back("c < 0 but the interior equilibrium is not in D4");
    }
    return rep;
}

} // namespace metapop
