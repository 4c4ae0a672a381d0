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
#include "metapop/ap_nsfd.hpp"
#include "metapop/error.hpp"
#include "metapop/keymer_nsfd.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace metapop
{

const std::vector<std::string>& preset_names()
{
    static const std::vector<std::string> names{"keymer-example1", "keymer-example2", "ap-example3", "ap-example4"};
    return names;
}

ExperimentConfig preset(std::string_view name)
{
    ExperimentConfig cfg;
    cfg.name = std::string(name);
    cfg.output = "out";
    if (name == "keymer-example1" || name == "keymer-example2") {
        cfg.model = Model::keymer;
        // R0 = 0.4: the boundary equilibrium (0.25, 0) attracts everything
        cfg.keymer = name == "keymer-example1" ? keymer::Params{0.8, 0.1, 0.2, 0.3}
                                               // e = 1 contradicts R0 = 3.75 and P2* = (0.2, 0.55);
                                               // e = 0.1 reproduces both
                                               : keymer::Params{2.0, 0.3, 0.3, 0.1};
        cfg.keymer_scheme = {-17.0, 18.0, -1.0, 2.0, DenominatorSpec::identity()};
        cfg.denominator = DenominatorSpec::identity();
        cfg.h = 1.0;
        cfg.steps = name == "keymer-example1" ? 200 : 500;
        cfg.initial = {{0.9, 0.05}, {0.1, 0.8}, {0.5, 0.25}, {0.05, 0.05}, {0.2, 0.0}};
        return cfg;
    }
    if (name == "ap-example3" || name == "ap-example4") {
        cfg.model = Model::ap;
        if (name == "ap-example3") {
            cfg.ap = {.beta_i = 0.4, .beta_l = 0.25, .e_i = 0.1, .e_l = 1.0, .f = 0.25, .g = 0.75};
            cfg.denominator = DenominatorSpec::exponential(2.0);
        }
        else {
            cfg.ap = {.beta_i = 0.8, .beta_l = 2.0, .e_i = 0.25, .e_l = 0.1, .f = 0.2, .g = 0.75};
            cfg.denominator = DenominatorSpec::exponential(1.1);
        }
        cfg.h = 1.0;
        cfg.steps = 500;
        cfg.initial = {{0.25, 0.25, 0.25, 0.25}, {0.7, 0.1, 0.1, 0.1}, {0.05, 0.05, 0.1, 0.8}, {0.1, 0.6, 0.2, 0.1}};
        return cfg;
    }
    fail(ErrorCode::invalid_argument, "unknown preset '" + std::string(name) + "'");
}

double effective_phi(const ExperimentConfig& cfg, SchemeKind scheme)
{
    return scheme == SchemeKind::nsfd ? cfg.resolved_denominator()(cfg.h) : cfg.h;
}

namespace
{

VectorField model_rhs(const ExperimentConfig& cfg)
{
    if (cfg.model == Model::keymer) {
        return [p = cfg.keymer](std::span<const double> s, std::span<double> out) {
            const auto r = keymer::rhs(State2::from(s), p);
            out[0] = r[0];
            out[1] = r[1];
        };
    }
    return [p = cfg.ap](std::span<const double> s, std::span<double> out) {
        const auto r = ap::rhs(State4::from(s), p);
        std::copy(r.begin(), r.end(), out.begin());
    };
}

StandardScheme to_standard(SchemeKind s)
{
    switch (s) {
    case SchemeKind::euler:
        return {StandardScheme::Kind::euler};
    case SchemeKind::rk2:
        return {StandardScheme::Kind::rk2};
    case SchemeKind::rk4:
        return {StandardScheme::Kind::rk4};
    case SchemeKind::nsfd:
        break;
    }
    fail(ErrorCode::internal, "nsfd is not a standard scheme");
}

} // namespace

Stepper make_stepper(const ExperimentConfig& cfg, SchemeKind scheme)
{
    if (scheme == SchemeKind::nsfd) {
        const double phi = effective_phi(cfg, scheme);
        if (cfg.model == Model::keymer) {
            return [p = cfg.keymer, sp = cfg.resolved_keymer_scheme(), phi](std::span<const double> s) {
                const auto n = keymer::nsfd_step_phi(State2::from(s), p, sp, phi);
                return std::vector<double>{n.x, n.y};
            };
        }
        return [p = cfg.ap, phi](std::span<const double> s) {
            const auto n = ap::nsfd_step_phi(State4::from(s), p, phi);
            return std::vector<double>{n.i, n.s, n.l, n.r};
        };
    }
    return [rhs = model_rhs(cfg), h = cfg.h, std = to_standard(scheme)](std::span<const double> s) {
        return standard_step(s, rhs, h, std);
    };
}

Trajectory run(const ExperimentConfig& cfg, SchemeKind scheme, std::span<const double> initial)
{
    const std::size_t dim = dimension(domain_of(cfg.model));
    Trajectory traj(std::string(to_string(scheme)), dim, cfg.h, effective_phi(cfg, scheme));
    traj.reserve(cfg.steps + 1);
    traj.push_back(initial);
    const Stepper step = make_stepper(cfg, scheme);
    std::vector<double> cur(initial.begin(), initial.end());
    for (std::size_t k = 0; k < cfg.steps; ++k) {
        cur = step(cur);
        traj.push_back(cur);
    }
    return traj;
}

std::vector<Trajectory> simulate(const ExperimentConfig& cfg)
{
    cfg.validate();
    std::vector<Trajectory> out;
    out.reserve(cfg.initial.size());
    for (const auto& ic : cfg.initial) {
        out.push_back(run(cfg, cfg.scheme, ic));
    }
    return out;
}

std::vector<std::vector<double>> model_equilibria(const ExperimentConfig& cfg)
{
    if (cfg.model == Model::keymer) {
        const auto eq = keymer::equilibria(cfg.keymer);
        return {{eq.p1_star.x, eq.p1_star.y}, {eq.p2_star[0], eq.p2_star[1]}};
    }
    const auto eq = ap::equilibria(cfg.ap);
    std::vector<std::vector<double>> out{{eq.e1_star.i, eq.e1_star.s, eq.e1_star.l, eq.e1_star.r}};
    if (eq.e2_star) {
        out.push_back({eq.e2_star->i, eq.e2_star->s, eq.e2_star->l, eq.e2_star->r});
    }
    return out;
}

StabilityReport analyze(const ExperimentConfig& cfg)
{
    if (cfg.model == Model::keymer) {
        cfg.keymer.validate();
        return analyze(cfg.keymer, cfg.resolved_keymer_scheme());
    }
    cfg.ap.validate();
    std::optional<double> phi;
    if (std::isfinite(cfg.h) && cfg.h > 0.0) {
        phi = cfg.resolved_denominator()(cfg.h);
    }
    return analyze(cfg.ap, phi);
}

void write_csv(std::ostream& out, const Trajectory& traj, Model model)
{
    out << (model == Model::keymer ? "k,t,x,y\n" : "k,t,I,S,L,R\n");
    for (std::size_t k = 0; k < traj.size(); ++k) {
        out << k << ',' << format_double17(traj.time(k));
        for (double v : traj.state(k)) {
            out << ',' << format_double17(v);
        }
        out << '\n';
    }
}

void write_csv(const std::string& path, const Trajectory& traj, Model model)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(ErrorCode::io, "cannot open '" + path + "' for writing");
    }
    write_csv(out, traj, model);
    out.flush();
    if (!out) {
        fail(ErrorCode::io, "write to '" + path + "' failed");
    }
}

namespace
{

void ensure_dir(const std::string& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        fail(ErrorCode::io, "cannot create output directory '" + dir + "': " + ec.message());
    }
}

} // namespace

std::vector<SimulationOutput> simulate_to_files(const ExperimentConfig& cfg, const std::string& dir)
{
    const auto trajs = simulate(cfg);
    ensure_dir(dir);
    std::vector<SimulationOutput> out;
    for (std::size_t j = 0; j < trajs.size(); ++j) {
        const auto path = (std::filesystem::path(dir) /
                           (cfg.name + "_" + std::string(to_string(cfg.scheme)) + "_ic" + std::to_string(j) + ".csv"))
                              .string();
        write_csv(path, trajs[j], cfg.model);
        const auto last = trajs[j].back();
        out.push_back({path, {last.begin(), last.end()}, trajs[j].size()});
    }
    return out;
}

CompareResult compare(const ExperimentConfig& cfg, const std::string& dir)
{
    cfg.validate();
    if (cfg.compare_schemes.size() < 2) {
        fail(ErrorCode::invalid_argument, "compare needs at least two schemes");
    }
    ensure_dir(dir);
    const auto equilibria = model_equilibria(cfg);
    const Domain domain = domain_of(cfg.model);
    CompareResult res;
    for (std::size_t pos = 0; pos < cfg.compare_schemes.size(); ++pos) {
        const SchemeKind scheme = cfg.compare_schemes[pos];
        for (std::size_t j = 0; j < cfg.initial.size(); ++j) {
            const Trajectory traj = run(cfg, scheme, cfg.initial[j]);
            CompareEntry e;
            e.position = pos;
            e.scheme = scheme;
            e.initial_index = j;
            e.file = (std::filesystem::path(dir) / (cfg.name + "_cmp" + std::to_string(pos) + "_" +
                                                    std::string(to_string(scheme)) + "_ic" + std::to_string(j) + ".csv"))
                         .string();
            write_csv(e.file, traj, cfg.model);
            e.violation = detect_violation(traj, domain);
            e.lyapunov_max_increase = cfg.model == Model::keymer ? monitor_lyapunov(traj, cfg.keymer).max_increase
                                                                 : monitor_lyapunov(traj, cfg.ap).max_increase;
            e.spurious = detect_spurious_fixed_point(traj, equilibria);
            const auto last = traj.back();
            e.final_state.assign(last.begin(), last.end());
            res.entries.push_back(std::move(e));
        }
    }
    return res;
}

} // namespace metapop
