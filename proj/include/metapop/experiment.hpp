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
#ifndef METAPOP_EXPERIMENT_HPP
#define METAPOP_EXPERIMENT_HPP

#include "metapop/analysis.hpp"
#include "metapop/config.hpp"
#include "metapop/standard_schemes.hpp"
#include "metapop/trajectory.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace metapop
{

/// Names accepted by preset(): keymer-example1, keymer-example2, ap-example3,
/// ap-example4.
const std::vector<std::string>& preset_names();

/// Throws Error(invalid_argument) for an unknown name.
ExperimentConfig preset(std::string_view name);

/// Advances `state` by one step of `scheme` for the configured model.
using Stepper = std::function<std::vector<double>(std::span<const double> state)>;

Stepper make_stepper(const ExperimentConfig& cfg, SchemeKind scheme);

/// phi(h) for NSFD, h for the standard schemes.
double effective_phi(const ExperimentConfig& cfg, SchemeKind scheme);

Trajectory run(const ExperimentConfig& cfg, SchemeKind scheme, std::span<const double> initial);

/// One trajectory per initial state, with cfg.scheme.
std::vector<Trajectory> simulate(const ExperimentConfig& cfg);

/// Equilibria of the configured model, as plain vectors.
std::vector<std::vector<double>> model_equilibria(const ExperimentConfig& cfg);

StabilityReport analyze(const ExperimentConfig& cfg);

/// Header "k,t,<components>" then one row per state, numbers with 17
/// significant digits, '\n' line endings.
void write_csv(std::ostream& out, const Trajectory& traj, Model model);
void write_csv(const std::string& path, const Trajectory& traj, Model model);

struct SimulationOutput {
    std::string file;
    std::vector<double> final_state;
    std::size_t states = 0;
};

/// Simulates every initial state and writes `<dir>/<name>_<scheme>_ic<j>.csv`.
std::vector<SimulationOutput> simulate_to_files(const ExperimentConfig& cfg, const std::string& dir);

struct CompareEntry {
    std::size_t position = 0; // index into compare_schemes
    SchemeKind scheme = SchemeKind::nsfd;
    std::size_t initial_index = 0;
    std::string file;
    std::optional<Violation> violation;
    double lyapunov_max_increase = 0.0;
    std::optional<SpuriousFixedPoint> spurious;
    std::vector<double> final_state;
};

struct CompareResult {
    std::vector<CompareEntry> entries;
};

/// Runs every scheme of cfg.compare_schemes (at least two) from every initial
/// state, writing `<dir>/<name>_cmp<pos>_<scheme>_ic<j>.csv`.
CompareResult compare(const ExperimentConfig& cfg, const std::string& dir);

} // namespace metapop

#endif // METAPOP_EXPERIMENT_HPP
