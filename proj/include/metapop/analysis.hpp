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
#ifndef METAPOP_ANALYSIS_HPP
#define METAPOP_ANALYSIS_HPP

#include "metapop/ap_model.hpp"
#include "metapop/denominator.hpp"
#include "metapop/keymer_model.hpp"
#include "metapop/keymer_nsfd.hpp"
#include "metapop/matrix2.hpp"
#include "metapop/trajectory.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metapop
{

/// Width of the band around each Jury inequality inside which the verdict is
/// reported as marginal.
inline constexpr double jury_marginal_band = 1e-9;

enum class Classification { stable, unstable, marginal };

std::string to_string(Classification c);

/// The three Jury inequalities for a 2x2 discrete-time Jacobian. Both
/// eigenvalues lie strictly inside the unit disc iff all three hold.
struct JuryVerdict {
    double det = 0.0;
    double trace = 0.0;
    bool cond1 = false; // det < 1
    bool cond2 = false; // 1 - trace + det > 0
    bool cond3 = false; // 1 + trace + det > 0
    bool stable = false;
    bool marginal = false; // some condition within jury_marginal_band of equality

    Classification classification() const
    {
        return marginal ? Classification::marginal : (stable ? Classification::stable : Classification::unstable);
    }
};

JuryVerdict jury_2x2(const Mat2& j);

/// Largest eigenvalue modulus, from the roots of the characteristic quadratic.
double spectral_radius(const Mat2& j);

/// (x + y - s*)^2
double lyapunov_keymer(const State2& s, const keymer::Params& p);
/// (I + S - f/(f+g))^2 + (L + R - g/(f+g))^2
double lyapunov_ap(const State4& s, const ap::Params& p);

inline constexpr double lyapunov_slack = 1e-12;

struct LyapunovReport {
    double max_increase = 0.0; // max over k of V(x_{k+1}) - V(x_k); 0 for a single state
    std::size_t index_of_max = 0;
    bool dissipative = true; // max_increase <= lyapunov_slack
};

LyapunovReport monitor_lyapunov(const Trajectory& traj, const keymer::Params& p);
LyapunovReport monitor_lyapunov(const Trajectory& traj, const ap::Params& p);

/// Index of the first target within `tol` (max-norm) of each of the last
/// `tail` states, or nullopt.
std::optional<std::size_t> detect_convergence(const Trajectory& traj, const std::vector<std::vector<double>>& targets,
                                              double tol, std::size_t tail = 10);

struct EquilibriumEntry {
    std::string name;
    std::vector<double> coordinates;
    bool in_domain = false;
    Classification classification = Classification::marginal;
    std::optional<JuryVerdict> jury; // AP reduced map only, when a phi is supplied
};

/// Equilibria, thresholds and step-size bounds of one model, with the
/// designated stable equilibrium according to the threshold sign.
struct StabilityReport {
    std::string model;
    std::vector<EquilibriumEntry> equilibria;
    std::vector<std::pair<std::string, double>> thresholds;
    std::vector<std::pair<std::string, double>> bounds;
    std::optional<keymer::ValidityReport> scheme_validity;
    std::vector<std::string> notes;

    /// Value of a named threshold or bound; throws if absent.
    double value(const std::string& name) const;
    const EquilibriumEntry& equilibrium(const std::string& name) const;
};

StabilityReport analyze(const keymer::Params& p, const std::optional<keymer::SchemeParams>& scheme = std::nullopt);

/// When `phi` is set, the reduced-map Jacobian at each equilibrium is checked
/// with jury_2x2 at that phi.
StabilityReport analyze(const ap::Params& p, std::optional<double> phi = std::nullopt);

} // namespace metapop

#endif // METAPOP_ANALYSIS_HPP
