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
#ifndef METAPOP_STANDARD_SCHEMES_HPP
#define METAPOP_STANDARD_SCHEMES_HPP

#include "metapop/state.hpp"
#include "metapop/trajectory.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace metapop
{

/// Explicit fixed-step methods used as a baseline. Results are never
/// projected, clamped or renormalized.
struct StandardScheme {
    enum class Kind {
        euler, // order 1
        rk2,   // Heun's method, order 2
        rk4,   // classical four-stage, order 4
    };
    Kind kind = Kind::euler;

    int order() const;
    std::string_view name() const;
    static std::optional<StandardScheme> parse(std::string_view name);
};

/// Autonomous vector field: writes f(state) into `out`.
using VectorField = std::function<void(std::span<const double> state, std::span<double> out)>;

std::vector<double> standard_step(std::span<const double> state, const VectorField& rhs, double h,
                                  StandardScheme scheme);

struct Violation {
    enum class Kind {
        negative,   // a component below -domain_tolerance
        sum_drift,  // D4: |sum - 1| > 1e-6; D2: sum > 1 + 1e-6
        non_finite, // NaN or infinity
    };
    std::size_t index = 0;
    Kind kind = Kind::negative;
};

std::string_view to_string(Violation::Kind kind);

inline constexpr double sum_drift_tolerance = 1e-6;

/// First state of the trajectory that leaves the domain, or nullopt.
std::optional<Violation> detect_violation(const Trajectory& traj, Domain domain);

/// A limit that is not an equilibrium: the last `tail` states agree to
/// `settle_tol` yet differ from every target by more than `distance`.
struct SpuriousFixedPoint {
    std::vector<double> limit;
    double distance_to_nearest = 0.0;
};

std::optional<SpuriousFixedPoint> detect_spurious_fixed_point(const Trajectory& traj,
                                                              const std::vector<std::vector<double>>& equilibria,
                                                              double distance = 1e-3, double settle_tol = 1e-10,
                                                              std::size_t tail = 10);

} // namespace metapop

#endif // METAPOP_STANDARD_SCHEMES_HPP
