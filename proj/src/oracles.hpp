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
#ifndef METAPOP_ORACLES_HPP
#define METAPOP_ORACLES_HPP

#include "metapop/ap_model.hpp"
#include "metapop/keymer_model.hpp"
#include "metapop/matrix2.hpp"
#include "metapop/polynomial.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace metapop::oracle
{

/// All eight weights of the implicit keymer scheme, unconstrained.
struct KeymerWeights {
    std::array<double, 8> c{}; // c[0] = c1 ... c[7] = c8
};

/// Solves the implicit keymer relations for (x_{k+1}, y_{k+1}) by Newton
/// iteration with the exact Jacobian, started from the current state.
/// Returns nullopt if the iteration does not settle.
std::optional<State2> keymer_implicit_solve(const State2& s, const keymer::Params& p, const KeymerWeights& w,
                                            double phi);

/// Residual of the implicit AP scheme at a candidate next state.
std::array<double, 4> ap_residual(const State4& cur, const State4& next, const ap::Params& p, double phi);

/// Solves the implicit AP relations by Newton iteration with a forward
/// difference Jacobian and Gaussian elimination.
std::optional<State4> ap_implicit_solve(const State4& s, const ap::Params& p, double phi);

/// Stable iff both eigenvalues, computed as complex numbers, have modulus < 1.
bool spectral_stable(const Mat2& j);
double spectral_radius_complex(const Mat2& j);

/// Smallest root of f in (0, hi] found by scanning `samples` log-spaced grid
/// points in [lo, hi] for a sign change and bisecting; nullopt if none.
std::optional<double> grid_smallest_positive_root(const std::function<double(double)>& f, double hi,
                                                  std::size_t samples = 200000, double lo = 1e-9);

/// Classical RK4 from t = 0 to t = T with n steps.
std::vector<double> rk4_reference(const std::function<void(std::span<const double>, std::span<double>)>& rhs,
                                  std::vector<double> y, double T, std::size_t n);

} // namespace metapop::oracle

#endif // METAPOP_ORACLES_HPP
