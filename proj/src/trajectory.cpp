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
#include "metapop/trajectory.hpp"
#include "metapop/error.hpp"

namespace metapop
{

Trajectory::Trajectory(std::string scheme, std::size_t dim, double h, double phi)
    : m_scheme(std::move(scheme))
    , m_dim(dim)
    , m_h(h)
    , m_phi(phi)
{
    if (dim == 0) {
        fail(ErrorCode::invalid_argument, "trajectory dimension must be positive");
    }
    if (!(h > 0.0) || !(phi > 0.0)) {
        fail(ErrorCode::invalid_argument, "trajectory needs h > 0 and phi(h) > 0");
    }
}

void Trajectory::push_back(std::span<const double> state)
{
    if (state.size() != m_dim) {
        fail(ErrorCode::invalid_argument, "trajectory state has wrong dimension");
    }
    m_data.insert(m_data.end(), state.begin(), state.end());
}

} // namespace metapop
