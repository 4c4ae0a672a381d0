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
#ifndef METAPOP_TRAJECTORY_HPP
#define METAPOP_TRAJECTORY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace metapop
{

/// States x_0 ... x_N of one run, stored row-major, together with the step
/// size and the phi(h) that produced them. Time of row k is k * h.
class Trajectory
{
public:
    Trajectory(std::string scheme, std::size_t dim, double h, double phi);

    const std::string& scheme() const
    {
        return m_scheme;
    }
    std::size_t dim() const
    {
        return m_dim;
    }
    double h() const
    {
        return m_h;
    }
    double phi() const
    {
        return m_phi;
    }
    std::size_t size() const
    {
        return m_dim == 0 ? 0 : m_data.size() / m_dim;
    }
    bool empty() const
    {
        return m_data.empty();
    }

    void reserve(std::size_t states)
    {
        m_data.reserve(states * m_dim);
    }
    void push_back(std::span<const double> state);

    /// Views into the stored states; not available on temporaries.
    std::span<const double> state(std::size_t k) const&
    {
        return {m_data.data() + k * m_dim, m_dim};
    }
    std::span<const double> back() const&
    {
        return state(size() - 1);
    }
    std::span<const double> state(std::size_t k) const&& = delete;
    std::span<const double> back() const&& = delete;
    double time(std::size_t k) const
    {
        return static_cast<double>(k) * m_h;
    }

private:
    std::string m_scheme;
    std::size_t m_dim;
    double m_h;
    double m_phi;
    std::vector<double> m_data;
};

} // namespace metapop

#endif // METAPOP_TRAJECTORY_HPP
