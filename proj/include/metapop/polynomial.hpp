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
#ifndef METAPOP_POLYNOMIAL_HPP
#define METAPOP_POLYNOMIAL_HPP

#include <optional>
#include <vector>

namespace metapop
{

/// Real polynomial with coefficients stored constant-first.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    const std::vector<double>& coefficients() const
    {
        return m_coeffs;
    }
    /// Coefficient of t^k, zero past the stored length.
    double coeff(std::size_t k) const
    {
        return k < m_coeffs.size() ? m_coeffs[k] : 0.0;
    }
    /// Index of the highest nonzero coefficient (0 for the zero polynomial).
    std::size_t degree() const;

    double operator()(double t) const;
    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

private:
    std::vector<double> m_coeffs;
};

/// All real roots in [lo, hi], ascending. Monotone pieces are delimited by the
/// roots of the derivative (found recursively); each piece with a sign change
/// is bisected until its width drops below tol * max(1, |t|). Roots of even
/// multiplicity are found only when a critical value is exactly zero.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi, double tol = 1e-10);

/// Smallest root in (0, hi], or nullopt.
std::optional<double> smallest_positive_root(const Polynomial& p, double hi, double tol = 1e-10);

} // namespace metapop

#endif // METAPOP_POLYNOMIAL_HPP
