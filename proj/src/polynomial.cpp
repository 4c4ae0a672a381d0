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
#include "metapop/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace metapop
{

Polynomial::Polynomial(std::vector<double> coeffs)
    : m_coeffs(std::move(coeffs))
{
}

std::size_t Polynomial::degree() const
{
    for (std::size_t k = m_coeffs.size(); k-- > 0;) {
        if (m_coeffs[k] != 0.0) {
            return k;
        }
    }
    return 0;
}

double Polynomial::operator()(double t) const
{
    double acc = 0.0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (m_coeffs.size() <= 1) {
        return Polynomial({0.0});
    }
    std::vector<double> d(m_coeffs.size() - 1);
    for (std::size_t k = 1; k < m_coeffs.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * m_coeffs[k];
    }
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<double> c(std::max(a.m_coeffs.size(), b.m_coeffs.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a.coeff(k) + b.coeff(k);
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    std::vector<double> c(std::max(a.m_coeffs.size(), b.m_coeffs.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a.coeff(k) - b.coeff(k);
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.m_coeffs.empty() || b.m_coeffs.empty()) {
        return {};
    }
    std::vector<double> c(a.m_coeffs.size() + b.m_coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            c[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return Polynomial(std::move(c));
}

namespace
{

double bisect(const Polynomial& p, double lo, double hi, double tol)
{
    double flo = p(lo);
    while (hi - lo > tol * std::max(1.0, std::abs(lo))) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double fmid = p(mid);
        if (fmid == 0.0) {
            return mid;
        }
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        }
        else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> real_roots(const Polynomial& p, double lo, double hi, double tol)
{
    std::vector<double> roots;
    const std::size_t deg = p.degree();
    if (deg == 0 || !(lo < hi)) {
        return roots;
    }
    // breakpoints: interval ends plus interior critical points
    std::vector<double> breaks{lo};
    if (deg >= 2) {
        for (double c : real_roots(p.derivative(), lo, hi, tol)) {
            if (c > lo && c < hi) {
                breaks.push_back(c);
            }
        }
    }
    breaks.push_back(hi);

    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double a = breaks[k];
        const double b = breaks[k + 1];
        const double fa = p(a);
        const double fb = p(b);
        if (fa == 0.0) {
            roots.push_back(a);
            continue;
        }
        if (fb == 0.0) {
            continue; // picked up as the left end of the next piece, or below
        }
        if ((fa < 0.0) != (fb < 0.0)) {
            roots.push_back(bisect(p, a, b, tol));
        }
    }
    if (p(hi) == 0.0) {
        roots.push_back(hi);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<double> smallest_positive_root(const Polynomial& p, double hi, double tol)
{
    for (double r : real_roots(p, 0.0, hi, tol)) {
        if (r > 0.0) {
            return r;
        }
    }
    return std::nullopt;
}

} // namespace metapop
