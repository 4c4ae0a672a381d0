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
#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <utility>

namespace metapop::oracle
{

std::optional<State2> keymer_implicit_solve(const State2& s, const keymer::Params& p, const KeymerWeights& w,
                                            double phi)
{
    const auto& c = w.c;
    const double le = p.lambda + p.e;
    const double x0 = s.x;
    const double y0 = s.y;
    double x = x0;
    double y = y0;
    for (int it = 0; it < 100; ++it) {
        const double fx = x - x0 -
                          phi * (-c[0] * le * x0 - c[1] * le * x + c[2] * (p.delta - p.lambda) * y0 +
                                 c[3] * (p.delta - p.lambda) * y - c[4] * p.beta * x0 * y0 - c[5] * p.beta * x * y0 -
                                 c[6] * p.beta * x0 * y - c[7] * p.beta * x * y + p.lambda);
        const double fy = y - y0 -
                          phi * (-c[0] * le * y0 - c[1] * le * y + c[2] * (p.lambda - p.delta) * y0 +
                                 c[3] * (p.lambda - p.delta) * y + c[4] * p.beta * x0 * y0 + c[5] * p.beta * x * y0 +
                                 c[6] * p.beta * x0 * y + c[7] * p.beta * x * y);
        const double j11 = 1.0 + phi * (c[1] * le + c[5] * p.beta * y0 + c[7] * p.beta * y);
        const double j12 = -phi * (c[3] * (p.delta - p.lambda) - c[6] * p.beta * x0 - c[7] * p.beta * x);
        const double j21 = -phi * (c[5] * p.beta * y0 + c[7] * p.beta * y);
        const double j22 = 1.0 + phi * (c[1] * le - c[3] * (p.lambda - p.delta) - c[6] * p.beta * x0 - c[7] * p.beta * x);
        const double det = j11 * j22 - j12 * j21;
        if (det == 0.0 || !std::isfinite(det)) {
            return std::nullopt;
        }
        const double dx = (fx * j22 - fy * j12) / det;
        const double dy = (j11 * fy - j21 * fx) / det;
        x -= dx;
        y -= dy;
        if (std::abs(dx) <= 1e-16 * (1.0 + std::abs(x)) && std::abs(dy) <= 1e-16 * (1.0 + std::abs(y))) {
            return State2{x, y};
        }
        if (it > 3 && std::abs(dx) + std::abs(dy) < 1e-15) {
            return State2{x, y};
        }
    }
    return std::nullopt;
}

std::array<double, 4> ap_residual(const State4& cur, const State4& next, const ap::Params& p, double phi)
{
    const double ik = cur.i;
    return {
        next.s - cur.s - phi * (p.e_i * ik - p.beta_i * next.s * ik + p.f * cur.r - p.g * cur.s),
        next.i - cur.i - phi * (p.beta_i * next.s * ik - p.e_i * ik + p.f * cur.l - p.g * ik),
        next.r - cur.r - phi * (p.g * cur.s - p.f * cur.r + p.e_l * cur.l - p.beta_l * next.r * ik),
        next.l - cur.l - phi * (p.g * ik - p.f * cur.l - p.e_l * cur.l + p.beta_l * next.r * ik),
    };
}

namespace
{

using Vec4 = std::array<double, 4>;

State4 from_vec(const Vec4& v)
{
    return {v[1], v[0], v[3], v[2]}; // unknown order is S, I, R, L
}

Vec4 to_vec(const State4& s)
{
    return {s.s, s.i, s.r, s.l};
}

bool gauss_solve(std::array<Vec4, 4> a, Vec4 b, Vec4& x)
{
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < 4; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) {
                piv = r;
            }
        }
        if (a[piv][col] == 0.0) {
            return false;
        }
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < 4; ++r) {
            const double m = a[r][col] / a[col][col];
            for (std::size_t k = col; k < 4; ++k) {
                a[r][k] -= m * a[col][k];
            }
            b[r] -= m * b[col];
        }
    }
    for (std::size_t r = 4; r-- > 0;) {
        double acc = b[r];
        for (std::size_t k = r + 1; k < 4; ++k) {
            acc -= a[r][k] * x[k];
        }
        x[r] = acc / a[r][r];
    }
    return true;
}

} // namespace

std::optional<State4> ap_implicit_solve(const State4& s, const ap::Params& p, double phi)
{
    Vec4 u = to_vec(s);
    for (int it = 0; it < 50; ++it) {
        const Vec4 f = ap_residual(s, from_vec(u), p, phi);
        std::array<Vec4, 4> jac{};
        for (std::size_t k = 0; k < 4; ++k) {
            Vec4 up = u;
            const double d = 1e-7 * (1.0 + std::abs(u[k]));
            up[k] += d;
            const Vec4 fp = ap_residual(s, from_vec(up), p, phi);
            for (std::size_t r = 0; r < 4; ++r) {
                jac[r][k] = (fp[r] - f[r]) / d;
            }
        }
        Vec4 delta{};
        if (!gauss_solve(jac, f, delta)) {
            return std::nullopt;
        }
        double step = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            u[k] -= delta[k];
            step = std::max(step, std::abs(delta[k]));
        }
        if (step <= 1e-16 && it > 0) {
            return from_vec(u);
        }
        if (it >= 3) {
            const Vec4 r = ap_residual(s, from_vec(u), p, phi);
            double rmax = 0.0;
            for (double v : r) {
                rmax = std::max(rmax, std::abs(v));
            }
            if (rmax <= 1e-15) {
                return from_vec(u);
            }
        }
    }
    return std::nullopt;
}

double spectral_radius_complex(const Mat2& j)
{
    const std::complex<double> tr(j.a11 + j.a22, 0.0);
    const std::complex<double> det(j.a11 * j.a22 - j.a12 * j.a21, 0.0);
    const std::complex<double> root = std::sqrt(tr * tr - 4.0 * det);
    return std::max(std::abs((tr + root) / 2.0), std::abs((tr - root) / 2.0));
}

bool spectral_stable(const Mat2& j)
{
    return spectral_radius_complex(j) < 1.0;
}

std::optional<double> grid_smallest_positive_root(const std::function<double(double)>& f, double hi,
                                                  std::size_t samples, double lo)
{
    const double ratio = std::log(hi / lo) / static_cast<double>(samples);
    double a = lo;
    double fa = f(a);
    for (std::size_t k = 1; k <= samples; ++k) {
        const double b = lo * std::exp(ratio * static_cast<double>(k));
        const double fb = f(b);
        if (fa == 0.0) {
            return a;
        }
        if ((fa < 0.0) != (fb < 0.0)) {
            double l = a;
            double r = b;
            for (int it = 0; it < 200 && r - l > 1e-14 * r; ++it) {
                const double m = 0.5 * (l + r);
                if ((f(m) < 0.0) == (fa < 0.0)) {
                    l = m;
                }
                else {
                    r = m;
                }
            }
            return 0.5 * (l + r);
        }
        a = b;
        fa = fb;
    }
    return std::nullopt;
}

std::vector<double> rk4_reference(const std::function<void(std::span<const double>, std::span<double>)>& rhs,
                                  std::vector<double> y, double T, std::size_t n)
{
    const double h = T / static_cast<double>(n);
    const std::size_t d = y.size();
    std::vector<double> k1(d), k2(d), k3(d), k4(d), tmp(d);
    for (std::size_t s = 0; s < n; ++s) {
        rhs(y, k1);
        for (std::size_t i = 0; i < d; ++i) {
            tmp[i] = y[i] + 0.5 * h * k1[i];
        }
        rhs(tmp, k2);
        for (std::size_t i = 0; i < d; ++i) {
            tmp[i] = y[i] + 0.5 * h * k2[i];
        }
        rhs(tmp, k3);
        for (std::size_t i = 0; i < d; ++i) {
            tmp[i] = y[i] + h * k3[i];
        }
        rhs(tmp, k4);
        for (std::size_t i = 0; i < d; ++i) {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    return y;
}

} // namespace metapop::oracle
