// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include "sincconv/transform.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sincconv {

namespace {

constexpr double pi = 3.14159265358979323846264338328;
constexpr double inf = std::numeric_limits<double>::infinity();

} // namespace

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("Interval: requires finite a < b, got ["
                                    + std::to_string(a_) + ", "
                                    + std::to_string(b_) + "]");
    }
}

GridMode GridMode::Weighted(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("GridMode::Weighted: alpha, beta must be positive");
    }
    GridMode mode;
    mode.balanced = false;
    mode.alpha = alpha;
    mode.beta = beta;
    return mode;
}

double psi(TransformKind kind, const Interval& iv, double u) {
    const double half = 0.5 * iv.length();
    const double mid = iv.midpoint();
    const double t = (kind == TransformKind::se) ? std::tanh(0.5 * u)
                                                 : std::tanh(pi / 2 * std::sinh(u));
    return half * t + mid;
}

double psi_prime(TransformKind kind, const Interval& iv, double u) {
    const double quarter = 0.25 * iv.length();
    if (kind == TransformKind::se) {
        const double c = std::cosh(0.5 * u);
        return quarter / (c * c);
    }
    const double s = pi / 2 * std::sinh(u);
    // sech^2(s) underflows long before cosh(u) overflows; cut early so the
    // product never hits inf/inf.
    if (std::fabs(s) > 350.0) return 0.0;
    const double c = std::cosh(s);
    return pi * quarter * std::cosh(u) / (c * c);
}

double phi(TransformKind kind, const Interval& iv, double x) {
    if (std::isnan(x) || x < iv.a || x > iv.b) {
        throw std::domain_error("phi: x = " + std::to_string(x)
                                + " outside [" + std::to_string(iv.a) + ", "
                                + std::to_string(iv.b) + "]");
    }
    if (x == iv.a) return -inf;
    if (x == iv.b) return inf;
    if (kind == TransformKind::se) {
        return std::log((x - iv.a) / (iv.b - x));
    }
    // atanh via its log closed form, with the argument clamped just inside
    // (-1, 1); the exact endpoints were already handled above.
    double t = (2.0 * x - iv.a - iv.b) / iv.length();
    constexpr double lim = 1.0 - 4.0 * std::numeric_limits<double>::epsilon();
    if (t > lim) t = lim;
    if (t < -lim) t = -lim;
    const double w = 0.5 * std::log((1.0 + t) / (1.0 - t));
    return std::asinh(2.0 / pi * w);
}

SincGrid make_grid(TransformKind kind, const Interval& iv, double d, int n,
                   const GridMode& mode) {
    if (n < 1) throw std::invalid_argument("make_grid: n must be positive");
    const double d_max = (kind == TransformKind::se) ? pi : pi / 2;
    if (!(d > 0.0) || !(d < d_max)) {
        throw std::invalid_argument("make_grid: d = " + std::to_string(d)
                                    + " outside (0, " + std::to_string(d_max)
                                    + ") for this transform");
    }

    const double mu = mode.balanced ? 1.0 : std::min(mode.alpha, mode.beta);
    double h;
    int M, N;
    if (kind == TransformKind::se) {
        h = std::sqrt(pi * d / (mu * n));
        if (mode.balanced) {
            M = N = n;
        } else if (mode.alpha <= mode.beta) {
            M = n;
            N = static_cast<int>(std::ceil(mode.alpha / mode.beta * n));
        } else {
            N = n;
            M = static_cast<int>(std::ceil(mode.beta / mode.alpha * n));
        }
    } else {
        const double arg = 2.0 * d * n / mu;
        if (!(arg > 1.0)) {
            throw std::invalid_argument("make_grid: DE requires 2 d n / mu > 1, got "
                                        + std::to_string(arg));
        }
        h = std::log(arg) / n;
        if (mode.balanced) {
            M = N = n;
        } else if (mode.alpha <= mode.beta) {
            M = n;
            N = n - static_cast<int>(std::floor(std::log(mode.beta / mode.alpha) / h));
        } else {
            N = n;
            M = n - static_cast<int>(std::floor(std::log(mode.alpha / mode.beta) / h));
        }
        // The truncation formula assumes the result stays positive; guard the
        // degenerate parameter combinations.
        if (M < 1) M = 1;
        if (N < 1) N = 1;
    }

    SincGrid grid{kind, iv, d, n, h, M, N, M + N + 1, {}, {}};
    grid.nodes.resize(static_cast<size_t>(grid.m));
    grid.weights.resize(static_cast<size_t>(grid.m));
    for (int j = -M; j <= N; ++j) {
        grid.nodes[static_cast<size_t>(j + M)] = psi(kind, iv, j * h);
        grid.weights[static_cast<size_t>(j + M)] = psi_prime(kind, iv, j * h);
    }

    // Rounding can collapse extreme tail nodes onto an endpoint (the DE tail
    // approaches b faster than doubles can resolve). Nudge such nodes inward
    // by ulps so the vector stays strictly increasing inside (a, b); the
    // displacement is far below the corresponding quadrature weight's scale.
    double hi = iv.b;
    for (int i = grid.m - 1; i >= 0; --i) {
        hi = std::nextafter(hi, iv.a);
        if (grid.nodes[static_cast<size_t>(i)] > hi) {
            grid.nodes[static_cast<size_t>(i)] = hi;
        } else {
            hi = grid.nodes[static_cast<size_t>(i)];
        }
    }
    double lo = iv.a;
    for (int i = 0; i < grid.m; ++i) {
        lo = std::nextafter(lo, iv.b);
        if (grid.nodes[static_cast<size_t>(i)] < lo) {
            grid.nodes[static_cast<size_t>(i)] = lo;
        } else {
            lo = grid.nodes[static_cast<size_t>(i)];
        }
    }
    return grid;
}

} // namespace sincconv
