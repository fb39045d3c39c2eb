// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include "sincconv/sincquad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sincconv/specfun.hpp"

namespace sincconv {

double j_basis(int j, double h, double x) {
    if (h <= 0.0) throw std::invalid_argument("j_basis: h must be positive");
    constexpr double pi = 3.14159265358979323846264338328;
    // si handles +-inf, giving the limits {0, h}.
    return h * (0.5 + si(pi * (x - j * h) / h) / pi);
}

Eigen::RowVectorXd omega_basis(const SincGrid& grid, double x) {
    const Interval& iv = grid.interval;
    if (std::isnan(x) || x < iv.a || x > iv.b) {
        throw std::domain_error("omega_basis: x = " + std::to_string(x)
                                + " outside [" + std::to_string(iv.a) + ", "
                                + std::to_string(iv.b) + "]");
    }
    const int m = grid.m;
    Eigen::RowVectorXd w(m);

    // Collocation: at a stored node the basis row is exactly the Kronecker
    // row. Near b the x -> u map loses relative precision faster than the
    // basis cancels, so resolving this by index keeps the interpolation
    // property exact at every node.
    const auto it = std::lower_bound(grid.nodes.begin(), grid.nodes.end(), x);
    if (it != grid.nodes.end() && *it == x) {
        w.setZero();
        w(static_cast<Eigen::Index>(it - grid.nodes.begin())) = 1.0;
        return w;
    }

    const double u = phi(grid.kind, iv, x);
    const double h = grid.h;
    const int M = grid.M;
    const int N = grid.N;

    Eigen::RowVectorXd s(m);
    for (int j = -M; j <= N; ++j) {
        s(j + M) = sinc((u - j * h) / h);
    }
    for (int j = -M + 1; j <= N - 1; ++j) {
        w(j + M) = s(j + M);
    }

    const double len = iv.length();
    const auto eta = [&](double t) { return (t - iv.a) / len; };
    const auto eta_tilde = [&](double t) { return (iv.b - t) / len; };

    double acc = eta_tilde(x);
    for (int k = -M + 1; k <= N; ++k) {
        acc -= eta_tilde(grid.node(k)) * s(k + M);
    }
    w(0) = acc / eta_tilde(grid.node(-M));

    acc = eta(x);
    for (int k = -M; k <= N - 1; ++k) {
        acc -= eta(grid.node(k)) * s(k + M);
    }
    w(m - 1) = acc / eta(grid.node(N));

    return w;
}

IndefMatrix build_A(const SincGrid& grid) {
    const int m = grid.m;
    Eigen::MatrixXd A(m, m);
    // delta^(-1) depends only on i - j; precompute the 2m - 1 distinct values.
    std::vector<double> delta(static_cast<size_t>(2 * m - 1));
    for (int k = -(m - 1); k <= m - 1; ++k) {
        delta[static_cast<size_t>(k + m - 1)] = delta_im1(k);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            A(i, j) = grid.h * delta[static_cast<size_t>(i - j + m - 1)]
                      * grid.weights[static_cast<size_t>(j)];
        }
    }
    return IndefMatrix{grid, std::move(A)};
}

Eigen::VectorXd sample(const SincGrid& grid,
                       const std::function<double(double)>& g) {
    Eigen::VectorXd v(grid.m);
    for (int i = 0; i < grid.m; ++i) {
        const double x = grid.nodes[static_cast<size_t>(i)];
        const double gi = g(x);
        if (!std::isfinite(gi)) {
            throw std::runtime_error("sample: g is not finite at node j = "
                                     + std::to_string(i - grid.M) + " (x = "
                                     + std::to_string(x) + ")");
        }
        v(i) = gi;
    }
    return v;
}

double apply_indef(const IndefMatrix& mat,
                   const std::function<double(double)>& g, double x) {
    const Eigen::VectorXd c = mat.A * sample(mat.grid, g);
    return omega_basis(mat.grid, x).dot(c);
}

double apply_indef_original(const SincGrid& grid,
                            const std::function<double(double)>& g, double x) {
    const Eigen::VectorXd v = sample(grid, g);
    const double u = phi(grid.kind, grid.interval, x);
    double acc = 0.0;
    for (int j = -grid.M; j <= grid.N; ++j) {
        acc += v(j + grid.M) * grid.weight(j) * j_basis(j, grid.h, u);
    }
    return acc;
}

} // namespace sincconv
