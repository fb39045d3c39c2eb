// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include "sincconv/conv.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sincconv {

ConvApproximant::ConvApproximant(SincGrid grid, Eigen::VectorXd coeffs,
                                 MatFunMethod method_used, ConvDiagnostics diag)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)),
      method_used_(method_used), diag_(diag) {
    if (!coeffs_.allFinite()) {
        throw std::runtime_error(
            "ConvApproximant: non-finite coefficient vector");
    }
}

double ConvApproximant::eval(double x) const {
    return omega_basis(grid_, x).dot(coeffs_);
}

double ConvApproximant::max_error(const std::function<double(double)>& reference,
                                  int points) const {
    if (points < 2) throw std::invalid_argument("max_error: points must be >= 2");
    const double a = grid_.interval.a;
    const double len = grid_.interval.length();
    double worst = 0.0;
    for (int k = 0; k < points; ++k) {
        const double x = a + len * k / (points - 1);
        worst = std::max(worst, std::fabs(eval(x) - reference(x)));
    }
    return worst;
}

ConvApproximant build_convolution(TransformKind kind, const Interval& iv,
                                  double d, int n, const LaplaceSymbol& F,
                                  const std::function<double(double)>& g,
                                  MatFunMethod method) {
    SincGrid grid = make_grid(kind, iv, d, n, GridMode::Balanced());
    const IndefMatrix indef = build_A(grid);
    const Eigen::VectorXd gv = sample(grid, g);

    MatFunResult fa;
    MatFunMethod used = method;
    if (method == MatFunMethod::contour) {
        fa = matfun_contour(indef.A, F);
    } else {
        fa = matfun_eig(indef.A, F);
        used = MatFunMethod::eig;
        if (method == MatFunMethod::automatic && fa.cond_warning) {
            const double cond = fa.cond_estimate;
            const double dist = fa.eig_singularity_distance;
            fa = matfun_contour(indef.A, F);
            fa.cond_estimate = cond;
            fa.eig_singularity_distance = dist;
            used = MatFunMethod::contour;
        }
    }

    Eigen::VectorXd coeffs = fa.value * gv;
    if (!coeffs.allFinite()) {
        throw std::runtime_error(
            "build_convolution: matrix function overflow/underflow produced "
            "non-finite coefficients");
    }

    ConvDiagnostics diag;
    diag.cond_estimate = fa.cond_estimate;
    diag.imag_residue = fa.imag_residue;
    diag.eig_singularity_min_distance = fa.eig_singularity_distance;
    diag.cond_warning = fa.cond_warning;
    diag.zero_coeffs = coeffs.isZero(0.0);
    return ConvApproximant(std::move(grid), std::move(coeffs), used, diag);
}

} // namespace sincconv
