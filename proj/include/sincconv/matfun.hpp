// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SINCCONV_MATFUN_HPP
#define SINCCONV_MATFUN_HPP

#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace sincconv {

// F(s) = fhat(1/s), the "Laplace transform" of the kernel, together with its
// declared singularity structure. analyticity_radius r > 0 declares F analytic
// on the closed disk |z| <= r; r = infinity means entire; r = 0 means no
// analyticity disk exists (F singular at the origin itself).
struct LaplaceSymbol {
    std::function<std::complex<double>(std::complex<double>)> eval;
    std::vector<std::complex<double>> singularities;
    double analyticity_radius = std::numeric_limits<double>::infinity();

    LaplaceSymbol() = default;
    LaplaceSymbol(std::function<std::complex<double>(std::complex<double>)> f,
                  std::vector<std::complex<double>> sing = {},
                  double radius = std::numeric_limits<double>::infinity());
};

struct EigFactorization {
    Eigen::MatrixXcd X;       // eigenvectors (columns)
    Eigen::VectorXcd lambda;  // eigenvalues
    double cond_estimate;     // ||X||_1 ||X^-1||_1
};

struct MatFunResult {
    Eigen::MatrixXd value;
    // ||Im(.)||_max relative scale diagnostic of the discarded imaginary part.
    double imag_residue = 0.0;
    double cond_estimate = 1.0;
    // Min distance between an eigenvalue and a listed singularity of F
    // (infinity when no singularities are declared). Diagnostic only.
    double eig_singularity_distance = std::numeric_limits<double>::infinity();
    bool cond_warning = false;    // cond_estimate > 1e12
    bool radius_warning = false;  // contour radius squeezed below 2 rho(A)
};

// Dense nonsymmetric eigendecomposition. Throws std::runtime_error if the
// underlying QR iteration fails to converge or the residual
// ||A X - X diag(lambda)||_F exceeds 1e-10 ||A||_F.
EigFactorization eig(const Eigen::MatrixXd& A);

double spectral_radius(const Eigen::MatrixXd& A);

// F(A) = Re(X diag(F(lambda)) X^-1). Throws std::runtime_error ("symbol
// singular on spectrum") if F evaluates non-finite at an eigenvalue; an
// ill-conditioned eigenbasis only sets cond_warning.
MatFunResult matfun_eig(const Eigen::MatrixXd& A, const LaplaceSymbol& F);

// Dunford contour quadrature
//   F(A) = Re[(rho/K) sum_k e^{i theta_k} F(z_k) (z_k I - A)^{-1}],
//   z_k = rho e^{2 pi i k / K},
// trapezoidal on the circle of radius rho > spectral_radius(A). rho = 0
// selects the default 2 spectral_radius(A), pulled down to the midpoint of
// [spectral_radius, r] (with radius_warning) when the declared analyticity
// radius r is smaller. K must be even; a singular shifted solve triggers one
// retry with K+1 phase offset.
MatFunResult matfun_contour(const Eigen::MatrixXd& A, const LaplaceSymbol& F,
                            double rho = 0.0, int K = 256);

} // namespace sincconv

#endif
