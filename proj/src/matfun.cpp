// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include "sincconv/matfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sincconv {

namespace {

constexpr double pi = 3.14159265358979323846264338328;

std::string fmt_complex(std::complex<double> z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::fabs(z.imag()) << "i";
    return os.str();
}

} // namespace

LaplaceSymbol::LaplaceSymbol(
    std::function<std::complex<double>(std::complex<double>)> f,
    std::vector<std::complex<double>> sing, double radius)
    : eval(std::move(f)), singularities(std::move(sing)),
      analyticity_radius(radius) {
    if (std::isnan(radius) || radius < 0.0) {
        throw std::invalid_argument("LaplaceSymbol: analyticity radius must be >= 0");
    }
    if (radius > 0.0 && std::isfinite(radius)) {
        for (const auto& s : singularities) {
            if (std::abs(s) <= radius) {
                throw std::invalid_argument(
                    "LaplaceSymbol: singularity " + fmt_complex(s)
                    + " lies inside the declared analyticity disk of radius "
                    + std::to_string(radius));
            }
        }
    }
}

EigFactorization eig(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols() || A.rows() < 1) {
        throw std::invalid_argument("eig: matrix must be square and nonempty");
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(A, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eig: QR iteration did not converge for order "
                                 + std::to_string(A.rows()));
    }
    EigFactorization f;
    f.X = solver.eigenvectors();
    f.lambda = solver.eigenvalues();

    const double norm_a = A.norm();
    const double residual = (A.cast<std::complex<double>>() * f.X
                             - f.X * f.lambda.asDiagonal()).norm();
    if (residual > 1e-10 * norm_a + 1e-300) {
        throw std::runtime_error("eig: factorization residual "
                                 + std::to_string(residual)
                                 + " exceeds 1e-10 * ||A||_F");
    }

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(f.X);
    const Eigen::MatrixXcd Xinv = lu.inverse();
    const double n1 = f.X.cwiseAbs().colwise().sum().maxCoeff();
    const double n2 = Xinv.cwiseAbs().colwise().sum().maxCoeff();
    f.cond_estimate = n1 * n2;
    return f;
}

double spectral_radius(const Eigen::MatrixXd& A) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(A, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("spectral_radius: eigensolver did not converge");
    }
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

MatFunResult matfun_eig(const Eigen::MatrixXd& A, const LaplaceSymbol& F) {
    const EigFactorization f = eig(A);
    const Eigen::Index m = A.rows();

    MatFunResult result;
    result.cond_estimate = f.cond_estimate;
    result.cond_warning = f.cond_estimate > 1e12;

    Eigen::VectorXcd fl(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const std::complex<double> lam = f.lambda(i);
        double dist = std::numeric_limits<double>::infinity();
        std::complex<double> nearest;
        for (const auto& s : F.singularities) {
            const double d = std::abs(lam - s);
            if (d < dist) { dist = d; nearest = s; }
        }
        result.eig_singularity_distance =
            std::min(result.eig_singularity_distance, dist);
        const std::complex<double> v = F.eval(lam);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::string msg = "matfun_eig: symbol singular on spectrum: F("
                              + fmt_complex(lam) + ") is not finite";
            if (!F.singularities.empty()) {
                msg += " (nearest declared singularity " + fmt_complex(nearest)
                       + ", distance " + std::to_string(dist) + ")";
            }
            throw std::runtime_error(msg);
        }
        fl(i) = v;
    }

    const Eigen::MatrixXcd G =
        f.X * fl.asDiagonal() * Eigen::PartialPivLU<Eigen::MatrixXcd>(f.X).inverse();
    result.value = G.real();
    const double re_max = result.value.cwiseAbs().maxCoeff();
    result.imag_residue = G.imag().cwiseAbs().maxCoeff()
                          / (re_max > 0.0 ? re_max : 1.0);
    return result;
}

namespace {

// One full trapezoidal pass; returns false if a shifted solve came out
// non-finite (z_k numerically on the spectrum).
bool contour_pass(const Eigen::MatrixXd& A, const LaplaceSymbol& F, double rho,
                  int K, double phase, Eigen::MatrixXcd& acc) {
    const Eigen::Index m = A.rows();
    const Eigen::MatrixXcd Ac = A.cast<std::complex<double>>();
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(m, m);
    acc.setZero(m, m);
    for (int k = 0; k < K; ++k) {
        const double theta = 2.0 * pi * k / K + phase;
        const std::complex<double> eit(std::cos(theta), std::sin(theta));
        const std::complex<double> z = rho * eit;
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(z * I - Ac);
        const Eigen::MatrixXcd R = lu.solve(I);
        if (!R.allFinite()) return false;
        acc += (eit * F.eval(z)) * R;
    }
    acc *= rho / K;
    return true;
}

} // namespace

MatFunResult matfun_contour(const Eigen::MatrixXd& A, const LaplaceSymbol& F,
                            double rho, int K) {
    if (K < 2 || K % 2 != 0) {
        throw std::invalid_argument("matfun_contour: K must be even and >= 2");
    }
    MatFunResult result;
    const double sr = spectral_radius(A);
    if (rho == 0.0) {
        rho = 2.0 * sr;
        const double r = F.analyticity_radius;
        if (std::isfinite(r) && r > 0.0 && rho > r) {
            rho = 0.5 * (sr + r);
            result.radius_warning = true;
        }
        if (rho == 0.0) {
            throw std::invalid_argument(
                "matfun_contour: cannot choose a contour radius for a zero matrix; "
                "pass rho explicitly");
        }
    }

    Eigen::MatrixXcd acc;
    if (!contour_pass(A, F, rho, K, 0.0, acc)) {
        // A quadrature node hit the spectrum to machine precision; offset the
        // phases by switching to K+1 points.
        if (!contour_pass(A, F, rho, K + 1, 0.0, acc)) {
            throw std::runtime_error(
                "matfun_contour: shifted systems singular on both K and K+1 "
                "point rules (rho = " + std::to_string(rho) + ")");
        }
    }
    result.value = acc.real();
    const double re_max = result.value.cwiseAbs().maxCoeff();
    result.imag_residue = acc.imag().cwiseAbs().maxCoeff()
                          / (re_max > 0.0 ? re_max : 1.0);
    return result;
}

} // namespace sincconv
