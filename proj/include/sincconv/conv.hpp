// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SINCCONV_CONV_HPP
#define SINCCONV_CONV_HPP

#include <functional>

#include <Eigen/Dense>

#include "sincconv/matfun.hpp"
#include "sincconv/sincquad.hpp"
#include "sincconv/transform.hpp"

namespace sincconv {

enum class MatFunMethod { eig, contour, automatic };

struct ConvDiagnostics {
    double cond_estimate = 1.0;
    double imag_residue = 0.0;
    double eig_singularity_min_distance =
        std::numeric_limits<double>::infinity();
    bool zero_coeffs = false;
    bool cond_warning = false;
};

// The assembled approximant p~(x) = omega_m(x) . F(A_m) V_m g. The length-m
// coefficient vector c = F(A_m) V_m g is computed once at construction;
// evaluation is an O(m) dot product.
class ConvApproximant {
public:
    ConvApproximant(SincGrid grid, Eigen::VectorXd coeffs,
                    MatFunMethod method_used, ConvDiagnostics diag);

    // Evaluates the approximant; throws std::domain_error outside [a, b].
    double eval(double x) const;

    // Max |p~(x_k) - reference(x_k)| over `points` equally spaced x_k
    // spanning [a, b] inclusive of both endpoints.
    double max_error(const std::function<double(double)>& reference,
                     int points = 200) const;

    const SincGrid& grid() const { return grid_; }
    const Eigen::VectorXd& coeffs() const { return coeffs_; }
    MatFunMethod method_used() const { return method_used_; }
    const ConvDiagnostics& diagnostics() const { return diag_; }

private:
    SincGrid grid_;
    Eigen::VectorXd coeffs_;
    MatFunMethod method_used_;
    ConvDiagnostics diag_;
};

// Builds the approximant on a Balanced grid. Non-finite coefficients abort
// with std::runtime_error ("matrix function overflow/underflow"); an all-zero
// coefficient vector is allowed and flagged in the diagnostics. The automatic
// method uses the eigendecomposition and falls back to the contour quadrature
// when the eigenbasis condition estimate exceeds 1e12.
ConvApproximant build_convolution(TransformKind kind, const Interval& iv,
                                  double d, int n, const LaplaceSymbol& F,
                                  const std::function<double(double)>& g,
                                  MatFunMethod method = MatFunMethod::automatic);

} // namespace sincconv

#endif
