// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SINCCONV_SINCQUAD_HPP
#define SINCCONV_SINCQUAD_HPP

#include <functional>

#include <Eigen/Dense>

#include "sincconv/transform.hpp"

namespace sincconv {

// The m x m matrix A_m = h I_m^(-1) D_m with entries
//   A[i][j] = h delta^(-1)_{i-j} psi'(j h),   i, j = -M..N
// (row = output node, column = input node), stored dense with the usual
// offset-by-M index mapping.
struct IndefMatrix {
    SincGrid grid;
    Eigen::MatrixXd A;
};

// Integrated sinc basis J(j,h)(x) = h {1/2 + Si(pi (x - j h)/h)/pi}.
// Accepts extended-real x: J -> 0 as x -> -inf and J -> h as x -> +inf.
double j_basis(int j, double h, double x);

// Row vector of the m boundary-corrected basis functions at x in [a, b].
// Interior entries are sinc((phi(x) - j h)/h); the first and last entries
// carry the linear corrections that make the basis exact at the endpoints.
// At a grid node the row is the corresponding Kronecker row.
Eigen::RowVectorXd omega_basis(const SincGrid& grid, double x);

IndefMatrix build_A(const SincGrid& grid);

// Samples g at the grid nodes. Throws std::runtime_error naming the node if a
// sample is not finite.
Eigen::VectorXd sample(const SincGrid& grid,
                       const std::function<double(double)>& g);

// Mat-vec friendly Sinc indefinite integration:
//   omega(x) . (A . V g)  ~  int_a^x g(t) dt
double apply_indef(const IndefMatrix& mat,
                   const std::function<double(double)>& g, double x);

// Original (Haber / Muhammad-Mori) form using J(j,h) o phi as basis:
//   sum_j g(psi(j h)) psi'(j h) J(j,h)(phi(x))
double apply_indef_original(const SincGrid& grid,
                            const std::function<double(double)>& g, double x);

} // namespace sincconv

#endif
