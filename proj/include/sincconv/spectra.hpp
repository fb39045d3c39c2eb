// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SINCCONV_SPECTRA_HPP
#define SINCCONV_SPECTRA_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sincconv/transform.hpp"

namespace sincconv {

// Full spectrum of either I_m^(-1) (kind "im1") or A_m (kind "se"/"de"),
// kept whole so eigenvalue clouds can be dumped to CSV.
struct SpectrumReport {
    std::string kind;  // "im1", "se", "de"
    int m = 0;
    int n = 0;  // 0 for im1 (no grid parameter)
    Eigen::VectorXcd eigenvalues;
    double spectral_radius = 0.0;
    double min_real_part = 0.0;
};

// Toeplitz matrix of order m with entries delta^(-1)_{i-j}.
Eigen::MatrixXd im1_matrix(int m);

// Spectrum of I_m^(-1); m <= 1024 (dense desk-scale eigensolve).
SpectrumReport spectrum_im1(int m);

// Spectrum of A_m for one Balanced grid.
SpectrumReport spectrum_a(TransformKind kind, const Interval& iv, double d,
                          int n);

// One report per n, Balanced grids, ordered as given.
std::vector<SpectrumReport> contraction_sweep(TransformKind kind,
                                              const Interval& iv, double d,
                                              const std::vector<int>& n_list);

// CSV: header `kind,m,n,re,im`, one row per eigenvalue.
void write_eigenvalue_csv(std::ostream& os,
                          const std::vector<SpectrumReport>& reports);

// CSV: header `kind,n,m,spectral_radius,min_real_part`, one row per report.
void write_summary_csv(std::ostream& os,
                       const std::vector<SpectrumReport>& reports);

} // namespace sincconv

#endif
