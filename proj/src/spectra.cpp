// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include "sincconv/spectra.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "sincconv/sincquad.hpp"
#include "sincconv/specfun.hpp"

namespace sincconv {

namespace {

SpectrumReport report_from(std::string kind, int m, int n,
                           const Eigen::MatrixXd& A) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(A, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("spectrum: eigensolver did not converge for "
                                 + kind + " m = " + std::to_string(m));
    }
    SpectrumReport rep;
    rep.kind = std::move(kind);
    rep.m = m;
    rep.n = n;
    rep.eigenvalues = solver.eigenvalues();
    rep.spectral_radius = rep.eigenvalues.cwiseAbs().maxCoeff();
    rep.min_real_part = rep.eigenvalues.real().minCoeff();
    return rep;
}

void print_fields(std::ostream& os, double re, double im) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", re, im);
    os << buf;
}

} // namespace

Eigen::MatrixXd im1_matrix(int m) {
    if (m < 1) throw std::invalid_argument("im1_matrix: m must be positive");
    Eigen::MatrixXd T(m, m);
    std::vector<double> delta(static_cast<size_t>(2 * m - 1));
    for (int k = -(m - 1); k <= m - 1; ++k) {
        delta[static_cast<size_t>(k + m - 1)] = delta_im1(k);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            T(i, j) = delta[static_cast<size_t>(i - j + m - 1)];
        }
    }
    return T;
}

SpectrumReport spectrum_im1(int m) {
    if (m > 1024) {
        throw std::invalid_argument("spectrum_im1: m > 1024 exceeds the dense "
                                    "desk-scale limit");
    }
    return report_from("im1", m, 0, im1_matrix(m));
}

SpectrumReport spectrum_a(TransformKind kind, const Interval& iv, double d,
                          int n) {
    const SincGrid grid = make_grid(kind, iv, d, n, GridMode::Balanced());
    const IndefMatrix indef = build_A(grid);
    return report_from(kind == TransformKind::se ? "se" : "de", grid.m, n,
                       indef.A);
}

std::vector<SpectrumReport> contraction_sweep(TransformKind kind,
                                              const Interval& iv, double d,
                                              const std::vector<int>& n_list) {
    std::vector<SpectrumReport> reports;
    reports.reserve(n_list.size());
    for (int n : n_list) {
        reports.push_back(spectrum_a(kind, iv, d, n));
    }
    return reports;
}

void write_eigenvalue_csv(std::ostream& os,
                          const std::vector<SpectrumReport>& reports) {
    os << "kind,m,n,re,im\n";
    for (const auto& rep : reports) {
        for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
            os << rep.kind << ',' << rep.m << ',' << rep.n << ',';
            print_fields(os, rep.eigenvalues(i).real(), rep.eigenvalues(i).imag());
            os << '\n';
        }
    }
}

void write_summary_csv(std::ostream& os,
                       const std::vector<SpectrumReport>& reports) {
    os << "kind,n,m,spectral_radius,min_real_part\n";
    for (const auto& rep : reports) {
        os << rep.kind << ',' << rep.n << ',' << rep.m << ',';
        print_fields(os, rep.spectral_radius, rep.min_real_part);
        os << '\n';
    }
}

} // namespace sincconv
