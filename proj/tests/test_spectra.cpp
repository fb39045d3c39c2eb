// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "sincconv/sincquad.hpp"
#include "sincconv/spectra.hpp"

using namespace sincconv;

namespace {
const Interval iv02(0.0, 2.0);
}

TEST_CASE("im1 spectrum for small orders") {
    const SpectrumReport one = spectrum_im1(1);
    CHECK(one.m == 1);
    CHECK(one.min_real_part == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(one.spectral_radius == doctest::Approx(0.5).epsilon(1e-15));

    CHECK(spectrum_im1(3).min_real_part > 0.0);
    CHECK(spectrum_im1(257).min_real_part > 0.0);
    CHECK_THROWS_AS((void)spectrum_im1(2000), std::invalid_argument);
}

TEST_CASE("im1 matrix is Toeplitz with the delta entries") {
    const Eigen::MatrixXd T = im1_matrix(4);
    for (int i = 0; i < 4; ++i) {
        CHECK(T(i, i) == 0.5);
        for (int j = 0; j < 3; ++j) {
            CHECK(T(j, j + 1) == T(0, 1));
            CHECK(T(j + 1, j) == T(1, 0));
        }
    }
    CHECK(T(0, 1) + T(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("spectral radius contracts along n") {
    for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
        const double d = (kind == TransformKind::se) ? 3.14 : 1.57;
        const auto reports = contraction_sweep(kind, iv02, d, {4, 16, 64});
        REQUIRE(reports.size() == 3);
        CHECK(reports[0].spectral_radius > reports[1].spectral_radius);
        CHECK(reports[1].spectral_radius > reports[2].spectral_radius);
        CHECK(reports[0].spectral_radius > 0.0);
        CHECK(reports[2].spectral_radius < 0.5 * reports[0].spectral_radius);
        for (const auto& rep : reports) {
            CHECK(rep.m == 2 * rep.n + 1);
            CHECK(rep.eigenvalues.size() == rep.m);
        }
    }
}

TEST_CASE("A_m scales linearly with the interval length") {
    const double L = 3.0;
    const IndefMatrix base = build_A(make_grid(TransformKind::se, iv02, 3.14, 6));
    const IndefMatrix scaled =
        build_A(make_grid(TransformKind::se, Interval(0.0, 6.0), 3.14, 6));
    CHECK((scaled.A - L * base.A).cwiseAbs().maxCoeff() <= 1e-13);

    const SpectrumReport rep_base = spectrum_a(TransformKind::se, iv02, 3.14, 6);
    const SpectrumReport rep_scaled =
        spectrum_a(TransformKind::se, Interval(0.0, 6.0), 3.14, 6);
    CHECK(rep_scaled.spectral_radius
          == doctest::Approx(L * rep_base.spectral_radius).epsilon(1e-12));
}

TEST_CASE("csv writers emit the documented schemas") {
    const auto reports = contraction_sweep(TransformKind::se, iv02, 3.14, {2});
    std::ostringstream eigs;
    write_eigenvalue_csv(eigs, reports);
    const std::string eig_text = eigs.str();
    CHECK(eig_text.rfind("kind,m,n,re,im\n", 0) == 0);
    CHECK(eig_text.find("se,5,2,") != std::string::npos);

    std::ostringstream summary;
    write_summary_csv(summary, reports);
    CHECK(summary.str().rfind("kind,n,m,spectral_radius,min_real_part\n", 0) == 0);
    CHECK(summary.str().find("se,2,5,") != std::string::npos);
}
