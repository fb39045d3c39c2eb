// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "sincconv/sincquad.hpp"
#include "sincconv/specfun.hpp"

using namespace sincconv;

namespace {
constexpr double pi = 3.14159265358979323846;
constexpr double inf = std::numeric_limits<double>::infinity();
const Interval iv02(0.0, 2.0);
}

TEST_CASE("j_basis limits and node value") {
    CHECK(j_basis(3, 0.7, 3 * 0.7) == doctest::Approx(0.35).epsilon(1e-15));
    CHECK(j_basis(0, 1.0, inf) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(j_basis(0, 1.0, -inf) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    // J(0,1)(1) = 1/2 + Si(pi)/pi = delta_1^(-1).
    CHECK(j_basis(0, 1.0, 1.0)
          == doctest::Approx(1.0894898722360836).epsilon(1e-15));
    CHECK(j_basis(0, 1.0, 1.0) == doctest::Approx(delta_im1(1)).epsilon(1e-15));
    CHECK_THROWS_AS(j_basis(0, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("j_basis uniform bound 1.1 h") {
    std::mt19937 rng(424242u);
    std::uniform_int_distribution<int> pick(-20, 20);
    for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
        const double d = (kind == TransformKind::se) ? 3.14 : 1.57;
        const SincGrid grid = make_grid(kind, iv02, d, 20);
        for (int r = 0; r < 5; ++r) {
            const int j = pick(rng);
            double worst = 0.0;
            for (int k = 0; k < 1000; ++k) {
                const double x = iv02.a + iv02.length() * k / 999.0;
                const double u = phi(kind, iv02, x);
                worst = std::max(worst, std::fabs(j_basis(j, grid.h, u)));
            }
            CHECK(worst <= 1.1 * grid.h);
        }
    }
}

TEST_CASE("omega basis is the Kronecker row at nodes") {
    for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
        const double d = (kind == TransformKind::se) ? 3.14 : 1.57;
        for (int n : {2, 8, 32}) {
            const SincGrid grid = make_grid(kind, iv02, d, n);
            for (int i = 0; i < grid.m; ++i) {
                const Eigen::RowVectorXd w = omega_basis(grid, grid.nodes[i]);
                for (int j = 0; j < grid.m; ++j) {
                    CHECK(std::fabs(w(j) - (i == j ? 1.0 : 0.0)) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("omega basis at the interval endpoints") {
    const SincGrid grid = make_grid(TransformKind::se, iv02, 3.14, 6);
    const double len = iv02.length();

    const Eigen::RowVectorXd at_a = omega_basis(grid, iv02.a);
    const double eta_tilde_first = (iv02.b - grid.node(-grid.M)) / len;
    CHECK(at_a(0) == doctest::Approx(1.0 / eta_tilde_first).epsilon(1e-14));
    for (int j = 1; j < grid.m; ++j) {
        CHECK(at_a(j) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    }

    const Eigen::RowVectorXd at_b = omega_basis(grid, iv02.b);
    const double eta_last = (grid.node(grid.N) - iv02.a) / len;
    CHECK(at_b(grid.m - 1) == doctest::Approx(1.0 / eta_last).epsilon(1e-14));
    for (int j = 0; j + 1 < grid.m; ++j) {
        CHECK(at_b(j) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    }

    CHECK_THROWS_AS(omega_basis(grid, 2.5), std::domain_error);
}

TEST_CASE("build_A matches the elementwise formula") {
    // Degenerate 1x1 grid, assembled by hand: A = [h delta_0 psi'(0)].
    SincGrid tiny{TransformKind::se, iv02, 3.14, 1, 0.9, 0, 0, 1,
                  {psi(TransformKind::se, iv02, 0.0)},
                  {psi_prime(TransformKind::se, iv02, 0.0)}};
    const IndefMatrix mat1 = build_A(tiny);
    CHECK(mat1.A(0, 0) == doctest::Approx(0.9 * 0.5 * 0.5).epsilon(1e-15));

    const SincGrid grid = make_grid(TransformKind::se, iv02, 3.14, 1);
    const IndefMatrix mat = build_A(grid);
    CHECK(grid.h == doctest::Approx(3.1407962258433690).epsilon(1e-15));
    REQUIRE(mat.A.rows() == 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(mat.A(i, j)
                  == doctest::Approx(grid.h * delta_im1(i - j)
                                     * grid.weights[j]).epsilon(1e-15));
        }
    }
    // (1/h) A D^-1 recovers the Toeplitz I_m^(-1) structure.
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(mat.A(i, j) / grid.weights[j]
                  == doctest::Approx(mat.A(i + 1, j + 1) / grid.weights[j + 1])
                         .epsilon(1e-14));
        }
    }
}

TEST_CASE("sample evaluates g at nodes and checks finiteness") {
    const SincGrid grid = make_grid(TransformKind::de, iv02, 1.57, 4);
    const Eigen::VectorXd ones = sample(grid, [](double) { return 1.0; });
    CHECK(ones.minCoeff() == 1.0);
    CHECK(ones.maxCoeff() == 1.0);

    const Eigen::VectorXd lin = sample(grid, [](double t) { return t; });
    for (int j = 1; j <= grid.N; ++j) {
        CHECK(lin(grid.M + j) + lin(grid.M - j) == doctest::Approx(2.0).epsilon(1e-12));
    }
    CHECK(sample(grid, [](double t) { return std::sqrt(t); })(grid.M)
          == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_WITH_AS(
        (void)sample(grid, [](double t) { return 1.0 / (t - t); }),
        doctest::Contains("not finite"), std::runtime_error);
}

TEST_CASE("apply_indef integrates constants and sqrt") {
    const IndefMatrix de32 = build_A(make_grid(TransformKind::de, iv02, 1.57, 32));
    const auto one = [](double) { return 1.0; };
    CHECK(std::fabs(apply_indef(de32, one, 2.0) - 2.0) <= 1e-10);
    CHECK(std::fabs(apply_indef(de32, one, 0.0)) <= 1e-10);

    const IndefMatrix se16 = build_A(make_grid(TransformKind::se, iv02, 3.14, 16));
    const auto root = [](double t) { return std::sqrt(t); };
    CHECK(std::fabs(apply_indef(se16, root, 2.0) - 1.8856180831641267) <= 1e-3);
}

TEST_CASE("apply_indef_original matches the closed form and the mat-vec form") {
    const SincGrid de32 = make_grid(TransformKind::de, iv02, 1.57, 32);
    const auto one = [](double) { return 1.0; };
    CHECK(std::fabs(apply_indef_original(de32, one, 2.0) - 2.0) <= 1e-10);
    CHECK(std::fabs(apply_indef_original(de32, one, 0.0)) <= 1e-10);

    // Both formulas approximate the same integral; their gap at interior
    // points is bounded by the sum of the two error bounds. 1e-3 is generous
    // for sqrt(t) at n = 16.
    const SincGrid se16 = make_grid(TransformKind::se, iv02, 3.14, 16);
    const IndefMatrix mat16 = build_A(se16);
    const auto root = [](double t) { return std::sqrt(t); };
    for (int k = 1; k <= 20; ++k) {
        const double x = iv02.a + iv02.length() * k / 21.0;
        CHECK(std::fabs(apply_indef(mat16, root, x)
                        - apply_indef_original(se16, root, x)) <= 1e-3);
    }
}

TEST_CASE("double application reproduces the Cauchy repeated-integral kernel") {
    const IndefMatrix mat = build_A(make_grid(TransformKind::de, iv02, 1.57, 32));
    const auto one = [](double) { return 1.0; };
    const auto inner = [&](double x) { return apply_indef(mat, one, x); };
    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double x = iv02.a + iv02.length() * k / 20.0;
        worst = std::max(worst,
                         std::fabs(apply_indef(mat, inner, x) - 0.5 * x * x));
    }
    CHECK(worst <= 1e-6);
}
