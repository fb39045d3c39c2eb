// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>

#include "sincconv/bench.hpp"
#include "sincconv/conv.hpp"
#include "sincconv/sincquad.hpp"

using namespace sincconv;
using cd = std::complex<double>;

namespace {
const Interval iv02(0.0, 2.0);
const auto root_t = [](double t) { return std::sqrt(t); };
}

TEST_CASE("identity symbol reduces to indefinite integration") {
    const LaplaceSymbol ident([](cd z) { return z; });
    for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
        const double d = (kind == TransformKind::se) ? 3.14 : 1.57;
        for (int n : {4, 16}) {
            const ConvApproximant approx =
                build_convolution(kind, iv02, d, n, ident, root_t);
            const IndefMatrix mat = build_A(approx.grid());
            const Eigen::VectorXd direct = mat.A * sample(approx.grid(), root_t);
            CHECK((approx.coeffs() - direct).cwiseAbs().maxCoeff() <= 1e-12);
            for (int k = 0; k <= 50; ++k) {
                const double x = iv02.a + iv02.length() * k / 50.0;
                CHECK(std::fabs(approx.eval(x) - apply_indef(mat, root_t, x))
                      <= 1e-12);
            }
        }
    }
}

TEST_CASE("example 1 DE hits the closed form at x = 2") {
    const ExampleProblem prob = example(1);
    const ConvApproximant approx = build_convolution(
        TransformKind::de, iv02, 1.57, 48, prob.symbol, prob.g);
    CHECK(std::fabs(approx.eval(2.0) - 1.5084944665313014) <= 1e-10);
    CHECK(std::fabs(approx.eval(0.0)) <= 1e-10);
    CHECK(approx.method_used() == MatFunMethod::eig);
    CHECK_FALSE(approx.diagnostics().zero_coeffs);
}

TEST_CASE("example 3 DE value at x = 1") {
    const ExampleProblem prob = example(3);
    const ConvApproximant approx = build_convolution(
        TransformKind::de, iv02, 1.57, 48, prob.symbol, prob.g);
    // (1/4)(sin 2 - 2 cos 2)
    CHECK(std::fabs(approx.eval(1.0) - 0.43539777497999162) <= 1e-9);
}

TEST_CASE("eval at a node returns the coefficient") {
    const ExampleProblem prob = example(1);
    const ConvApproximant approx = build_convolution(
        TransformKind::se, iv02, 3.14, 12, prob.symbol, prob.g);
    const SincGrid& grid = approx.grid();
    for (int i = 0; i < grid.m; i += 5) {
        CHECK(std::fabs(approx.eval(grid.nodes[i]) - approx.coeffs()(i)) <= 1e-12);
    }
}

TEST_CASE("example 4 SE converges despite the pole of F on the right half plane") {
    const ExampleProblem prob = example(4);
    const ConvApproximant approx = build_convolution(
        TransformKind::se, iv02, 3.14, 32, prob.symbol, prob.g);
    CHECK(approx.max_error(prob.reference) <= 1e-4);
}

TEST_CASE("linearity of the coefficient pipeline in g") {
    const ExampleProblem prob = example(3);
    const auto g1 = [](double t) { return std::sqrt(t); };
    const auto g2 = [](double t) { return 1.0 / (1.0 + t); };
    const double al = 2.0, be = -0.5;
    const auto build = [&](const std::function<double(double)>& g) {
        return build_convolution(TransformKind::se, iv02, 3.14, 10,
                                 prob.symbol, g);
    };
    const Eigen::VectorXd combined =
        build([&](double t) { return al * g1(t) + be * g2(t); }).coeffs();
    const Eigen::VectorXd split = al * build(g1).coeffs() + be * build(g2).coeffs();
    CHECK((combined - split).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("eig-built and contour-built approximants agree for entire symbols") {
    for (int id : {1, 3}) {
        const ExampleProblem prob = example(id);
        for (int n : {8, 16}) {
            const ConvApproximant via_eig = build_convolution(
                TransformKind::de, iv02, prob.d_de, n, prob.symbol, prob.g,
                MatFunMethod::eig);
            const ConvApproximant via_contour = build_convolution(
                TransformKind::de, iv02, prob.d_de, n, prob.symbol, prob.g,
                MatFunMethod::contour);
            CHECK(via_contour.method_used() == MatFunMethod::contour);
            const double gap = via_eig.max_error(
                [&](double x) { return via_contour.eval(x); });
            CHECK(gap <= 1e-8);
        }
    }
}

TEST_CASE("example 9 DE degenerates as documented") {
    const ExampleProblem prob = example(9);
    for (int n : {8, 16}) {
        const ConvApproximant approx = build_convolution(
            TransformKind::de, iv02, prob.d_de, n, prob.symbol, prob.g);
        const double err = approx.max_error(prob.reference);
        const bool degenerate = approx.diagnostics().zero_coeffs || err >= 1e-2;
        CHECK(degenerate);
    }
}

TEST_CASE("max_error of the approximant against itself is zero") {
    const ExampleProblem prob = example(1);
    const ConvApproximant approx = build_convolution(
        TransformKind::de, iv02, 1.57, 10, prob.symbol, prob.g);
    CHECK(approx.max_error([&](double x) { return approx.eval(x); }) == 0.0);
}

TEST_CASE("example 1 DE reaches the machine plateau by n = 50") {
    const ExampleProblem prob = example(1);
    const ConvApproximant approx = build_convolution(
        TransformKind::de, iv02, 1.57, 50, prob.symbol, prob.g);
    CHECK(approx.max_error(prob.reference) <= 1e-12);
}

TEST_CASE("eval outside the interval is a domain error") {
    const ExampleProblem prob = example(1);
    const ConvApproximant approx = build_convolution(
        TransformKind::de, iv02, 1.57, 6, prob.symbol, prob.g);
    CHECK_THROWS_AS((void)approx.eval(-0.5), std::domain_error);
    CHECK_THROWS_AS((void)approx.eval(2.5), std::domain_error);
}
