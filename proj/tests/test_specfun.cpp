// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sincconv/refquad.hpp"
#include "sincconv/specfun.hpp"

using namespace sincconv;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("sinc at the removable singularity and at integers") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(sinc(1.0) == doctest::Approx(0.0).epsilon(0.0).scale(1e-16));
    // 2/pi, reference value from a high-precision evaluation.
    CHECK(sinc(0.5) == doctest::Approx(0.63661977236758134).epsilon(1e-15));
    CHECK(sinc(inf) == 0.0);
    CHECK(sinc(-inf) == 0.0);
    CHECK(std::fabs(sinc(7.0)) < 1e-15);
}

TEST_CASE("si spot values") {
    constexpr double pi = 3.14159265358979323846;
    CHECK(si(0.0) == 0.0);
    // Si(pi) computed independently to 25 digits.
    CHECK(si(pi) == doctest::Approx(1.8519370519824661704).epsilon(1e-15));
    CHECK(si(-pi) == -si(pi));
    CHECK(si(inf) == doctest::Approx(pi / 2));
    CHECK(si(-inf) == doctest::Approx(-pi / 2));
    // Values straddling the series/continued-fraction seam and beyond.
    CHECK(si(3.9999) == doctest::Approx(1.7582220584308408).epsilon(1e-15));
    CHECK(si(4.0) == doctest::Approx(1.7582031389490531).epsilon(1e-15));
    CHECK(si(4.0001) == doctest::Approx(1.7581842183061578).epsilon(1e-15));
    CHECK(si(5.0) == doctest::Approx(1.5499312449446741).epsilon(1e-15));
    CHECK(si(8.0) == doctest::Approx(1.5741868217069421).epsilon(1e-15));
    CHECK(si(16.0) == doctest::Approx(1.6313022682700329).epsilon(1e-15));
    CHECK(si(50.0) == doctest::Approx(1.5516170724859359).epsilon(1e-15));
    CHECK(si(1000.0) == doctest::Approx(1.5702331219687712).epsilon(1e-15));
    CHECK(si(3.2e6) == doctest::Approx(1.5707961974919497).epsilon(1e-15));
}

TEST_CASE("si against the quadrature oracle on modest arguments") {
    double worst = 0.0;
    for (int k = 0; k <= 40; ++k) {
        const double x = -20.0 + k;
        const double ref = integrate(
            [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, x,
            1e-14);
        worst = std::max(worst, std::fabs(si(x) - ref));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("sigma and delta") {
    CHECK(sigma(0) == 0.0);
    CHECK(sigma(1) == doctest::Approx(0.58948987223608364).epsilon(1e-15));
    CHECK(sigma(-1) == -sigma(1));
    CHECK(delta_im1(0) == 0.5);
    CHECK(delta_im1(1) == doctest::Approx(1.0894898722360836).epsilon(1e-15));
    CHECK(delta_im1(-1) == doctest::Approx(-0.089489872236083635).epsilon(1e-13));
    // Exact pair identity, and the large-k limit sigma_k -> 1/2.
    for (long long k = 1; k <= 100; ++k) {
        CHECK(delta_im1(k) + delta_im1(-k) == 1.0);
    }
    CHECK(sigma(1000000) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("erf, fresnel, bessel, gamma spot values") {
    CHECK(sincconv::erf(0.0) == 0.0);
    CHECK(sincconv::erf(1.0)
          == doctest::Approx(0.84270079294971487).epsilon(1e-15));
    CHECK(fresnel_c(1.0) == doctest::Approx(0.77989340037682283).epsilon(1e-14));
    CHECK(fresnel_s(1.0) == doctest::Approx(0.43825914739035477).epsilon(1e-14));
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(bessel_j0(1.0) == doctest::Approx(0.76519768655796655).epsilon(1e-14));
    CHECK(bessel_j0(2.0 * std::sqrt(2.0))
          == doctest::Approx(-0.19654809527046820).epsilon(1e-13));
    CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-14));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    // Independent high-precision reference for the Example 8 constant.
    CHECK(gamma_fn(17.0 / 6.0) == doctest::Approx(1.7245357401374147).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), std::domain_error);
}

TEST_CASE("heaviside convention") {
    CHECK(heaviside(-1e-300) == 0.0);
    CHECK(heaviside(0.0) == 1.0);
    CHECK(heaviside(2.0) == 1.0);
}

TEST_CASE("fresnel matches quadrature through the seam") {
    double worst = 0.0;
    for (int k = 0; k <= 30; ++k) {
        const double x = 0.1 + k * (3.4 - 0.1) / 30.0;
        const double c_ref = integrate(
            [](double t) { return std::cos(1.57079632679489662 * t * t); }, 0.0,
            x, 1e-14);
        const double s_ref = integrate(
            [](double t) { return std::sin(1.57079632679489662 * t * t); }, 0.0,
            x, 1e-14);
        worst = std::max(worst, std::fabs(fresnel_c(x) - c_ref));
        worst = std::max(worst, std::fabs(fresnel_s(x) - s_ref));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("bessel j0 matches its defining integral") {
    // J0(x) = (1/pi) int_0^pi cos(x sin t) dt
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0, 3.5, 4.0, 8.0, 11.0, 14.0}) {
        const double ref = integrate(
            [x](double t) { return std::cos(x * std::sin(t)); }, 0.0,
            3.14159265358979323846, 1e-14) / 3.14159265358979323846;
        worst = std::max(worst, std::fabs(bessel_j0(x) - ref));
    }
    CHECK(worst <= 1e-12);
}
