// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include "sincconv/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace sincconv {

namespace {

constexpr double pi = 3.14159265358979323846264338328;

// Modified Lentz evaluation of the continued fraction for E1(i x), x > 0.
// Yields Si(x) = pi/2 + Im(h) with h = (cos x - i sin x) * CF. Converges for
// x >= ~2; used here for x > 4 where the Taylor series starts to cancel.
double si_continued_fraction(double x) {
    using cd = std::complex<double>;
    constexpr double eps = 1e-16;
    constexpr double tiny = 1e-290;
    constexpr int max_iter = 20000;

    cd b(1.0, x);
    cd c(1.0 / tiny, 0.0);
    cd d = 1.0 / b;
    cd h = d;
    for (int k = 2; k <= max_iter; ++k) {
        const double a = -static_cast<double>(k - 1) * (k - 1);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cd del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    h *= cd(std::cos(x), -std::sin(x));
    return pi / 2 + h.imag();
}

// Taylor series sum_{k>=0} (-1)^k x^(2k+1) / ((2k+1)(2k+1)!), Kahan-compensated.
double si_series(double x) {
    double term = x;
    double sum = x;
    double comp = 0.0;
    const double x2 = x * x;
    for (int k = 1; k <= 60; ++k) {
        const double two_k = 2.0 * k;
        term *= -x2 * (two_k - 1.0) / ((two_k + 1.0) * (two_k + 1.0) * two_k);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

} // namespace

double sinc(double x) {
    if (std::isnan(x)) return x;
    if (std::isinf(x)) return 0.0;
    const double px = pi * x;
    if (std::fabs(px) < 1e-6) return 1.0 - px * px / 6.0;
    return std::sin(px) / px;
}

double si(double x) {
    if (std::isnan(x)) return x;
    if (std::isinf(x)) return std::signbit(x) ? -pi / 2 : pi / 2;
    const double ax = std::fabs(x);
    const double v = (ax <= 4.0) ? si_series(ax) : si_continued_fraction(ax);
    return std::signbit(x) ? -v : v;
}

double sigma(long long k) {
    if (k == 0) return 0.0;
    const double v = si(pi * static_cast<double>(k < 0 ? -k : k)) / pi;
    return k < 0 ? -v : v;
}

double delta_im1(long long k) {
    return 0.5 + sigma(k);
}

double erf(double x) {
    return std::erf(x);
}

namespace {

// Fresnel series in the pi/2 t^2 convention; accurate for |x| <= ~1.8.
void fresnel_series(double x, double& c_out, double& s_out) {
    const double z = pi / 2 * x * x;
    const double z2 = z * z;
    // C(x) = sum (-1)^k x z^(2k) / ((2k)! (4k+1))
    double sum_c = x;
    double tc = x; // x z^(2k) / (2k)!
    for (int k = 1; k <= 40; ++k) {
        tc *= -z2 / ((2.0 * k - 1.0) * (2.0 * k));
        const double add = tc / (4.0 * k + 1.0);
        sum_c += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum_c)) break;
    }
    // S(x) = sum (-1)^k x z^(2k+1) / ((2k+1)! (4k+3))
    double sum_s = x * z / 3.0;
    double ts = x * z; // x z^(2k+1) / (2k+1)!
    for (int k = 1; k <= 40; ++k) {
        ts *= -z2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double add = ts / (4.0 * k + 3.0);
        sum_s += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum_s)) break;
    }
    c_out = sum_c;
    s_out = sum_s;
}

// Modified Lentz continued fraction on the complementary error function of
// z = sqrt(pi)(1-i)x/2; valid for |x| > ~1.5 (used for |x| > 1.8).
void fresnel_cf(double x, double& c_out, double& s_out) {
    using cd = std::complex<double>;
    constexpr double eps = 1e-16;
    constexpr double tiny = 1e-290;
    constexpr int max_iter = 50000;

    const double pix2 = pi * x * x;
    cd b(1.0, -pix2);
    cd c(1.0 / tiny, 0.0);
    cd d = 1.0 / b;
    cd h = d;
    long long n = -1;
    for (int k = 2; k <= max_iter; ++k) {
        n += 2;
        const double a = -static_cast<double>(n) * (n + 1);
        b += 4.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cd del = c * d;
        h *= del;
        if (std::fabs(del.real() - 1.0) + std::fabs(del.imag()) < eps) break;
    }
    h *= cd(x, -x);
    const cd phase(std::cos(pix2 / 2), std::sin(pix2 / 2));
    const cd cs = cd(0.5, 0.5) * (1.0 - phase * h);
    c_out = cs.real();
    s_out = cs.imag();
}

void fresnel(double x, double& c_out, double& s_out) {
    if (std::isnan(x)) { c_out = s_out = x; return; }
    const double ax = std::fabs(x);
    double c, s;
    if (std::isinf(x)) {
        c = s = 0.5;
    } else if (ax <= 1.8) {
        fresnel_series(ax, c, s);
    } else {
        fresnel_cf(ax, c, s);
    }
    if (std::signbit(x)) { c = -c; s = -s; }
    c_out = c;
    s_out = s;
}

} // namespace

double fresnel_c(double x) {
    double c, s;
    fresnel(x, c, s);
    return c;
}

double fresnel_s(double x) {
    double c, s;
    fresnel(x, c, s);
    return s;
}

double bessel_j0(double x) {
    if (std::isnan(x)) return x;
    const double ax = std::fabs(x);
    if (ax <= 12.0) {
        // Ascending series sum (-1)^k (x^2/4)^k / (k!)^2.
        const double q = ax * ax / 4.0;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= -q / (static_cast<double>(k) * k);
            sum += term;
            if (std::fabs(term) < 1e-18 * (std::fabs(sum) + 1e-30)) break;
        }
        return sum;
    }
    // Hankel asymptotic expansion, adequate beyond the series range.
    const double ix2 = 1.0 / (ax * ax);
    const double P = 1.0 + ix2 * (-0.0703125 + ix2 * (0.112152099609375
                     + ix2 * (-0.5725014209747314)));
    const double Q = (1.0 / ax) * (-0.125 + ix2 * (0.0732421875
                     + ix2 * (-0.2271080017089844)));
    const double chi = ax - pi / 4;
    return std::sqrt(2.0 / (pi * ax)) * (P * std::cos(chi) - Q * std::sin(chi));
}

double gamma_fn(double x) {
    if (std::isnan(x)) return x;
    if (x <= 0.0 && x == std::floor(x)) {
        throw std::domain_error("gamma_fn: pole at nonpositive integer x = "
                                + std::to_string(x));
    }
    // Lanczos, g = 7, 9 coefficients.
    static const double coef[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    if (x < 0.5) {
        // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    double acc = coef[0];
    for (int i = 1; i < 9; ++i) acc += coef[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

double heaviside(double x) {
    return x < 0.0 ? 0.0 : 1.0;
}

} // namespace sincconv
