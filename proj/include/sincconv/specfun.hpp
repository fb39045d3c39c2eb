// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SINCCONV_SPECFUN_HPP
#define SINCCONV_SPECFUN_HPP

// Scalar special functions used by the Sinc bases and by the closed-form
// reference solutions of the benchmark problems. All functions are pure and
// thread-safe.

namespace sincconv {

inline constexpr double euler_gamma = 0.57721566490153286060651209;

// Normalized sinc: sin(pi x)/(pi x), with sinc(0) = 1 and sinc(+-inf) = 0.
double sinc(double x);

// Sine integral Si(x) = int_0^x sin(t)/t dt. Odd; Si(+-inf) = +-pi/2.
// Absolute error <= ~1e-15 over the real line.
double si(double x);

// sigma_k = int_0^k sinc(t) dt = Si(pi k)/pi.
double sigma(long long k);

// delta_k^(-1) = 1/2 + sigma_k. delta_0 = 1/2 exactly and
// delta_k + delta_{-k} = 1 exactly.
double delta_im1(long long k);

double erf(double x);

// Fresnel integrals C(x) = int_0^x cos(pi t^2/2) dt, S(x) likewise with sin.
double fresnel_c(double x);
double fresnel_s(double x);

// Bessel function of the first kind, order zero.
double bessel_j0(double x);

// Gamma function via a 9-term Lanczos approximation (g = 7).
// Throws std::domain_error at nonpositive integers (poles).
double gamma_fn(double x);

// Heaviside step with H(0) = 1 (right-continuous convention).
double heaviside(double x);

} // namespace sincconv

#endif
