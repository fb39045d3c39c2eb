// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SINCCONV_REFQUAD_HPP
#define SINCCONV_REFQUAD_HPP

#include <functional>

namespace sincconv {

// Reference quadrature for cross-checks: level-doubling tanh-sinh rule on a
// finite interval. Deliberately independent of the Sinc machinery in this
// library (different nodes, different assembly); tolerates integrable
// endpoint singularities. Non-finite integrand samples are treated as zero,
// which is only reached within ~1e-300 of an endpoint.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, int max_level = 12);

} // namespace sincconv

#endif
