// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SINCCONV_TRANSFORM_HPP
#define SINCCONV_TRANSFORM_HPP

#include <vector>

namespace sincconv {

// Finite interval [a, b] with a < b.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_);
    double length() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
};

enum class TransformKind { se, de };

// Grid sizing mode. Balanced uses M = N = n with
//   h = sqrt(pi d / n)        (SE)
//   h = log(2 d n) / n        (DE)
// Weighted(alpha, beta) uses mu = min(alpha, beta) with
//   h = sqrt(pi d / (mu n))   (SE)
//   h = log(2 d n / mu) / n   (DE)
// and the asymmetric truncation rules for M, N.
struct GridMode {
    bool balanced = true;
    double alpha = 1.0;
    double beta = 1.0;

    static GridMode Balanced() { return {}; }
    static GridMode Weighted(double alpha, double beta);
};

struct SincGrid {
    TransformKind kind;
    Interval interval;
    double d;  // strip half-width
    int n;
    double h;
    int M;
    int N;
    int m;  // M + N + 1
    std::vector<double> nodes;    // psi(j h), j = -M..N
    std::vector<double> weights;  // psi'(j h)

    // Logical index j in [-M, N] maps to array index j + M.
    double node(int j) const { return nodes[static_cast<size_t>(j + M)]; }
    double weight(int j) const { return weights[static_cast<size_t>(j + M)]; }
};

// The variable transformation mapping R onto (a, b):
//   SE: psi(u) = (b-a)/2 tanh(u/2) + (b+a)/2
//   DE: psi(u) = (b-a)/2 tanh(pi/2 sinh u) + (b+a)/2
double psi(TransformKind kind, const Interval& iv, double u);

// Derivative psi'(u); positive, underflows gracefully to 0 for large |u|.
double psi_prime(TransformKind kind, const Interval& iv, double u);

// Inverse transformation; returns -inf at x = a and +inf at x = b.
// Throws std::domain_error for x outside [a, b].
double phi(TransformKind kind, const Interval& iv, double x);

// Builds the Sinc grid for the given step-size/truncation mode.
// Requires 0 < d < pi (SE) or 0 < d < pi/2 (DE); DE additionally requires
// 2 d n / mu > 1 so that h > 0. Throws std::invalid_argument otherwise.
SincGrid make_grid(TransformKind kind, const Interval& iv, double d, int n,
                   const GridMode& mode = GridMode::Balanced());

} // namespace sincconv

#endif
