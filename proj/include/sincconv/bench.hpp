// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SINCCONV_BENCH_HPP
#define SINCCONV_BENCH_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "sincconv/conv.hpp"
#include "sincconv/matfun.hpp"

namespace sincconv {

// One of the nine benchmark convolutions p(x) = int_0^x f(x-t) g(t) dt on
// [0, 2], with its Laplace symbol F(s) = fhat(1/s), closed-form reference,
// and per-method strip widths.
struct ExampleProblem {
    int id = 0;
    std::function<double(double)> g;
    LaplaceSymbol symbol;
    std::function<double(double)> reference;
    std::function<double(double)> kernel;  // f, used by quadrature cross-checks
    double d_se = 3.14;
    double d_de = 1.57;
    bool expect_convergence_de = true;
};

struct SweepRecord {
    int example_id = 0;
    TransformKind method = TransformKind::se;
    int n = 0;
    int m = 0;
    double h = 0.0;
    double max_error = 0.0;
    double build_seconds = 0.0;
    double eval_seconds = 0.0;
    std::string flag = "ok";  // ok | zero_coeffs | nonfinite
};

enum class RateModel {
    se_root_exp,  // log err = log C - c sqrt(n)
    de_milog,     // log err = log C - c n / log(2 d n / mu), i.e. -c / h
};

struct RateFit {
    double c = 0.0;
    double C = 0.0;
    int points_used = 0;
};

// Benchmark interval fixed by the experiment setup.
inline Interval bench_interval() { return Interval(0.0, 2.0); }

ExampleProblem example(int id);

// One record per (id, method, n) triple, sorted by (id, method, n).
// Individual construction failures are recorded in-band with a NaN error and
// the nonfinite flag; the sweep never aborts. workers > 1 runs triples in
// parallel with order-stable collection.
std::vector<SweepRecord> run_sweep(const std::vector<int>& ids,
                                   const std::vector<TransformKind>& methods,
                                   const std::vector<int>& n_list,
                                   int workers = 1,
                                   MatFunMethod matfun = MatFunMethod::automatic,
                                   int error_points = 200);

// Least-squares fit of log(max_error) against -sqrt(n) (SE) or -n/log(2dn)
// (DE), ignoring plateau records (max_error < 1e-13) and the smallest
// remaining n. Throws std::runtime_error with fewer than 4 usable points.
RateFit fit_rate(const std::vector<SweepRecord>& records, RateModel model);

// CSV: header `example,method,n,m,h,max_error,build_seconds,eval_seconds,flag`
// with lowercase method names and 17-significant-digit numbers.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records);

} // namespace sincconv

#endif
